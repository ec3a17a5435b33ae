"""Shared generators and independent oracles for the test suite.

The oracles here recompute expectations by brute force over finite models
(a space of class c behaves like a c-point set for every formula under
test), deliberately avoiding the library code paths they check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from kzero.classpoly import ClassPoly
from kzero.permgroups import PermGroup, Permutation
from kzero.quotients import StratifiedGSpace
from kzero.simplicial import SimplicialComplex


def random_poly(rng: random.Random, variables: tuple[str, ...] = ("x",), max_degree: int = 3) -> ClassPoly:
    p = ClassPoly.zero()
    for _ in range(rng.randint(1, 4)):
        coeff = rng.randint(-3, 3)
        term = ClassPoly.const(coeff)
        for v in variables:
            term = term * ClassPoly.var(v) ** rng.randint(0, max_degree)
        p = p + term
    return p


def random_complex(rng: random.Random, n_min: int = 1, n_max: int = 7) -> SimplicialComplex:
    n = rng.randint(n_min, n_max)
    facets = []
    for _ in range(rng.randint(1, 5)):
        size = rng.randint(1, n)
        facets.append(rng.sample(range(1, n + 1), size))
    return SimplicialComplex(n, facets)


def random_small_facet_complex(rng: random.Random, n_min: int = 5, n_max: int = 9) -> SimplicialComplex:
    """A complex with >= 2 facets satisfying 2(dim K + 1) < n."""
    while True:
        n = rng.randint(n_min, n_max)
        max_size = (n - 1) // 2
        if max_size < 1:
            continue
        facets = []
        for _ in range(rng.randint(2, 5)):
            size = rng.randint(1, max_size)
            facets.append(rng.sample(range(1, n + 1), size))
        K = SimplicialComplex(n, facets)
        if len(K.facets) >= 2:
            return K


def random_subgroup(rng: random.Random, n: int) -> PermGroup:
    gens = [
        Permutation(rng.sample(range(1, n + 1), n))
        for _ in range(rng.randint(1, 2))
    ]
    return PermGroup.generate(n, gens)


def left_cosets(G: PermGroup, subgroup_elements: list[Permutation]) -> list[frozenset[Permutation]]:
    """Left cosets t*H, listed by their least member."""
    by_rep: dict[Permutation, frozenset[Permutation]] = {}
    for t in G:
        members = frozenset(t * h for h in subgroup_elements)
        by_rep[min(members)] = members
    return [by_rep[k] for k in sorted(by_rep)]


def random_gspace(rng: random.Random, max_strata: int = 20) -> StratifiedGSpace:
    """A stratified G-space with |G| <= 120, built from coset actions of G.

    Each block of strata is a transitive G-set G/H for a random cyclic
    subgroup H, so orbits and nontrivial stabilizers arise naturally; the
    block shares one random class, as the model requires.
    """
    n = rng.randint(2, 5)
    G = random_subgroup(rng, n)
    blocks: list[list[frozenset[Permutation]]] = []
    total = 0
    for _ in range(rng.randint(1, 4)):
        g = rng.choice(G.elements)
        subgroup = [g]
        h = g
        while not h.is_identity():
            h = h * g
            subgroup.append(h)
        cosets = left_cosets(G, subgroup)
        if total + len(cosets) > max_strata:
            continue
        blocks.append(cosets)
        total += len(cosets)
    if not blocks:
        blocks = [left_cosets(G, list(G.elements))]
        total = 1
    strata: list[tuple[str, ClassPoly]] = []
    coset_index: dict[int, dict[Permutation, int]] = {}
    for b, cosets in enumerate(blocks):
        cls = random_poly(rng)
        lookup: dict[Permutation, int] = {}
        for c, members in enumerate(cosets):
            for t in members:
                lookup[t] = len(strata) + c + 1
        coset_index[b] = lookup
        for c in range(len(cosets)):
            strata.append((f"b{b}c{c}", cls))
    gen_action = []
    for s in G.generators:
        images = [0] * len(strata)
        for b, cosets in enumerate(blocks):
            lookup = coset_index[b]
            for c, members in enumerate(cosets):
                rep = min(members)
                src = lookup[rep]
                images[src - 1] = lookup[s * rep]
        gen_action.append(Permutation(images))
    return StratifiedGSpace(strata, G, gen_action)


def count_arrangement_points(K: SimplicialComplex, c: int) -> int:
    """|Delta_K(X)| for X a c-point set: tuples where, for some facet, all
    coordinates outside the facet agree."""
    n = K.n
    count = 0
    for tup in product(range(c), repeat=n):
        for f in K.facets:
            outside = {tup[i - 1] for i in range(1, n + 1) if i not in f}
            if len(outside) <= 1:
                count += 1
                break
    return count


def count_polyhedral_product_points(K: SimplicialComplex, cx: int, ca: int) -> int:
    """|(X, A)^K| for X = {0..cx-1}, A = {0..ca-1}: tuples whose set of
    coordinates outside A spans a face of K."""
    count = 0
    if K.is_empty():
        return ca ** K.n
    faces = set(K.all_faces())
    for tup in product(range(cx), repeat=K.n):
        support = tuple(i for i in range(1, K.n + 1) if tup[i - 1] >= ca)
        if any(set(support) <= set(f) for f in faces):
            count += 1
    return count


def count_zero_cycle_points(c: int, n: int, d: tuple[int, ...]) -> int:
    """|Z_n^d(X)| for X a c-point set: multiplicity assignments with column
    sums d where no point has every color multiplicity >= n."""
    m = len(d)
    if c == 0:
        return 1 if all(di == 0 for di in d) else 0
    per_color = [
        [comp for comp in product(range(di + 1), repeat=c) if sum(comp) == di]
        for di in d
    ]
    count = 0
    for rows in product(*per_color):
        if all(any(rows[i][p] < n for i in range(m)) for p in range(c)):
            count += 1
    return count


def solve_affine_fixed_points(linear, translation) -> int | None:
    """Independent solver: number of solutions of x = Ax + v (None for infinitely many).

    Row-reduces (A - I | -v) exactly.
    """
    n = len(translation)
    rows = [
        [Fraction(linear[i][j]) - (1 if i == j else 0) for j in range(n)]
        + [-Fraction(translation[i])]
        for i in range(n)
    ]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    for r in range(rank, n):
        if rows[r][n] != 0:
            return 0
    return 1 if rank == n else None
