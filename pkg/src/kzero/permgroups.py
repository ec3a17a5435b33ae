"""Permutations of 1..n, finite permutation groups, and product-space classes.

The class formulas here are all averages over a group:

* quotient of the n-th power by a subgroup G of S_n (Burnside form):
      [X^n / G] = (1/|G|) sum over g in G of x^(number of cycles of g),
  because the fixed set of g acting on X^n is a copy of X^(cycles of g);

* the same quotient summed by cycle type (the form that only needs the
  numbers chi^G(sigma) of G-stable cosets):
      [X^n / G] = (1/n!) sum over cycle types lambda of
                  h_lambda * chi^G(sigma_lambda) * x^(parts of lambda),
  where h_lambda counts permutations of type lambda and chi^G(sigma) counts
  left cosets tG with t^-1 sigma t in G;

* cyclic products: [X^n / (Z/n)] = (1/n) sum over d | n of phi(d) x^(n/d);

* symmetric products: [SP^d(X)] = C(x + d - 1, d) symbolically.

Composition is (p * q)(i) = p(q(i)).  Cycle notation reads and prints as
"(1 2)(3 4)" with fixed points omitted and "()" for the identity.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from math import factorial, gcd
from typing import Iterable, Iterator, Sequence

from .classpoly import ClassPoly, PolyLike, _coerce, binomial
from .errors import InputSyntaxError, PreconditionError


class DegreeTooLargeError(PreconditionError):
    """An operation that enumerates S_n or all partitions hit its degree cap."""


class OrderCapExceededError(PreconditionError):
    """Generating a group exceeded the element cap."""


class PermParseError(InputSyntaxError):
    """Text is not valid cycle notation."""


class Permutation:
    """A permutation of 1..n, stored by its image tuple."""

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {imgs!r}")
        self._images = imgs

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> Permutation:
        """Parse cycle notation like "(1 2)(3 4)"; "()" is the identity."""
        return _parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        return self._images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(self._images[j - 1] for j in other._images)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self._images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least element, sorted by that element."""
        seen = set()
        out: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles, fixed points included."""
        moved = sum(len(c) for c in self.cycles())
        return len(self.cycles()) + (self.degree - moved)

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths as a partition of n, in decreasing order, 1-cycles included."""
        lengths = [len(c) for c in self.cycles()]
        lengths.extend([1] * (self.degree - sum(lengths)))
        return tuple(sorted(lengths, reverse=True))

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.degree + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Permutation) -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation[{self.degree}]{self}"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(text: str, degree: int) -> Permutation:
    stripped = text.strip()
    if not stripped:
        raise PermParseError("empty permutation text")
    body = _CYCLE_RE.sub("", stripped)
    if body.strip():
        raise PermParseError(f"stray text {body.strip()!r} in permutation {text!r}")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    for m in _CYCLE_RE.finditer(stripped):
        parts = [p for p in re.split(r"[,\s]+", m.group(1).strip()) if p]
        if not parts:
            continue
        try:
            entries = [int(p) for p in parts]
        except ValueError:
            raise PermParseError(f"non-integer entry in cycle {m.group(0)!r}") from None
        for v in entries:
            if not 1 <= v <= degree:
                raise PermParseError(f"entry {v} outside 1..{degree} in {text!r}")
            if v in seen:
                raise PermParseError(f"entry {v} repeated in {text!r}")
            seen.add(v)
        for i, v in enumerate(entries):
            images[v - 1] = entries[(i + 1) % len(entries)]
    return Permutation(images)


class PermGroup:
    """A finite group of permutations of 1..n, with its full element list."""

    __slots__ = ("_degree", "_generators", "_elements", "_element_set")

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Iterable[Permutation]):
        self._degree = degree
        self._generators = tuple(generators)
        self._elements = tuple(sorted(elements))
        self._element_set = frozenset(self._elements)
        if Permutation.identity(degree) not in self._element_set:
            raise ValueError("group must contain the identity")

    @classmethod
    def generate(
        cls, degree: int, generators: Iterable[Permutation], cap: int = 1_000_000
    ) -> PermGroup:
        """Close the generators under composition; error beyond ``cap`` elements."""
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} does not match {degree}")
        elements = {Permutation.identity(degree)}
        frontier = list(elements)
        while frontier:
            fresh: list[Permutation] = []
            for g in frontier:
                for s in gens:
                    h = s * g
                    if h not in elements:
                        elements.add(h)
                        fresh.append(h)
                        if len(elements) > cap:
                            raise OrderCapExceededError(
                                f"group generation passed the cap of {cap} elements"
                            )
            frontier = fresh
        return cls(degree, gens, elements)

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        e = Permutation.identity(degree)
        return cls(degree, (), (e,))

    @classmethod
    def cyclic(cls, n: int) -> PermGroup:
        """The cyclic group generated by the n-cycle (1 2 ... n)."""
        if n < 1:
            raise ValueError("cyclic group needs n >= 1")
        if n == 1:
            return cls.trivial(1)
        rot = Permutation([i % n + 1 for i in range(1, n + 1)])
        return cls.generate(n, [rot])

    @classmethod
    def symmetric(cls, n: int) -> PermGroup:
        if n < 1:
            raise ValueError("symmetric group needs n >= 1")
        gens: list[Permutation] = []
        if n >= 2:
            gens.append(Permutation([2, 1] + list(range(3, n + 1))))
        if n >= 3:
            gens.append(Permutation([i % n + 1 for i in range(1, n + 1)]))
        return cls(n, tuple(gens), _symmetric_elements(n))

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._generators

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return self._elements

    @property
    def order(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._element_set

    def __len__(self) -> int:
        return len(self._elements)

    def conjugacy_classes(self) -> list[tuple[Permutation, tuple[Permutation, ...]]]:
        """(representative, members) per class; representatives are the least unvisited elements."""
        seen: set[Permutation] = set()
        out: list[tuple[Permutation, tuple[Permutation, ...]]] = []
        for g in self._elements:
            if g in seen:
                continue
            members = {h * g * h.inverse() for h in self._elements}
            seen.update(members)
            out.append((g, tuple(sorted(members))))
        return out

    def centralizer(self, g: Permutation) -> PermGroup:
        members = [h for h in self._elements if h * g == g * h]
        return PermGroup(self._degree, tuple(members), members)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self._degree}, order={self.order})"


@lru_cache(maxsize=None)
def _symmetric_elements(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in _itertools_permutations(range(1, n + 1)))


# -- group file format -------------------------------------------------------


def parse_group_text(text: str) -> PermGroup:
    """Read a group file: a line ``degree=<int>`` then one ``gen <cycles>`` line per generator."""
    degree: int | None = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            if not line.startswith("degree="):
                raise InputSyntaxError(f"line {lineno}: expected 'degree=<int>' first, got {raw!r}")
            try:
                degree = int(line[len("degree="):].strip())
            except ValueError:
                raise InputSyntaxError(f"line {lineno}: bad degree {raw!r}") from None
            if degree < 1:
                raise InputSyntaxError(f"line {lineno}: degree must be >= 1")
            continue
        if not line.startswith("gen "):
            raise InputSyntaxError(f"line {lineno}: expected 'gen <cycles>', got {raw!r}")
        gens.append(_parse_cycles(line[4:], degree))
    if degree is None:
        raise InputSyntaxError("missing 'degree=<int>' line")
    return PermGroup.generate(degree, gens)


# -- partitions --------------------------------------------------------------


def partitions_with_weights(n: int, cap: int = 12) -> list[tuple[tuple[int, ...], int]]:
    """All partitions of n (decreasing) with the count of permutations of that cycle type.

    The count is h_lambda = n! / (product of parts * product of multiplicity
    factorials).  Guarded by a cap since the output grows quickly.
    """
    if n < 1:
        raise ValueError("partitions need n >= 1")
    if n > cap:
        raise DegreeTooLargeError(f"partition enumeration capped at n = {cap}, got {n}")
    out: list[tuple[tuple[int, ...], int]] = []
    for lam in _partitions(n, n):
        denom = 1
        mult: dict[int, int] = {}
        for part in lam:
            denom *= part
            mult[part] = mult.get(part, 0) + 1
        for m in mult.values():
            denom *= factorial(m)
        out.append((lam, factorial(n) // denom))
    return out


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def permutation_of_cycle_type(lam: Sequence[int]) -> Permutation:
    """A canonical permutation with the given cycle type: consecutive blocks."""
    images: list[int] = []
    start = 1
    for part in lam:
        block = list(range(start, start + part))
        images.extend(block[1:] + block[:1])
        start += part
    return Permutation(images)


# -- class formulas ----------------------------------------------------------


def coset_chi(G: PermGroup, sigma: Permutation, max_degree: int = 8) -> int:
    """Number of left cosets tG of G in S_n with t^-1 sigma t in G.

    This is the number of fixed points of sigma acting on S_n / G, and is
    constant on conjugacy classes of S_n.  Enumerates S_n, so the degree is
    capped (default 8).
    """
    n = G.degree
    if sigma.degree != n:
        raise ValueError("sigma must have the group's degree")
    if n > max_degree:
        raise DegreeTooLargeError(f"coset count enumerates S_{n}; cap is {max_degree}")
    hits = 0
    for t in _symmetric_elements(n):
        if t.inverse() * sigma * t in G:
            hits += 1
    return hits // G.order


def burnside_quotient_class(G: PermGroup, x_class: PolyLike) -> ClassPoly:
    """[X^n / G] = (1/|G|) sum over g of x^(cycles of g)."""
    p = _coerce_class(x_class)
    total = ClassPoly.zero()
    for g in G:
        total = total + p ** g.cycle_count()
    return total / G.order


def permutation_product_class(G: PermGroup, x_class: PolyLike, max_degree: int = 8) -> ClassPoly:
    """[X^n / G] summed by cycle type, using G-stable coset counts.

    (1/n!) sum over partitions lambda of n of
        h_lambda * chi^G(sigma_lambda) * x^(number of parts of lambda).

    Agrees with ``burnside_quotient_class`` for every subgroup of S_n.
    """
    p = _coerce_class(x_class)
    n = G.degree
    if n > max_degree:
        raise DegreeTooLargeError(f"permutation product enumerates S_{n}; cap is {max_degree}")
    total = ClassPoly.zero()
    for lam, weight in partitions_with_weights(n, cap=max_degree):
        chi = coset_chi(G, permutation_of_cycle_type(lam), max_degree=max_degree)
        if chi:
            total = total + weight * chi * p ** len(lam)
    return total / factorial(n)


def cyclic_product_class(n: int, x_class: PolyLike) -> ClassPoly:
    """[X^n / (Z/n)] = (1/n) sum over d | n of phi(d) x^(n/d)."""
    if n < 1:
        raise PreconditionError(f"cyclic product needs n >= 1, got {n}")
    p = _coerce_class(x_class)
    total = ClassPoly.zero()
    for d in range(1, n + 1):
        if n % d == 0:
            total = total + _euler_phi(d) * p ** (n // d)
    return total / n


def symmetric_product_class(x_class: PolyLike, d: int) -> ClassPoly:
    """[SP^d(X)] = C(x + d - 1, d)."""
    if d < 0:
        raise PreconditionError(f"symmetric product needs d >= 0, got {d}")
    p = _coerce_class(x_class)
    return binomial(p + d - 1, d)


def _euler_phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def _coerce_class(x_class: PolyLike) -> ClassPoly:
    p = _coerce(x_class)
    if p is NotImplemented:
        raise TypeError("class argument must be a polynomial or exact scalar")
    return p
