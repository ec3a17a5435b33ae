"""Intersection posets of facet arrangements, with Möbius inclusion-exclusion.

Given a complex K, the arrangement of interest is the family of subspaces
indexed by the facets of K; intersecting two such subspaces corresponds to
intersecting the facets as vertex sets.  The intersection poset has

* one node per vertex set in the closure of the facet set under pairwise
  intersection (the empty set is a genuine node when it arises), and
* an artificial bottom node below everything, standing for the ambient
  space.

Order is reverse inclusion: larger vertex sets sit lower.  The Möbius
function is computed by the defining recursion mu(bottom) = 1 and
mu(x) = -sum of mu(y) over y strictly below x; inclusion-exclusion then
expresses the class of a complement as sum of mu(sigma) times the class of
the stratum at sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classpoly import ClassPoly
from .errors import PreconditionError
from .simplicial import Simplex, SimplicialComplex


class EmptyComplexError(PreconditionError):
    """An operation needing at least one facet was given a complex without any."""


@dataclass(frozen=True)
class PosetNode:
    """One node: its vertex set (None for the artificial bottom) and Möbius value."""

    vertex_set: Simplex | None
    mobius: int

    def is_bottom(self) -> bool:
        return self.vertex_set is None

    def label(self) -> str:
        if self.vertex_set is None:
            return "ambient"
        return "{" + ",".join(map(str, self.vertex_set)) + "}"


class IntersectionPoset:
    """Closure of a facet family under intersection, plus an ambient bottom node.

    Nodes are listed bottom first, then by decreasing vertex-set size and
    lexicographic order, which is a linear extension of the partial order.
    """

    __slots__ = ("_nodes",)

    def __init__(self, nodes: tuple[PosetNode, ...]):
        self._nodes = nodes

    @property
    def nodes(self) -> tuple[PosetNode, ...]:
        return self._nodes

    @property
    def bottom(self) -> PosetNode:
        return self._nodes[0]

    @staticmethod
    def strictly_below(a: PosetNode, b: PosetNode) -> bool:
        """True when a < b in the poset order (reverse inclusion, bottom lowest)."""
        if a.vertex_set is None:
            return b.vertex_set is not None
        if b.vertex_set is None:
            return False
        return set(a.vertex_set) > set(b.vertex_set)

    def render(self) -> str:
        """Deterministic one-node-per-line listing for debugging output."""
        width = max(len(n.label()) for n in self._nodes)
        return "\n".join(f"{n.label():<{width}}  mu={n.mobius}" for n in self._nodes)


def intersection_poset(K: SimplicialComplex) -> IntersectionPoset:
    """Build the intersection poset of K's facets and compute its Möbius function."""
    if not K.facets:
        raise EmptyComplexError("intersection poset needs at least one facet")
    sets: set[frozenset[int]] = {frozenset(f) for f in K.facets}
    frontier = list(sets)
    while frontier:
        fresh: list[frozenset[int]] = []
        for s in frontier:
            for t in list(sets):
                meet = s & t
                if meet not in sets:
                    sets.add(meet)
                    fresh.append(meet)
        frontier = fresh
    ordered: list[Simplex | None] = [None]
    ordered.extend(sorted((tuple(sorted(s)) for s in sets), key=lambda s: (-len(s), s)))
    mobius: list[int] = []
    for i, vs in enumerate(ordered):
        if vs is None:
            mobius.append(1)
            continue
        acc = mobius[0]
        for j in range(1, i):
            other = ordered[j]
            if set(other) > set(vs):
                acc += mobius[j]
        mobius.append(-acc)
    nodes = tuple(PosetNode(vs, mu) for vs, mu in zip(ordered, mobius))
    return IntersectionPoset(nodes)


def inclusion_exclusion(
    poset: IntersectionPoset,
    class_of: Callable[[Simplex], ClassPoly],
    ambient: ClassPoly,
) -> ClassPoly:
    """Sum of mu(sigma) * class_of(sigma) over all nodes, the bottom counting as ambient."""
    total = ClassPoly.zero()
    for node in poset.nodes:
        piece = ambient if node.vertex_set is None else class_of(node.vertex_set)
        total = total + node.mobius * piece
    return total
