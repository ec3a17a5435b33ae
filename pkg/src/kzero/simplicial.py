"""Finite abstract simplicial complexes on vertices 1..n.

A complex is stored by its facets (inclusion-maximal faces).  The empty
complex (no faces at all) and the complex whose only face is the empty
simplex are distinct values; the latter arises as the (-1)-skeleton.

Simplices are plain sorted tuples of vertices.  Vertex numbering is global
to the complex: two complexes on the same n can share vertices, and
``disjoint_union`` shifts numbering to make components disjoint.

File format (one complex per file): a line ``n=<int>`` followed by one facet
per line as comma-separated vertices.  Blank lines and ``#`` comments are
ignored.  The complex whose only face is the empty simplex has no file
representation (an empty line reads as a blank, not a facet).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputSyntaxError, PreconditionError

Simplex = tuple[int, ...]


class VertexOutOfRangeError(PreconditionError):
    """A face mentions a vertex outside 1..n."""


class ComplexFormatError(InputSyntaxError):
    """A complex file does not follow the documented format."""


def _as_simplex(face: Iterable[int], n: int) -> Simplex:
    s = tuple(sorted(set(face)))
    for v in s:
        if not (isinstance(v, int) and 1 <= v <= n):
            raise VertexOutOfRangeError(f"vertex {v!r} outside 1..{n}")
    return s


class SimplicialComplex:
    """Immutable simplicial complex, held by its facets."""

    __slots__ = ("_n", "_facets")

    def __init__(self, n: int, facets: Iterable[Iterable[int]] = ()):
        if not (isinstance(n, int) and n >= 0):
            raise ValueError(f"vertex count must be a non-negative integer, got {n!r}")
        self._n = n
        candidates = {_as_simplex(f, n) for f in facets}
        kept = [
            f for f in candidates
            if not any(set(f) < set(g) for g in candidates)
        ]
        self._facets = tuple(sorted(kept, key=lambda s: (len(s), s)))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        return cls(n, facets)

    @property
    def n(self) -> int:
        return self._n

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self._facets

    @property
    def dim(self) -> int:
        """Dimension: largest facet size minus one; -1 with no facet or only the empty one."""
        return max((len(f) for f in self._facets), default=0) - 1

    def is_empty(self) -> bool:
        """True for the complex with no faces at all."""
        return not self._facets

    def all_faces(self) -> list[Simplex]:
        """Every face, the empty simplex included, sorted by (size, lexicographic)."""
        faces = set()
        for f in self._facets:
            for k in range(len(f) + 1):
                faces.update(combinations(f, k))
        return sorted(faces, key=lambda s: (len(s), s))

    def face_count_by_size(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.all_faces():
            counts[len(f)] = counts.get(len(f), 0) + 1
        return counts

    def skeleton(self, d: int) -> SimplicialComplex:
        """The subcomplex of faces of dimension at most d; d = -1 keeps only the empty face."""
        if d < -1:
            raise ValueError(f"skeleton dimension must be >= -1, got {d}")
        if not self._facets:
            return SimplicialComplex(self._n)
        size = d + 1
        pieces: list[Simplex] = []
        for f in self._facets:
            if len(f) <= size:
                pieces.append(f)
            else:
                pieces.extend(combinations(f, size))
        return SimplicialComplex(self._n, pieces)

    def __contains__(self, face: Iterable[int]) -> bool:
        s = set(face)
        return any(s <= set(f) for f in self._facets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._n == other._n and self._facets == other._facets

    def __hash__(self) -> int:
        return hash((self._n, self._facets))

    def __repr__(self) -> str:
        inner = ", ".join("[" + ",".join(map(str, f)) + "]" for f in self._facets)
        return f"SimplicialComplex(n={self._n}, facets=({inner}))"

    # -- text format ---------------------------------------------------------

    def to_text(self) -> str:
        if self._facets and self._facets[0] == ():
            raise ValueError("the complex whose only face is the empty simplex has no file form")
        lines = [f"n={self._n}"]
        lines.extend(",".join(map(str, f)) for f in self._facets)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> SimplicialComplex:
        n: int | None = None
        facets: list[tuple[int, ...]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if n is None:
                if not line.startswith("n="):
                    raise ComplexFormatError(f"line {lineno}: expected 'n=<int>' first, got {raw!r}")
                try:
                    n = int(line[2:].strip())
                except ValueError:
                    raise ComplexFormatError(f"line {lineno}: bad vertex count {raw!r}") from None
                if n < 0:
                    raise ComplexFormatError(f"line {lineno}: vertex count must be >= 0")
                continue
            try:
                face = tuple(int(part) for part in line.split(","))
            except ValueError:
                raise ComplexFormatError(f"line {lineno}: bad facet {raw!r}") from None
            facets.append(face)
        if n is None:
            raise ComplexFormatError("missing 'n=<int>' line")
        try:
            return cls(n, facets)
        except VertexOutOfRangeError as e:
            raise ComplexFormatError(str(e)) from None


def full_simplex(n: int) -> SimplicialComplex:
    """The full simplex on vertices 1..n (a single facet)."""
    if n < 1:
        raise ValueError("full simplex needs n >= 1")
    return SimplicialComplex(n, [tuple(range(1, n + 1))])


@dataclass(frozen=True)
class DisjointUnion:
    """A disjoint union of complexes with its component bookkeeping.

    ``spans[i]`` is the (first, last) vertex range, inclusive, occupied by
    component i after renumbering.
    """

    complex: SimplicialComplex
    spans: tuple[tuple[int, int], ...]

    def component_of(self, vertex: int) -> int:
        for i, (lo, hi) in enumerate(self.spans):
            if lo <= vertex <= hi:
                return i
        raise ValueError(f"vertex {vertex} outside every component span")


def disjoint_union(components: Sequence[SimplicialComplex]) -> DisjointUnion:
    """Shift components to disjoint vertex ranges and join their facet lists."""
    facets: list[Simplex] = []
    spans: list[tuple[int, int]] = []
    offset = 0
    for K in components:
        spans.append((offset + 1, offset + K.n))
        facets.extend(tuple(v + offset for v in f) for f in K.facets)
        offset += K.n
    return DisjointUnion(SimplicialComplex(offset, facets), tuple(spans))
