"""Quotients of stratified group actions, orbifold Euler characteristics,
crystallographic quotients, and affine fixed-point tests.

A stratified G-space is a space cut into finitely many strata, each with a
known class, on which a finite group G acts by permuting the strata; an
element fixing any point of a stratum fixes that stratum pointwise.  Under
that hypothesis the class of the quotient can be computed three ways, and
they must agree:

* orbit sum: one summand per G-orbit of strata, the class of a
  representative (setwise stabilizers act trivially, so each orbit
  contributes a single copy);

* Burnside average: (1/|G|) sum over g of the class of the fixed set of g,
  which is the sum of the classes of the strata g fixes;

* centralizer sum: sum over conjugacy class representatives g, and over
  orbits of the centralizer C(g) on the strata fixed by g, of
  [S] / |{h in C(g) : h S = S}|.

The centralizer sum is the form that extends to infinite discrete groups:
an ActionDescriptor records, for finitely many element labels, the strata
fixed by that element together with the orders of the corresponding
stabilizer intersections, and its class is the same double sum.

Independently, the orbifold Euler characteristic of a cocompact action on a
cell complex is e(Gamma, X) = sum over cell orbit representatives of
(-1)^dim / |stabilizer|; summing e over centralizers of finite-order
conjugacy representatives gives the Euler characteristic of the quotient.
For a crystallographic group acting on R^n this collapses to
chi(R^n/Gamma) = sum of 1/|C(gamma)| over conjugacy classes of central
isometries, the isometries gamma whose linear part phi has
det(phi - id) != 0 — exactly the condition that the affine map has a unique
fixed point.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .classpoly import ClassPoly, parse_poly
from .errors import InputSyntaxError, PreconditionError
from .permgroups import PermGroup, Permutation


class DimensionMismatchError(PreconditionError):
    """An affine map's matrix and translation sizes disagree."""


class GSpaceFormatError(InputSyntaxError):
    """A stratified G-space, descriptor, or isometry file is malformed."""


class StratifiedGSpace:
    """Finitely many labeled strata with classes, and a stratum-permuting G-action.

    The action is given on the group's generators as permutations of the
    strata (by index, 1-based) and extended multiplicatively to all of G.
    Construction validates that the extension is a well-defined homomorphism
    (exhaustively for groups of order at most 1000, on sampled pairs beyond
    that) and that strata in one orbit carry equal classes; the model reads
    "g maps stratum S isomorphically onto stratum gS", so unequal classes in
    an orbit are inconsistent input.
    """

    def __init__(
        self,
        strata: Sequence[tuple[str, ClassPoly]],
        group: PermGroup,
        generator_action: Sequence[Permutation],
    ):
        self._labels = tuple(label for label, _ in strata)
        self._classes = tuple(cls for _, cls in strata)
        if len(set(self._labels)) != len(self._labels):
            raise ValueError("stratum labels must be distinct")
        if not strata:
            raise ValueError("need at least one stratum")
        self._group = group
        gens = group.generators
        if len(generator_action) != len(gens):
            raise ValueError("one strata permutation per group generator required")
        m = len(strata)
        for perm in generator_action:
            if perm.degree != m:
                raise ValueError(
                    f"strata permutation degree {perm.degree} does not match {m} strata"
                )
        self._action = self._extend(gens, generator_action, m)
        self._validate_homomorphism()
        self._orbits = self._compute_orbits()
        for orbit in self._orbits:
            first = self._classes[orbit[0]]
            for i in orbit[1:]:
                if self._classes[i] != first:
                    raise ValueError(
                        f"strata {self._labels[orbit[0]]!r} and {self._labels[i]!r} share an "
                        "orbit but have different classes"
                    )

    def _extend(
        self, gens: tuple[Permutation, ...], gen_action: Sequence[Permutation], m: int
    ) -> dict[Permutation, Permutation]:
        e = Permutation.identity(self._group.degree)
        action = {e: Permutation.identity(m)}
        frontier = [e]
        while frontier:
            fresh: list[Permutation] = []
            for g in frontier:
                for s, s_act in zip(gens, gen_action):
                    h = s * g
                    img = s_act * action[g]
                    if h not in action:
                        action[h] = img
                        fresh.append(h)
                    elif action[h] != img:
                        raise ValueError(
                            "generator actions do not extend to a homomorphism "
                            f"(conflict at {h})"
                        )
            frontier = fresh
        if len(action) != self._group.order:
            raise ValueError("generators do not generate the given group")
        return action

    def _validate_homomorphism(self) -> None:
        elements = self._group.elements
        if self._group.order <= 1000:
            pairs: Iterable[tuple[Permutation, Permutation]] = (
                (g, h) for g in elements for h in elements
            )
        else:
            import random

            rng = random.Random(0)
            sampled = [
                (rng.choice(elements), rng.choice(elements)) for _ in range(1000)
            ]
            gen_pairs = [(s, h) for s in self._group.generators for h in elements]
            pairs = gen_pairs + sampled
        for g, h in pairs:
            if self._action[g * h] != self._action[g] * self._action[h]:
                raise ValueError(f"action is not a homomorphism at ({g}, {h})")

    def _compute_orbits(self) -> tuple[tuple[int, ...], ...]:
        m = len(self._labels)
        seen: set[int] = set()
        orbits: list[tuple[int, ...]] = []
        for i in range(m):
            if i in seen:
                continue
            orbit = {self._action[g](i + 1) - 1 for g in self._group}
            seen.update(orbit)
            orbits.append(tuple(sorted(orbit)))
        return tuple(orbits)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def classes(self) -> tuple[ClassPoly, ...]:
        return self._classes

    @property
    def group(self) -> PermGroup:
        return self._group

    def action_of(self, g: Permutation) -> Permutation:
        """The strata permutation induced by the group element g."""
        return self._action[g]

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """G-orbits on stratum indices (0-based), each sorted, ordered by least element."""
        return self._orbits

    def fixed_strata(self, g: Permutation) -> list[int]:
        act = self._action[g]
        return [i for i in range(len(self._labels)) if act(i + 1) == i + 1]


def orbit_sum_class(space: StratifiedGSpace) -> ClassPoly:
    """[X/G] as one summand per stratum orbit."""
    total = ClassPoly.zero()
    for orbit in space.orbits():
        total = total + space.classes[orbit[0]]
    return total


def burnside_class(space: StratifiedGSpace) -> ClassPoly:
    """[X/G] = (1/|G|) sum over g of [X^g], with [X^g] the sum over strata fixed by g."""
    total = ClassPoly.zero()
    for g in space.group:
        for i in space.fixed_strata(g):
            total = total + space.classes[i]
    return total / space.group.order


def centralizer_sum_class(space: StratifiedGSpace) -> ClassPoly:
    """[X/G] summed over conjugacy representatives and centralizer orbits.

    For each conjugacy class representative g, the centralizer C(g) permutes
    the strata fixed by g; each C(g)-orbit contributes the class of a
    representative stratum S divided by the order of
    {h in C(g) : h S = S}.
    """
    total = ClassPoly.zero()
    for g, _members in space.group.conjugacy_classes():
        fixed = space.fixed_strata(g)
        if not fixed:
            continue
        centralizer = space.group.centralizer(g)
        seen: set[int] = set()
        for i in fixed:
            if i in seen:
                continue
            orbit = {space.action_of(h)(i + 1) - 1 for h in centralizer}
            seen.update(orbit)
            stabilizer_order = sum(
                1 for h in centralizer if space.action_of(h)(i + 1) == i + 1
            )
            total = total + space.classes[i] / stabilizer_order
    return total


# -- descriptors for infinite discrete groups --------------------------------


@dataclass(frozen=True)
class DescriptorEntry:
    """One finite-order conjugacy representative: its label and, per stratum
    orbit of its fixed set, the stratum class and the order of the stabilizer
    intersection dividing it."""

    label: str
    strata: tuple[tuple[ClassPoly, int], ...]


@dataclass(frozen=True)
class ActionDescriptor:
    entries: tuple[DescriptorEntry, ...]


def descriptor_class(descriptor: ActionDescriptor) -> ClassPoly:
    """Sum of stratum class / stabilizer order over every entry row."""
    total = ClassPoly.zero()
    for entry in descriptor.entries:
        for cls, order in entry.strata:
            if order < 1:
                raise PreconditionError(
                    f"stabilizer order must be >= 1, got {order} in entry {entry.label!r}"
                )
            total = total + cls / order
    return total


# -- orbifold Euler characteristics ------------------------------------------


def orbifold_euler(cells: Iterable[tuple[int, int]]) -> Fraction:
    """e(Gamma, X) = sum over cell orbit representatives of (-1)^dim / |stabilizer|."""
    total = Fraction(0)
    for dim, stabilizer_order in cells:
        if stabilizer_order < 1:
            raise PreconditionError(f"stabilizer order must be >= 1, got {stabilizer_order}")
        total += Fraction((-1) ** dim, stabilizer_order)
    return total


def quotient_euler_from_fixed_data(
    fixed_sets: Iterable[Iterable[tuple[int, int]]]
) -> Fraction:
    """chi of the quotient as the sum of e(C(gamma), X^gamma) over finite-order
    conjugacy representatives gamma, each given by its cell orbit data."""
    return sum((orbifold_euler(cells) for cells in fixed_sets), Fraction(0))


# -- crystallographic groups --------------------------------------------------


@dataclass(frozen=True)
class CentralIsometryClass:
    """A conjugacy class of central isometries and its centralizer order."""

    label: str
    centralizer_order: int


def crystal_chi(classes: Sequence[CentralIsometryClass]) -> Fraction:
    """chi(R^n / Gamma) = sum of 1 / |C(gamma)|; 0 with no central isometries.

    Warns when the sum is not an integer, since the quotient of R^n by a
    crystallographic group has integral Euler characteristic.
    """
    total = Fraction(0)
    for c in classes:
        if c.centralizer_order < 1:
            raise PreconditionError(
                f"centralizer order must be >= 1, got {c.centralizer_order} for {c.label!r}"
            )
        total += Fraction(1, c.centralizer_order)
    if total.denominator != 1:
        warnings.warn(f"crystallographic Euler characteristic {total} is not an integer")
    return total


def crystal_quotient_class(classes: Sequence[CentralIsometryClass]) -> ClassPoly:
    """[R^n / Gamma] = chi * [point]."""
    return ClassPoly.const(crystal_chi(classes))


# -- affine maps ---------------------------------------------------------------


@dataclass(frozen=True)
class AffineMap:
    """x -> linear @ x + translation with exact rational entries."""

    linear: tuple[tuple[Fraction, ...], ...]
    translation: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = len(self.translation)
        if len(self.linear) != n or any(len(row) != n for row in self.linear):
            raise DimensionMismatchError(
                f"linear part must be {n}x{n} to match a translation of length {n}"
            )

    @property
    def dimension(self) -> int:
        return len(self.translation)


def has_unique_fixed_point(f: AffineMap) -> bool:
    """True iff det(linear - id) != 0, i.e. x = Ax + v has exactly one solution."""
    n = f.dimension
    rows = [
        [f.linear[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    return _det(rows) != 0


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-enough Gaussian elimination."""
    n = len(rows)
    rows = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


# -- file formats ---------------------------------------------------------------


def parse_gspace_text(text: str) -> StratifiedGSpace:
    """Read a stratified G-space file.

    Sections, in order: ``stratum <label> class=<poly>`` lines; a
    ``group degree=<int>`` line followed by ``gen <cycles>`` lines; one
    ``action <k> [<label>-><label> ...]`` line per generator (k is the
    1-based generator number; unmentioned labels stay fixed).
    """
    strata: list[tuple[str, ClassPoly]] = []
    degree: int | None = None
    gens: list[Permutation] = []
    action_lines: dict[int, dict[str, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("stratum "):
            rest = line[len("stratum "):].strip()
            try:
                label, clause = rest.split(None, 1)
            except ValueError:
                raise GSpaceFormatError(f"line {lineno}: expected 'stratum <label> class=<poly>'") from None
            if not clause.startswith("class="):
                raise GSpaceFormatError(f"line {lineno}: missing 'class=' in {raw!r}")
            try:
                cls = parse_poly(clause[len("class="):])
            except InputSyntaxError as e:
                raise GSpaceFormatError(f"line {lineno}: {e}") from None
            strata.append((label, cls))
        elif line.startswith("group "):
            rest = line[len("group "):].strip()
            if not rest.startswith("degree="):
                raise GSpaceFormatError(f"line {lineno}: expected 'group degree=<int>'")
            try:
                degree = int(rest[len("degree="):].strip())
            except ValueError:
                raise GSpaceFormatError(f"line {lineno}: bad degree in {raw!r}") from None
        elif line.startswith("gen "):
            if degree is None:
                raise GSpaceFormatError(f"line {lineno}: 'gen' before 'group degree=<int>'")
            try:
                gens.append(Permutation.from_cycles(line[4:], degree))
            except InputSyntaxError as e:
                raise GSpaceFormatError(f"line {lineno}: {e}") from None
        elif line.startswith("action "):
            parts = line.split()
            if len(parts) < 2 or not parts[1].isdigit():
                raise GSpaceFormatError(f"line {lineno}: expected 'action <gen number> ...'")
            k = int(parts[1])
            mapping: dict[str, str] = {}
            for piece in parts[2:]:
                if "->" not in piece:
                    raise GSpaceFormatError(f"line {lineno}: bad mapping {piece!r}")
                src, dst = piece.split("->", 1)
                if src in mapping:
                    raise GSpaceFormatError(f"line {lineno}: label {src!r} mapped twice")
                mapping[src] = dst
            action_lines[k] = mapping
        else:
            raise GSpaceFormatError(f"line {lineno}: unrecognized line {raw!r}")
    if degree is None:
        raise GSpaceFormatError("missing 'group degree=<int>' line")
    if not strata:
        raise GSpaceFormatError("no strata given")
    labels = [label for label, _ in strata]
    index = {label: i + 1 for i, label in enumerate(labels)}
    gen_action: list[Permutation] = []
    for k in range(1, len(gens) + 1):
        mapping = action_lines.pop(k, {})
        images = list(range(1, len(labels) + 1))
        for src, dst in mapping.items():
            if src not in index or dst not in index:
                raise GSpaceFormatError(f"action {k}: unknown stratum label in {src}->{dst}")
            images[index[src] - 1] = index[dst]
        try:
            gen_action.append(Permutation(images))
        except ValueError:
            raise GSpaceFormatError(f"action {k}: mapping is not a permutation of the strata") from None
    if action_lines:
        raise GSpaceFormatError(f"action lines for nonexistent generators: {sorted(action_lines)}")
    group = PermGroup.generate(degree, gens)
    try:
        return StratifiedGSpace(strata, group, gen_action)
    except ValueError as e:
        raise GSpaceFormatError(str(e)) from None


def parse_descriptor_text(text: str) -> ActionDescriptor:
    """Read an action descriptor: one ``<label> c=<int> class=<poly>`` line per row.

    Rows with one label aggregate into one entry, in order of first appearance.
    """
    order: list[str] = []
    rows: dict[str, list[tuple[ClassPoly, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 2)
        if len(parts) != 3 or not parts[1].startswith("c=") or not parts[2].startswith("class="):
            raise GSpaceFormatError(
                f"line {lineno}: expected '<label> c=<int> class=<poly>', got {raw!r}"
            )
        label = parts[0]
        try:
            c = int(parts[1][2:])
        except ValueError:
            raise GSpaceFormatError(f"line {lineno}: bad stabilizer order in {raw!r}") from None
        try:
            cls = parse_poly(parts[2][len("class="):])
        except InputSyntaxError as e:
            raise GSpaceFormatError(f"line {lineno}: {e}") from None
        if label not in rows:
            order.append(label)
            rows[label] = []
        rows[label].append((cls, c))
    entries = tuple(DescriptorEntry(label, tuple(rows[label])) for label in order)
    return ActionDescriptor(entries)


def parse_isometry_classes_text(text: str) -> list[CentralIsometryClass]:
    """Read central isometry classes: one ``<label> c=<int>`` line per class."""
    out: list[CentralIsometryClass] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not parts[1].startswith("c="):
            raise GSpaceFormatError(f"line {lineno}: expected '<label> c=<int>', got {raw!r}")
        try:
            c = int(parts[1][2:])
        except ValueError:
            raise GSpaceFormatError(f"line {lineno}: bad centralizer order in {raw!r}") from None
        out.append(CentralIsometryClass(parts[0], c))
    return out


def parse_cells_text(text: str) -> list[tuple[int, int]]:
    """Read orbifold cell data: one ``<dim> <stabilizer order>`` line per cell orbit."""
    out: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GSpaceFormatError(f"line {lineno}: expected '<dim> <stab order>', got {raw!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GSpaceFormatError(f"line {lineno}: bad integers in {raw!r}") from None
    return out


def parse_affine_map_text(text: str) -> AffineMap:
    """Read an affine map: ``dim=<n>``, n ``row <q> ...`` lines, one ``t <q> ...`` line."""
    dim: int | None = None
    rows: list[tuple[Fraction, ...]] = []
    translation: tuple[Fraction, ...] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dim is None:
            if not line.startswith("dim="):
                raise GSpaceFormatError(f"line {lineno}: expected 'dim=<int>' first")
            try:
                dim = int(line[4:].strip())
            except ValueError:
                raise GSpaceFormatError(f"line {lineno}: bad dimension {raw!r}") from None
            if dim < 1:
                raise GSpaceFormatError(f"line {lineno}: dimension must be >= 1")
            continue
        parts = line.split()
        kind, entries = parts[0], parts[1:]
        if kind not in ("row", "t"):
            raise GSpaceFormatError(f"line {lineno}: expected 'row' or 't', got {raw!r}")
        try:
            values = tuple(Fraction(p) for p in entries)
        except (ValueError, ZeroDivisionError):
            raise GSpaceFormatError(f"line {lineno}: bad rational entry in {raw!r}") from None
        if len(values) != dim:
            raise GSpaceFormatError(f"line {lineno}: expected {dim} entries, got {len(values)}")
        if kind == "row":
            rows.append(values)
        else:
            if translation is not None:
                raise GSpaceFormatError(f"line {lineno}: duplicate translation line")
            translation = values
    if dim is None or translation is None or len(rows) != dim:
        raise GSpaceFormatError("affine map needs dim=<n>, n row lines, and one t line")
    try:
        return AffineMap(tuple(rows), translation)
    except DimensionMismatchError as e:
        raise GSpaceFormatError(str(e)) from None
