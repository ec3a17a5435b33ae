"""Classes of spaces of 0-cycles of bounded multiplicities.

Fix m >= 1 colors and a bound n >= 1.  For a degree vector d = (d_1..d_m),
the space of 0-cycles Z_n^d(X) consists of configurations of points of X
carrying m-tuples of multiplicities, d_i being the total of color i, where
no point carries every coordinate of its multiplicity tuple >= n.

Peeling off the points that do violate the bound gives the defining
recursion against products of symmetric products SP^d(X) = prod SP^(d_i)(X):

    sum_{k=0..min_i floor(d_i/n)} [SP^k(X)] * [Z_n^(d - kn)] = [SP^d(X)]

(d - kn subtracts kn from every coordinate).  Solving bottom-up fills a
table of exact classes in the class x of X.  Summing by total degree packs
the table into a series whose closed form is

    sum_d [Z_n^d(X)] t^|d| = (1 - t^(mn))^x * (1 - t)^(-mx),

and dividing by the symmetric-product series (1 - t)^(-mx) leaves the
binomial series (1 - t^(mn))^x.  Both identities are checked in the test
suite; the table is the authoritative computation.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .classpoly import ClassPoly, PolyLike
from .classseries import ClassSeries, binomial_series, macdonald_series
from .errors import PreconditionError
from .permgroups import _coerce_class, symmetric_product_class

DegreeVector = tuple[int, ...]


class DOutOfRangeError(PreconditionError):
    """A degree vector has a negative coordinate."""


class OrderExceedsTableError(PreconditionError):
    """A series or lookup was requested beyond the table's computed range."""


def sp_vector_class(d: Sequence[int], x_class: PolyLike) -> ClassPoly:
    """[SP^d(X)] = product over i of C(x + d_i - 1, d_i)."""
    p = _coerce_class(x_class)
    total = ClassPoly.one()
    for di in d:
        if di < 0:
            raise DOutOfRangeError(f"degree vector coordinate {di} is negative")
        total = total * symmetric_product_class(p, di)
    return total


def _compositions(total: int, parts: int) -> Iterator[DegreeVector]:
    """All vectors of ``parts`` non-negative integers summing to ``total``, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for cuts in combinations_with_replacement(range(total + 1), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


class ZeroCycleTable:
    """Classes [Z_n^d(X)] for every degree vector with |d| <= max_total."""

    __slots__ = ("_m", "_n", "_x_class", "_max_total", "_values")

    def __init__(self, m: int, n: int, x_class: PolyLike, max_total: int):
        if m < 1 or n < 1:
            raise PreconditionError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
        if max_total < 0:
            raise PreconditionError(f"table bound must be >= 0, got {max_total}")
        self._m = m
        self._n = n
        self._x_class = _coerce_class(x_class)
        self._max_total = max_total
        self._values: dict[DegreeVector, ClassPoly] = {}
        sp_cache = {
            k: symmetric_product_class(self._x_class, k)
            for k in range(max_total // (m * n) + 1)
        }
        for total in range(max_total + 1):
            for d in _compositions(total, m):
                cap = min(d) // n
                value = sp_vector_class(d, self._x_class)
                for k in range(1, cap + 1):
                    lower = tuple(di - k * n for di in d)
                    value = value - sp_cache[k] * self._values[lower]
                self._values[d] = value

    @property
    def m(self) -> int:
        return self._m

    @property
    def n(self) -> int:
        return self._n

    @property
    def x_class(self) -> ClassPoly:
        return self._x_class

    @property
    def max_total(self) -> int:
        return self._max_total

    def __getitem__(self, d: Sequence[int]) -> ClassPoly:
        key = tuple(d)
        if len(key) != self._m:
            raise PreconditionError(f"degree vector must have {self._m} coordinates, got {key!r}")
        if any(di < 0 for di in key):
            raise DOutOfRangeError(f"degree vector coordinate negative in {key!r}")
        if sum(key) > self._max_total:
            raise OrderExceedsTableError(
                f"|d| = {sum(key)} exceeds the table bound {self._max_total}"
            )
        return self._values[key]

    def entries(self) -> Iterator[tuple[DegreeVector, ClassPoly]]:
        """All (degree vector, class) pairs, sorted by (total degree, vector)."""
        for d in sorted(self._values, key=lambda v: (sum(v), v)):
            yield d, self._values[d]

    def series(self, order: int) -> ClassSeries:
        """sum over d of [Z_n^d(X)] t^|d|, truncated at ``order``."""
        if order > self._max_total:
            raise OrderExceedsTableError(
                f"series order {order} exceeds the table bound {self._max_total}"
            )
        coeffs = [ClassPoly.zero() for _ in range(order + 1)]
        for d, value in self._values.items():
            if sum(d) <= order:
                coeffs[sum(d)] = coeffs[sum(d)] + value
        return ClassSeries(coeffs, order=order)


def closed_series(m: int, n: int, x_class: PolyLike, order: int) -> ClassSeries:
    """(1 - t^(mn))^x * (1 - t)^(-mx): the closed form of the 0-cycle series."""
    if m < 1 or n < 1:
        raise PreconditionError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    p = _coerce_class(x_class)
    return binomial_series(p, m * n, 1, order=order) * macdonald_series(p, order) ** m


def ratio_series(m: int, n: int, x_class: PolyLike, order: int) -> ClassSeries:
    """The 0-cycle series divided by the symmetric-product series (1 - t)^(-mx).

    Computed as an actual series quotient; it must collapse to the binomial
    series (1 - t^(mn))^x.
    """
    if m < 1 or n < 1:
        raise PreconditionError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    p = _coerce_class(x_class)
    denominator = macdonald_series(p, order) ** m
    return closed_series(m, n, p, order) * denominator.inverse()
