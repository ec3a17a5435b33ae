"""Truncated power series with polynomial coefficients.

A :class:`ClassSeries` is a formal power series in one counting variable
``x``, truncated at a fixed order, whose coefficients are :class:`ClassPoly`
values.  These are the generating functions of the calculator: symmetric
product series, 0-cycle series, and their ratios.

A series of order ``N`` stores coefficients of ``x^0 .. x^N``.  Arithmetic
between series of different orders truncates to the smaller order, which is
the only sound choice for truncated data.  Equality requires equal order and
equal coefficients; to compare two series through a common order use
``s.truncate(k) == t.truncate(k)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .classpoly import ClassPoly, binomial
from .errors import PreconditionError

SeriesLike = Union["ClassSeries", ClassPoly, int, Fraction]


class NonUnitConstantTermError(PreconditionError):
    """Series inversion needs constant coefficient exactly 1."""


def _as_poly(value: ClassPoly | int | Fraction) -> ClassPoly:
    if isinstance(value, ClassPoly):
        return value
    return ClassPoly.const(value)


class ClassSeries:
    """Power series truncated at a fixed order, coefficients in ClassPoly."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Iterable[ClassPoly | int | Fraction], order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("series needs at least the constant coefficient")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        if len(cs) < order + 1:
            cs.extend([ClassPoly.zero()] * (order + 1 - len(cs)))
        self._order = order
        self._coeffs = tuple(cs[: order + 1])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> ClassSeries:
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> ClassSeries:
        return cls([ClassPoly.one()], order=order)

    @classmethod
    def constant(cls, value: ClassPoly | int | Fraction, order: int) -> ClassSeries:
        return cls([_as_poly(value)], order=order)

    # -- structure ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple[ClassPoly, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> ClassPoly:
        if not 0 <= k <= self._order:
            raise IndexError(f"coefficient {k} outside truncation order {self._order}")
        return self._coeffs[k]

    def truncate(self, order: int) -> ClassSeries:
        """The same series cut down to a smaller (or equal) order."""
        if order > self._order:
            raise ValueError(f"cannot extend a series truncated at {self._order} to {order}")
        return ClassSeries(self._coeffs[: order + 1], order=order)

    # -- arithmetic --------------------------------------------------------

    def _coerced(self, other: SeriesLike) -> ClassSeries | None:
        if isinstance(other, ClassSeries):
            return other
        if isinstance(other, (ClassPoly, int, Fraction)):
            return ClassSeries.constant(other, self._order)
        return None

    def __add__(self, other: SeriesLike) -> ClassSeries:
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        n = min(self._order, o._order)
        return ClassSeries([self._coeffs[k] + o._coeffs[k] for k in range(n + 1)], order=n)

    __radd__ = __add__

    def __neg__(self) -> ClassSeries:
        return ClassSeries([-c for c in self._coeffs], order=self._order)

    def __sub__(self, other: SeriesLike) -> ClassSeries:
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: SeriesLike) -> ClassSeries:
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: SeriesLike) -> ClassSeries:
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        n = min(self._order, o._order)
        out = [ClassPoly.zero() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self._coeffs[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = o._coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return ClassSeries(out, order=n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> ClassSeries:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"series exponent must be a non-negative integer, got {k!r}")
        result = ClassSeries.one(self._order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverse(self) -> ClassSeries:
        """Multiplicative inverse; requires constant coefficient exactly 1."""
        if self._coeffs[0] != ClassPoly.one():
            raise NonUnitConstantTermError(
                f"cannot invert a series with constant term {self._coeffs[0]}"
            )
        inv = [ClassPoly.one()]
        for k in range(1, self._order + 1):
            acc = ClassPoly.zero()
            for i in range(1, k + 1):
                if not self._coeffs[i].is_zero():
                    acc = acc + self._coeffs[i] * inv[k - i]
            inv.append(-acc)
        return ClassSeries(inv, order=self._order)

    # -- comparison and rendering ------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __str__(self) -> str:
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            parts.append(_render_term(c, k, latex=False, first=not parts))
        body = "".join(parts) if parts else "0"
        return f"{body} + O(x^{self._order + 1})"

    def latex(self) -> str:
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            parts.append(_render_term(c, k, latex=True, first=not parts))
        body = "".join(parts) if parts else "0"
        exp = self._order + 1
        return f"{body} + O(x^{{{exp}}})"

    def __repr__(self) -> str:
        return f"ClassSeries({self})"


def _render_term(c: ClassPoly, k: int, latex: bool, first: bool) -> str:
    """One series term, pulling a leading minus sign out of constant coefficients."""
    text = c.latex() if latex else str(c)
    negate = False
    single = len(list(c.terms())) == 1
    if single and text.startswith("-"):
        negate = True
        text = text[1:]
    if k == 0:
        body = text if single else (f"({text})" if not single else text)
    else:
        xk = "x" if k == 1 else (f"x^{{{k}}}" if latex else f"x^{k}")
        if single:
            if text == "1":
                body = xk
            elif latex:
                body = f"{text}{xk}" if c.is_constant() else f"{text}\\,{xk}"
            else:
                body = f"{text}*{xk}"
        else:
            body = f"({text}){'' if latex else '*'}{xk}"
    if first:
        return f"-{body}" if negate else body
    return f" - {body}" if negate else f" + {body}"


# -- series builders --------------------------------------------------------


def binomial_series(
    exponent: ClassPoly | int | Fraction, power: int = 1, sign: int = 1, *, order: int
) -> ClassSeries:
    """The series (1 - sign*x^power)^exponent, truncated at ``order``.

    Expanded via the symbolic binomial theorem:
    sum_k C(exponent, k) (-sign)^k x^(power*k).  A negative exponent -q is
    handled by the same formula, since C(-q, k)(-1)^k = C(q+k-1, k).
    """
    if power < 1:
        raise ValueError("power of x must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    q = _as_poly(exponent)
    coeffs = [ClassPoly.zero() for _ in range(order + 1)]
    for k in range(0, order // power + 1):
        c = binomial(q, k)
        if sign == 1 and k % 2 == 1:
            c = -c
        coeffs[power * k] = c
    return ClassSeries(coeffs, order=order)


def macdonald_series(p: ClassPoly | int | Fraction, order: int) -> ClassSeries:
    """The symmetric product series (1 - x)^(-p) = sum_d C(p+d-1, d) x^d.

    Coefficient of x^d is the class of the d-th symmetric product of a space
    of class p.
    """
    return binomial_series(-_as_poly(p), 1, 1, order=order)


def geometric_series(order: int) -> ClassSeries:
    """1 + x + x^2 + ... = (1 - x)^(-1), truncated at ``order``."""
    return ClassSeries([ClassPoly.one()] * (order + 1), order=order)
