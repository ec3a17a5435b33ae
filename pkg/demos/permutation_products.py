#!/usr/bin/env python3
"""Quotients of powers X^n by permutation groups.

The class of X^n / G is a polynomial in the class x of X.  Evaluating at
x = c recovers plain orbit counting on a c-point set, so necklace numbers
fall out at the integers.  Two subgroups of S_4, both of order two, give
different quotients: where the transposition sits matters, not just the
abstract group.
"""

from kzero.classpoly import ClassPoly
from kzero.permgroups import (
    PermGroup,
    Permutation,
    burnside_quotient_class,
    cyclic_product_class,
    permutation_product_class,
    symmetric_product_class,
)

x = ClassPoly.var("x")

cyc4 = cyclic_product_class(4, x)
print("[X^4 / (Z/4)] =", cyc4)
for beads in (2, 3, 4):
    print(f"  necklaces of length 4 with {beads} colors:", cyc4.evaluate({"x": beads}))

swap_two = PermGroup.generate(4, [Permutation.from_cycles("(1 2)", 4)])
swap_pairs = PermGroup.generate(4, [Permutation.from_cycles("(1 2)(3 4)", 4)])
print("[X^4 / <(1 2)>]      =", burnside_quotient_class(swap_two, x))
print("[X^4 / <(1 2)(3 4)>] =", burnside_quotient_class(swap_pairs, x))

# The cycle-type route only needs the coset fixed-point counts chi^G, yet it
# reproduces the element-by-element average exactly.
for G in (swap_two, swap_pairs, PermGroup.cyclic(4)):
    assert permutation_product_class(G, x) == burnside_quotient_class(G, x)
print("cycle-type route agrees with the element average on all three groups")

# Full symmetric products count multisets; their classes are binomials.
for d in range(5):
    print(f"[SP^{d}(X)] =", symmetric_product_class(x, d))
