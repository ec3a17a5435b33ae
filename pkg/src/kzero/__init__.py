"""Exact calculator for Grothendieck classes of stratifiable spaces.

The ring lives in :mod:`kzero.classpoly`; truncated power series over it in
:mod:`kzero.classseries`.  On top of those sit the geometric calculators:
polyhedral products, fat wedges, diagonal arrangements and their complements
(:mod:`kzero.polyhedral`, backed by :mod:`kzero.simplicial` and
:mod:`kzero.posets`), permutation, cyclic, and symmetric products
(:mod:`kzero.permgroups`), quotients of stratified group actions with
orbifold and crystallographic Euler characteristics
(:mod:`kzero.quotients`), and spaces of 0-cycles (:mod:`kzero.zerocycles`).
``kzero.cli`` exposes everything as the ``kzero`` command line tool.

All arithmetic is exact rational arithmetic; the package never touches
floating point.
"""

from .classpoly import ClassPoly, binomial, parse_poly
from .classseries import ClassSeries, binomial_series, geometric_series, macdonald_series
from .permgroups import (
    PermGroup,
    Permutation,
    burnside_quotient_class,
    cyclic_product_class,
    permutation_product_class,
    symmetric_product_class,
)
from .polyhedral import (
    PolyPair,
    delta_config_class,
    delta_config_class_disjoint,
    fat_wedge_class,
    m_complement_class,
    polyhedral_product_class,
    polyhedral_product_complement_class,
    w_class,
)
from .posets import IntersectionPoset, inclusion_exclusion, intersection_poset
from .quotients import (
    ActionDescriptor,
    AffineMap,
    CentralIsometryClass,
    DescriptorEntry,
    StratifiedGSpace,
    burnside_class,
    centralizer_sum_class,
    crystal_chi,
    crystal_quotient_class,
    descriptor_class,
    has_unique_fixed_point,
    orbifold_euler,
    orbit_sum_class,
    quotient_euler_from_fixed_data,
)
from .simplicial import SimplicialComplex, disjoint_union, full_simplex
from .zerocycles import ZeroCycleTable, closed_series, ratio_series, sp_vector_class

__all__ = [
    "ActionDescriptor",
    "AffineMap",
    "CentralIsometryClass",
    "ClassPoly",
    "ClassSeries",
    "DescriptorEntry",
    "IntersectionPoset",
    "PermGroup",
    "Permutation",
    "PolyPair",
    "SimplicialComplex",
    "StratifiedGSpace",
    "ZeroCycleTable",
    "binomial",
    "binomial_series",
    "burnside_class",
    "burnside_quotient_class",
    "centralizer_sum_class",
    "closed_series",
    "crystal_chi",
    "crystal_quotient_class",
    "cyclic_product_class",
    "delta_config_class",
    "delta_config_class_disjoint",
    "descriptor_class",
    "disjoint_union",
    "fat_wedge_class",
    "full_simplex",
    "geometric_series",
    "has_unique_fixed_point",
    "inclusion_exclusion",
    "intersection_poset",
    "m_complement_class",
    "macdonald_series",
    "orbifold_euler",
    "orbit_sum_class",
    "parse_poly",
    "permutation_product_class",
    "polyhedral_product_class",
    "polyhedral_product_complement_class",
    "quotient_euler_from_fixed_data",
    "ratio_series",
    "sp_vector_class",
    "symmetric_product_class",
    "w_class",
]

__version__ = "0.1.0"
