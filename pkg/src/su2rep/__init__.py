"""Exact cohomology invariants of SU(2) representation varieties of
nonorientable surfaces, with a quaternion numerical oracle for the
underlying geometry."""

from .exterior import (
    BigradedClass,
    ExtMono,
    Sector,
    bigraded_mul,
    ext_mul,
    fixed_point_poincare,
    weyl_invariant_series,
)
from .locimage import (
    ImageSpec,
    OrdClass,
    cup_product,
    cup_table,
    factorization_check,
    image_basis,
    image_hilbert_series,
    kunneth_combine,
    ordinary_basis,
)
from .ratpoly import (
    NotPolynomialError,
    PoleAtZeroError,
    RatFn,
    RatPoly,
    poly_gcd,
    poly_reciprocal,
    ratfn_simplify_to_poly,
    series_expand,
)
from .surfaces import (
    ConsistencyError,
    bigraded_poincare,
    equivariant_poincare,
    euler_characteristic,
    gxt_equivariant_series,
    has_two_torsion,
    kernel_poincare,
    orbit_poincare,
    pair_poincare,
    poincare,
    poincare_sectors,
    recursion_verify,
    specialize_total_degree,
)
from .targets import SurfaceTarget, TargetKind, Variant

__version__ = "0.1.0"

__all__ = [
    "BigradedClass",
    "ConsistencyError",
    "ExtMono",
    "ImageSpec",
    "NotPolynomialError",
    "OrdClass",
    "PoleAtZeroError",
    "RatFn",
    "RatPoly",
    "Sector",
    "SurfaceTarget",
    "TargetKind",
    "Variant",
    "bigraded_mul",
    "bigraded_poincare",
    "cup_product",
    "cup_table",
    "equivariant_poincare",
    "euler_characteristic",
    "ext_mul",
    "factorization_check",
    "fixed_point_poincare",
    "gxt_equivariant_series",
    "has_two_torsion",
    "image_basis",
    "image_hilbert_series",
    "kernel_poincare",
    "kunneth_combine",
    "orbit_poincare",
    "ordinary_basis",
    "pair_poincare",
    "poincare",
    "poincare_sectors",
    "poly_gcd",
    "poly_reciprocal",
    "ratfn_simplify_to_poly",
    "recursion_verify",
    "series_expand",
    "specialize_total_degree",
    "weyl_invariant_series",
]
