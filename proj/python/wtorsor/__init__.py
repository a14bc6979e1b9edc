"""Exact Fourier analysis of weighted finite abelian groups.

Thin re-export of the compiled extension. Rational values cross the boundary
as "a/b" strings (or plain ints) so nothing is ever rounded.
"""

from ._core import (  # noqa: F401
    Cyclotomic,
    DualWeights,
    Group,
    InvalidInputError,
    ResourceError,
    WeightedGroup,
    WtorsorError,
    affine_isomorphic,
    all_subgroups,
    c_count,
    classify_lens_family,
    cyclotomic_polynomial,
    direct_sum,
    divides_delta,
    fourier_transform,
    has_nonvanishing,
    inverse_fourier,
    is_reduced,
    lens_f,
    lens_reduced_d,
    lens_torsion_dual,
    ms_multiset,
    oriented_diffeomorphic,
    recover_decomposition,
    reduce,
    reducible_surgery_obstruction,
    root_of_unity,
    surgery_torsion_dual,
    t_isomorphic,
    torus_delta,
)

__all__ = [
    "Cyclotomic",
    "DualWeights",
    "Group",
    "InvalidInputError",
    "ResourceError",
    "WeightedGroup",
    "WtorsorError",
    "affine_isomorphic",
    "all_subgroups",
    "c_count",
    "classify_lens_family",
    "cyclotomic_polynomial",
    "direct_sum",
    "divides_delta",
    "fourier_transform",
    "has_nonvanishing",
    "inverse_fourier",
    "is_reduced",
    "lens_f",
    "lens_reduced_d",
    "lens_torsion_dual",
    "ms_multiset",
    "oriented_diffeomorphic",
    "recover_decomposition",
    "reduce",
    "reducible_surgery_obstruction",
    "root_of_unity",
    "surgery_torsion_dual",
    "t_isomorphic",
    "torus_delta",
]
