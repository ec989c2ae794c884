"""Exact b-symbol distance profiles of linear codes over finite fields.

The library builds linear codes over GF(p^e) (matrix product codes,
generalized Reed-Muller codes, the [u+v, u-v] construction, parity
check pattern families), computes their exact minimum b-symbol
distances by vectorized exhaustive enumeration, and checks the closed
forms and distance bounds that make larger instances tractable.
"""

from .field import GF, DTYPE, Field, FieldError, field_from_order
from .linalg import (det, is_nonsingular, is_nsc, is_upper_triangular,
                     kernel_basis, rank, rref)
from .codes import (BSymbolProfile, EnumerationCapError, HoleSet, LinearCode,
                    b_distance, b_support, b_weight, b_weight_via_holes,
                    distance_flag, enumeration_cap, estimate_min_b_distance,
                    exhaustive_b_profile, find_codeword_with_end_hole, holes,
                    is_successive, iter_codeword_batches, min_b_distance,
                    profile, singleton_bound, window_weight_table)
from .matrix_product import (MatrixProductSpec, TriangularBoundResult,
                             block_matrix, bound_report, encode,
                             lower_bound_first_rows, lower_bound_last_rows,
                             lower_bound_nsc, product_code,
                             upper_bound_triangular_nsc)
from .reed_muller import (binomial_matrix, point_order, reduced_monomials,
                          rm_by_evaluation, rm_by_recursion, rm_d1, rm_db,
                          rm_dimension, rm_is_b_mds, rm_successive_witness)
from .uv_construction import (AmdsCertificate, CertificateError, UvBoundReport,
                              build_amds, intersection, sum_zero_code,
                              uv_bounds, uv_construct, uv_mixer, uv_spec)
from .classify import (PARITY_FAMILIES, CodimClassification, classify_codim1,
                       classify_codim2, parity_family)

__version__ = "0.1.0"

__all__ = [
    "GF", "DTYPE", "Field", "FieldError", "field_from_order",
    "det", "is_nonsingular", "is_nsc", "is_upper_triangular",
    "kernel_basis", "rank", "rref",
    "BSymbolProfile", "EnumerationCapError", "HoleSet", "LinearCode",
    "b_distance", "b_support", "b_weight", "b_weight_via_holes",
    "distance_flag", "enumeration_cap", "estimate_min_b_distance",
    "exhaustive_b_profile", "find_codeword_with_end_hole", "holes",
    "is_successive", "iter_codeword_batches", "min_b_distance",
    "profile", "singleton_bound", "window_weight_table",
    "MatrixProductSpec", "TriangularBoundResult", "block_matrix",
    "bound_report", "encode", "lower_bound_first_rows",
    "lower_bound_last_rows", "lower_bound_nsc", "product_code",
    "upper_bound_triangular_nsc",
    "binomial_matrix", "point_order", "reduced_monomials",
    "rm_by_evaluation", "rm_by_recursion", "rm_d1", "rm_db",
    "rm_dimension", "rm_is_b_mds", "rm_successive_witness",
    "AmdsCertificate", "CertificateError", "UvBoundReport", "build_amds",
    "intersection", "sum_zero_code", "uv_bounds", "uv_construct",
    "uv_mixer", "uv_spec",
    "PARITY_FAMILIES", "CodimClassification", "classify_codim1",
    "classify_codim2", "parity_family",
    "__version__",
]
