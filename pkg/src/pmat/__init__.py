"""Exact univariate polynomial matrix computation over a prime field."""

from .errors import (
    InternalInvariantError,
    ParseError,
    PmatError,
    PreconditionError,
    ShapeError,
    SingularMatrixError,
)
from .poly import (
    NEG_INF,
    Poly,
    is_prime,
    poly_divrem,
    poly_mul,
    poly_reverse,
    poly_xgcd,
    series_inverse,
)
from .constmat import ConstMat
from .polymat import (
    LinearizationPlan,
    PolyMat,
    cdeg,
    collapse_columns,
    column_leading_matrix,
    column_reversal,
    determinant,
    expand_columns,
    expanded_degree_bounds,
    expansion_matrix,
    is_column_reduced,
    is_hermite,
    is_popov,
    is_reduced,
    leading_matrix_shifted,
    make_linearization_plan,
    matmul,
    matmul_trunc,
    matmul_unbalanced,
    rdeg_shifted,
    reduce_vector_mod_rowspace,
    vstack,
)
from .division import (
    auto_delta,
    pm_quorem,
    quorem_auto,
    rem_of_shifts,
    residual,
    truncated_expansion,
)
from .approx import (
    approximant_basis_popov,
    kernel_basis_popov,
    relations_mod_single_poly,
    relations_via_kernel,
)
from .linalg import (
    coefficient_embedding,
    multiplication_matrix,
    relations_from_linear_algebra,
)
from .relations import (
    clean_identity_columns,
    hermite_form,
    known_degree_relations,
    popov_form,
    relation_basis_general,
    relations_mod_hermite,
    set_verify,
)
from .oracle import (
    brute_force_relations,
    naive_quorem,
    verify_relation_basis,
)
from .cli import emit_pmat, parse_pmat

__version__ = "0.1.0"

__all__ = [
    "ConstMat",
    "InternalInvariantError",
    "LinearizationPlan",
    "NEG_INF",
    "ParseError",
    "PmatError",
    "Poly",
    "PolyMat",
    "PreconditionError",
    "ShapeError",
    "SingularMatrixError",
    "approximant_basis_popov",
    "auto_delta",
    "brute_force_relations",
    "cdeg",
    "clean_identity_columns",
    "coefficient_embedding",
    "collapse_columns",
    "column_leading_matrix",
    "column_reversal",
    "determinant",
    "emit_pmat",
    "expand_columns",
    "expanded_degree_bounds",
    "expansion_matrix",
    "hermite_form",
    "is_column_reduced",
    "is_hermite",
    "is_popov",
    "is_prime",
    "is_reduced",
    "kernel_basis_popov",
    "known_degree_relations",
    "leading_matrix_shifted",
    "make_linearization_plan",
    "matmul",
    "matmul_trunc",
    "matmul_unbalanced",
    "multiplication_matrix",
    "naive_quorem",
    "parse_pmat",
    "pm_quorem",
    "poly_divrem",
    "poly_mul",
    "poly_reverse",
    "poly_xgcd",
    "popov_form",
    "quorem_auto",
    "rdeg_shifted",
    "reduce_vector_mod_rowspace",
    "relation_basis_general",
    "relations_from_linear_algebra",
    "relations_mod_hermite",
    "relations_mod_single_poly",
    "relations_via_kernel",
    "rem_of_shifts",
    "residual",
    "series_inverse",
    "set_verify",
    "truncated_expansion",
    "verify_relation_basis",
    "vstack",
]
