"""Exact linear algebra, subspace counting, and finite geometry over
products of residue class rings Z_{p^s}.
"""

from .errors import (
    BudgetExceededError,
    DomainError,
    HypothesisNotMetError,
    NonCoprimeComponentsError,
    NotACapError,
    NotAnArcError,
    NotASubspaceError,
    NotAUnitError,
    NotFullRankError,
    NotInvertibleError,
    PayloadError,
    RingMismatchError,
    RingParseError,
    ShapeMismatchError,
    UntypedSubspaceError,
)
from .ring import Element, LocalRing, Ring, crt_combine, parse_ring
from .matrix import (
    Matrix,
    completion,
    extend_to_basis,
    gl_inverse,
    is_unimodular_rows,
    mccoy_rank,
    mccoy_rank_oracle,
    right_inverse,
    stack_rows,
)
from .subspace import (
    DimensionStatus,
    DualityStatus,
    LinearSubset,
    Subspace,
    as_subspace,
    dim_linear_subset,
    dimension_formula_status,
    dual,
    duality_laws,
    join,
    meet,
    subspace_span,
)
from .counting import (
    count_full_rank,
    count_full_rank_extension,
    count_gl,
    count_mt_in,
    count_mt_over,
    count_mt_subspaces,
    count_subspaces,
    count_subspaces_in,
    count_subspaces_over,
)
from .singular import (
    SingularSpace,
    TypedSubspace,
    canonical_mt_transform,
    is_in_gl_nk,
    type_of,
)
from .geometry import (
    PointSet,
    extend_arc,
    extend_cap,
    is_arc,
    is_cap,
    is_complete_arc,
    is_complete_cap,
    max_arc_size_formula,
    max_cap_size_formula,
    project_point_set,
    search_max_arc,
    search_max_cap,
)
from .oracle import (
    DEFAULT_BUDGET,
    EnumerationReport,
    brute_force_dim,
    count_full_rank_enumerated,
    enumerate_mt_subspaces,
    enumerate_points,
    enumerate_subspaces,
    verify_counts,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DomainError",
    "HypothesisNotMetError",
    "NonCoprimeComponentsError",
    "NotACapError",
    "NotAnArcError",
    "NotASubspaceError",
    "NotAUnitError",
    "NotFullRankError",
    "NotInvertibleError",
    "PayloadError",
    "RingMismatchError",
    "RingParseError",
    "ShapeMismatchError",
    "UntypedSubspaceError",
    "Element",
    "LocalRing",
    "Ring",
    "crt_combine",
    "parse_ring",
    "Matrix",
    "completion",
    "extend_to_basis",
    "gl_inverse",
    "is_unimodular_rows",
    "mccoy_rank",
    "mccoy_rank_oracle",
    "right_inverse",
    "stack_rows",
    "DimensionStatus",
    "DualityStatus",
    "LinearSubset",
    "Subspace",
    "as_subspace",
    "dim_linear_subset",
    "dimension_formula_status",
    "dual",
    "duality_laws",
    "join",
    "meet",
    "subspace_span",
    "count_full_rank",
    "count_full_rank_extension",
    "count_gl",
    "count_mt_in",
    "count_mt_over",
    "count_mt_subspaces",
    "count_subspaces",
    "count_subspaces_in",
    "count_subspaces_over",
    "SingularSpace",
    "TypedSubspace",
    "canonical_mt_transform",
    "is_in_gl_nk",
    "type_of",
    "PointSet",
    "extend_arc",
    "extend_cap",
    "is_arc",
    "is_cap",
    "is_complete_arc",
    "is_complete_cap",
    "max_arc_size_formula",
    "max_cap_size_formula",
    "project_point_set",
    "search_max_arc",
    "search_max_cap",
    "DEFAULT_BUDGET",
    "EnumerationReport",
    "brute_force_dim",
    "count_full_rank_enumerated",
    "enumerate_mt_subspaces",
    "enumerate_points",
    "enumerate_subspaces",
    "verify_counts",
]
