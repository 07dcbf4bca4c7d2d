"""Change of ordering to LEX shape bases, for ideals and colon ideals."""
from .matrix import (
    ColumnKind,
    SparseMultMatrix,
    Staircase,
    build_mult_matrix,
    build_projected_matrix,
    full_staircase,
)
from .recurrence import (
    HankelSingularError,
    annihilates,
    berlekamp_massey,
    hankel_solve,
    online_minimal_polynomial,
    sequences,
)
from .shape import (
    ColonConfig,
    ColonContext,
    ColonError,
    Diagnostic,
    ShapeBasis,
    build_sigma,
    colon_context,
    eliminant,
    krylov_vectors,
    lambda_shift_check,
    reduce_sigma,
    spfglm,
    spfglm_col,
    spfglm_colon_zero_dim,
)

__all__ = [
    "ColumnKind",
    "SparseMultMatrix",
    "Staircase",
    "build_mult_matrix",
    "build_projected_matrix",
    "full_staircase",
    "HankelSingularError",
    "annihilates",
    "berlekamp_massey",
    "hankel_solve",
    "online_minimal_polynomial",
    "sequences",
    "ColonConfig",
    "ColonContext",
    "ColonError",
    "Diagnostic",
    "ShapeBasis",
    "build_sigma",
    "colon_context",
    "eliminant",
    "krylov_vectors",
    "lambda_shift_check",
    "reduce_sigma",
    "spfglm",
    "spfglm_col",
    "spfglm_colon_zero_dim",
]
