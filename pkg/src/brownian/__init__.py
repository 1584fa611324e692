"""Brownian-type matrices A1 = K o G and A2 = N o G with explicit inverses."""

from .closed_form import InverseResult, determinant, inverse, inverse_entry
from .elimination import EliminationTrace, eliminate, validate_stage
from .errors import (
    EliminationBreakdown,
    GenerationFailed,
    LengthMismatch,
    ParseError,
    RecurrenceBreakdown,
    SingularInput,
    SingularMatrix,
    StageMismatch,
)
from .matrix import DenseMatrix, hadamard
from .model import (
    BrownianParams,
    HelperSeqs,
    Variant,
    build_factors,
    build_matrix,
    helper_seqs,
    random_params,
    validate_params,
    well_conditioned_params,
)
from .oracle import gauss_det, gauss_inverse, residual
from .recursive import Form, OpCounter, count_report, recursive_inverse
from .scalar import EXACT, FLOAT64, FieldTag, Rational, rational_normalize

__version__ = "0.1.0"

__all__ = [
    "BrownianParams",
    "DenseMatrix",
    "EXACT",
    "EliminationBreakdown",
    "EliminationTrace",
    "FLOAT64",
    "FieldTag",
    "Form",
    "GenerationFailed",
    "HelperSeqs",
    "InverseResult",
    "LengthMismatch",
    "OpCounter",
    "ParseError",
    "Rational",
    "RecurrenceBreakdown",
    "SingularInput",
    "SingularMatrix",
    "StageMismatch",
    "Variant",
    "build_factors",
    "build_matrix",
    "count_report",
    "determinant",
    "eliminate",
    "gauss_det",
    "gauss_inverse",
    "hadamard",
    "helper_seqs",
    "inverse",
    "inverse_entry",
    "random_params",
    "rational_normalize",
    "recursive_inverse",
    "residual",
    "validate_params",
    "validate_stage",
    "well_conditioned_params",
    "__version__",
]
