"""Exact Horadam-sequence evaluation and stride-identity verification."""
from .core import (
    HoradamParams,
    OpCount,
    matrix_power_eval,
    matrix_power_eval_counted,
    recurrence_eval,
    recurrence_eval_counted,
    recurrence_terms,
    u_eval,
    v_eval,
)
from .errors import (
    DegenerateDiscriminant,
    DomainError,
    HoradamError,
    IndexNotOnStride,
    InternalNonInteger,
    MismatchedDiscriminant,
    UnknownPreset,
)
from .identities import (
    FuzzBounds,
    FuzzSummary,
    IdentityId,
    IdentityInstance,
    IdentityReport,
    binomial,
    fuzz_verify,
    lemma1_rhs,
    stride_eval,
    stride_eval_counted,
    theorem2_rhs,
    theorem4_rhs,
    verify,
)
from .presets import CorollaryVector, SequencePreset, corollary_vectors, preset
from .quadratic import (
    BinetCoeffs,
    QuadElem,
    binet_coeffs,
    binet_eval,
    quad_add,
    quad_inv_sqrt_d,
    quad_mul,
    quad_pow,
)
from .strategy import EvalStrategy, evaluate, evaluate_counted

__version__ = "0.1.0"
