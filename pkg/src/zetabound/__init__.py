"""Certified Dirichlet-polynomial approximation of the Riemann zeta function."""

from .exceptions import (
    DomainError,
    HypothesisViolation,
    MonotonicityError,
    NumericalFailure,
    PoleError,
    PrecisionUnreachable,
    QuadratureError,
    ZetaBoundError,
)
from .expsum import (
    Lemma47Params,
    LemmaReport,
    check_lemma43,
    check_lemma47,
    check_lemma410,
    lemma47_error_budget,
    weight_variation,
)
from .numerics import (
    EULER_GAMMA,
    CompensatedAccumulator,
    PhaseFunction,
    WeightFunction,
    adaptive_integral,
    compensated_sum,
    digamma,
    euler_gamma,
    oscillatory_integral,
)
from .zeta import (
    MEMORABLE_CONSTANT,
    PUBLISHED_CONSTANT,
    ApproxResult,
    OracleResult,
    SweepRow,
    ZetaPoint,
    approx_zeta,
    dirichlet_sum,
    error_radius,
    theorem_constant,
    verify_point,
    zeta_oracle,
)

__version__ = "0.1.0"
