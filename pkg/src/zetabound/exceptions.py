"""Exception hierarchy shared by every module of the package."""


class ZetaBoundError(Exception):
    """Base class for all errors raised by zetabound."""


class DomainError(ZetaBoundError, ValueError):
    """An argument lies outside the domain of the operation."""


class HypothesisViolation(ZetaBoundError, ValueError):
    """Inputs do not satisfy the hypotheses of a theorem or lemma.

    ``condition`` holds the violated inequality as text, e.g. ``"t <= x"``.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        msg = f"hypothesis violated: {condition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class MonotonicityError(HypothesisViolation):
    """A sampled function failed a required positivity/monotonicity check."""


class PoleError(DomainError):
    """Evaluation requested at the pole s = 1."""


class NumericalFailure(ZetaBoundError, ArithmeticError):
    """Base for failures of the numerical machinery itself."""


class QuadratureError(NumericalFailure):
    """Adaptive quadrature could not reach the requested tolerance."""

    def __init__(self, message, estimate, error):
        self.estimate = estimate
        self.error = error
        super().__init__(f"{message}: estimate={estimate!r}, error~{error:.3g}")


class PrecisionUnreachable(NumericalFailure):
    """The zeta oracle cannot meet the target accuracy within its term cap."""

    def __init__(self, target, achievable, M):
        self.target = target
        self.achievable = achievable
        self.M = M
        super().__init__(
            f"target accuracy {target:.3g} unreachable; best bound {achievable:.3g} at M={M}"
        )
