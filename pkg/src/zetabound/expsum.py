"""Numerical checks of the explicit exponential-sum estimates.

Three statements are checked, each by computing both sides on concrete
phase/weight functions:

* first-derivative test: |int_a^b g e^{if}| <= 2 max g/f' when g/f' is
  positive and monotone;
* sum-to-integral replacement: for f' strictly decreasing and
  0 <= N <= floor(f'(b)),

      sum_{a<n<=b} e^{2 pi i f(n)} = sum_{nu=N}^{floor f'(a)} int_a^b e^{2 pi i (f(x) - nu x)} dx
                                     + theta R0,
      R0 = (pi + 3 gamma + 3 log(1 + f'(a) - N) + 1/delta) / pi,
      delta = 1 - frac(f'(a));

* the weighted version, where the error is multiplied by
  G = |g(b)| + int_a^b |g'|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .exceptions import DomainError, HypothesisViolation, MonotonicityError
from .numerics import (
    EULER_GAMMA,
    PhaseFunction,
    WeightFunction,
    adaptive_integral,
    compensated_sum,
    oscillatory_integral,
)

__all__ = [
    "LOW_INFORMATION_DELTA",
    "Lemma47Params",
    "LemmaReport",
    "check_lemma43",
    "lemma47_error_budget",
    "check_lemma47",
    "weight_variation",
    "check_lemma410",
]

TWO_PI = 2.0 * math.pi
LOW_INFORMATION_DELTA = 0.05
ROUNDING_SLACK = 1e-9
MONOTONE_SAMPLES = 256
MAX_GRID = 1024
MAX_INTERVAL = 1e5


@dataclass(frozen=True)
class Lemma47Params:
    """Phase f on [a, b] together with the integer cut-off N.

    ``a`` and ``b`` default to the domain carried by ``f``.
    """

    f: PhaseFunction
    N: int = 0
    a: Optional[float] = None
    b: Optional[float] = None

    def __post_init__(self):
        a = self.f.a if self.a is None else self.a
        b = self.f.b if self.b is None else self.b
        if a is None or b is None:
            raise DomainError("interval [a, b] not given")
        object.__setattr__(self, "a", float(a))
        object.__setattr__(self, "b", float(b))
        if not self.a < self.b:
            raise DomainError(f"invalid interval: need a < b, got [{self.a}, {self.b}]")

    @property
    def fpa(self) -> float:
        return float(self.f.derivative(np.asarray(self.a)))

    @property
    def fpb(self) -> float:
        return float(self.f.derivative(np.asarray(self.b)))

    @property
    def delta(self) -> float:
        fpa = self.fpa
        return 1.0 - (fpa - math.floor(fpa))

    @property
    def nu_range(self) -> range:
        return range(self.N, math.floor(self.fpa) + 1)

    @property
    def low_information(self) -> bool:
        return self.delta < LOW_INFORMATION_DELTA

    def validate(self) -> None:
        """Raise :class:`HypothesisViolation` if the lemma does not apply."""
        if int(self.N) != self.N or self.N < 0:
            raise HypothesisViolation("N is a non-negative integer", f"N = {self.N!r}")
        if self.N > math.floor(self.fpb):
            raise HypothesisViolation("N <= floor(f'(b))", f"N = {self.N}, f'(b) = {self.fpb!r}")
        self.f.check_strictly_decreasing(self.a, self.b, MONOTONE_SAMPLES)
        if not 0.0 < self.delta <= 1.0:
            raise HypothesisViolation("0 < delta <= 1", f"delta = {self.delta!r}")


@dataclass(frozen=True)
class LemmaReport:
    lemma: str
    lhs: complex
    rhs_main: complex
    error_bound: float
    observed_error: float
    ratio: float
    quadrature_tol: float
    integrals: int
    passed: bool
    flags: Tuple[str, ...] = ()
    label: str = ""


def _report(lemma, lhs, rhs, bound, observed, tol, count, flags=(), label=""):
    slack = count * tol + ROUNDING_SLACK
    return LemmaReport(
        lemma=lemma,
        lhs=complex(lhs),
        rhs_main=complex(rhs),
        error_bound=bound,
        observed_error=observed,
        ratio=observed / bound,
        quadrature_tol=tol,
        integrals=count,
        passed=observed <= bound + slack,
        flags=tuple(flags),
        label=label,
    )


def check_lemma43(g, f: PhaseFunction, a: float, b: float, tol: float = 1e-10,
                  label: str = "") -> LemmaReport:
    """First-derivative test: |int g e^{if}| against 2 max(g/f').

    ``g`` is a :class:`WeightFunction` or ``None`` (g = 1).  Positivity
    and monotonicity of g/f' are checked on 256 samples.
    """
    if not a < b:
        raise DomainError(f"invalid interval: need a < b, got [{a}, {b}]")
    gv = (lambda x: np.ones_like(x)) if g is None else g.value

    xs = np.linspace(a, b, MONOTONE_SAMPLES)
    fp = np.asarray(f.derivative(xs), dtype=float)
    if np.any(fp == 0.0):
        raise MonotonicityError("f' != 0 on [a, b]")
    q = np.asarray(gv(xs), dtype=float) / fp
    if not np.all(q > 0.0):
        raise MonotonicityError("g/f' > 0 on [a, b]")
    dq = np.diff(q)
    noise = 1e-12 * float(np.max(q))  # constant ratios jitter at rounding level
    if not (np.all(dq >= -noise) or np.all(dq <= noise)):
        raise MonotonicityError("g/f' monotonic on [a, b]", f"sampled at {MONOTONE_SAMPLES} points")

    grid = np.linspace(a, b, MAX_GRID + 2)
    fp_grid = np.asarray(f.derivative(grid), dtype=float)
    bound = 2.0 * float(np.max(np.asarray(gv(grid), dtype=float) / fp_grid))
    omega = float(np.max(np.abs(fp_grid)))

    value = oscillatory_integral(g, f, a, b, omega, tol)
    lhs = abs(value)
    return _report("l43", value, 0j, bound, lhs, tol, 1, label=label)


def lemma47_error_budget(p: Lemma47Params) -> float:
    """R0 = (pi + 3 gamma + 3 log(1 + f'(a) - N) + 1/delta) / pi."""
    return (math.pi + 3.0 * EULER_GAMMA + 3.0 * math.log1p(p.fpa - p.N)
            + 1.0 / p.delta) / math.pi


def weight_variation(g: WeightFunction, a: float, b: float, tol: float = 1e-10) -> float:
    """G = |g(b)| + int_a^b |g'(x)| dx."""
    variation, _ = adaptive_integral(lambda x: np.abs(g.derivative(x)), a, b, tol)
    return abs(float(g.value(np.asarray(float(b))))) + variation


def _default_tol(bound: float, count: int) -> float:
    return min(1e-9, bound / 1e4 / max(count, 1))


def _decomposition(g, p: Lemma47Params, tol: float):
    """Left side sum, sum of integrals, and the number of integrals."""
    n = np.arange(math.floor(p.a) + 1, math.floor(p.b) + 1, dtype=float)
    phases = np.exp(TWO_PI * 1j * p.f.value(n))
    if g is not None:
        phases = g.value(n) * phases
    lhs = compensated_sum(phases)

    fpa, fpb = p.fpa, p.fpb
    fv = p.f.value
    integrals = []
    for nu in p.nu_range:
        omega = TWO_PI * max(abs(fpa - nu), abs(fpb - nu))
        phase = (lambda x, nu=nu: TWO_PI * (fv(x) - nu * x))
        integrals.append(oscillatory_integral(g, phase, p.a, p.b, omega, tol))
    return lhs, compensated_sum(integrals), len(integrals)


def _check_sum(lemma, g, G, p, tol, label):
    if p.b - p.a > MAX_INTERVAL:
        raise DomainError(f"interval length {p.b - p.a:g} exceeds the cap {MAX_INTERVAL:g}")
    p.validate()
    bound = G * lemma47_error_budget(p)
    count = len(p.nu_range)
    tol = _default_tol(bound, count) if tol is None else float(tol)
    lhs, rhs, count = _decomposition(g, p, tol)
    flags = ("low_information",) if p.low_information else ()
    return _report(lemma, lhs, rhs, bound, abs(lhs - rhs), tol, count, flags, label)


def check_lemma47(p: Lemma47Params, tol: Optional[float] = None, label: str = "") -> LemmaReport:
    """Compare the exponential sum with its integral replacement."""
    return _check_sum("l47", None, 1.0, p, tol, label)


def check_lemma410(g: WeightFunction, p: Lemma47Params, tol: Optional[float] = None,
                   label: str = "") -> LemmaReport:
    """Weighted sum sum g(n) e^{2 pi i f(n)} against its integrals; bound G R0."""
    g.check_continuous(p.a, p.b)
    G = weight_variation(g, p.a, p.b)
    return _check_sum("l410", g, G, p, tol, label)
