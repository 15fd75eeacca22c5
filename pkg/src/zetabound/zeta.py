"""Dirichlet-polynomial approximation of zeta(s) with a certified radius.

For s = sigma + i t with sigma >= 0 and 0 < t <= x,

    zeta(s) = sum_{n <= x} n^{-s} + x^{1-s}/(s-1) + theta * (29/14) x^{-sigma},

with |theta| <= 1.  :func:`approx_zeta` evaluates the main part and the
radius; :func:`zeta_oracle` is an independent Euler-Maclaurin evaluation
used to check the inequality numerically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

import numpy as np

from .exceptions import DomainError, HypothesisViolation, PoleError, PrecisionUnreachable
from .numerics import EULER_GAMMA, CompensatedAccumulator, compensated_sum

__all__ = [
    "PUBLISHED_CONSTANT",
    "MEMORABLE_CONSTANT",
    "ROUNDING_SLACK",
    "ZetaPoint",
    "ApproxResult",
    "OracleResult",
    "SweepRow",
    "dirichlet_sum",
    "theorem_constant",
    "error_radius",
    "approx_zeta",
    "zeta_oracle",
    "verify_point",
]

PUBLISHED_CONSTANT = 29.0 / 14.0
MEMORABLE_CONSTANT = 3.0
ROUNDING_SLACK = 1e-9
ORACLE_MAX_TERMS = 1 << 24
_CHUNK = 1 << 20
# max |B_3(u)| on [0, 1], attained at u = 1/2 +- sqrt(3)/6
_B3_SUP = math.sqrt(3.0) / 36.0
_UNIT_ROUNDOFF = 2.0 ** -53


@dataclass(frozen=True)
class ZetaPoint:
    """A point s = sigma + i t."""

    sigma: float
    t: float

    def __post_init__(self):
        object.__setattr__(self, "sigma", float(self.sigma))
        object.__setattr__(self, "t", float(self.t))
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise DomainError("sigma and t must be finite")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)

    @classmethod
    def coerce(cls, s: "PointLike") -> "ZetaPoint":
        if isinstance(s, ZetaPoint):
            return s
        if isinstance(s, tuple):
            return cls(*s)
        z = complex(s)
        return cls(z.real, z.imag)


PointLike = Union[ZetaPoint, complex, float, Tuple[float, float]]


@dataclass(frozen=True)
class ApproxResult:
    value: complex
    radius: float
    sharp_radius: float
    terms: int
    x: float
    flags: Tuple[str, ...] = ()


@dataclass(frozen=True)
class OracleResult:
    """``error_bound`` = Euler-Maclaurin remainder bound + ``rounding``."""

    value: complex
    error_bound: float
    M: int
    order: int
    rounding: float = 0.0


@dataclass(frozen=True)
class SweepRow:
    """One verified (sigma, t, x) point; ``passed`` serialises as ``pass``."""

    sigma: float
    t: float
    x: float
    observed_error: float
    radius: float
    ratio: float
    oracle_M: int
    oracle_bound: float
    passed: bool
    flags: Tuple[str, ...] = field(default_factory=tuple)


def _power_sum(sigma: float, t: float, n_max: int) -> complex:
    """sum_{n=1}^{n_max} n^{-sigma} (cos(t ln n) - i sin(t ln n))."""
    if n_max < 1:
        return 0j
    acc = CompensatedAccumulator()
    for start in range(1, n_max + 1, _CHUNK):
        n = np.arange(start, min(start + _CHUNK, n_max + 1), dtype=float)
        logn = np.log(n)
        mag = np.exp(-sigma * logn)
        phase = t * logn
        re = math.fsum((mag * np.cos(phase)).tolist())
        im = -math.fsum((mag * np.sin(phase)).tolist())
        acc.add(complex(re, im))
    return acc.value


def dirichlet_sum(s: PointLike, x: float) -> complex:
    """sum_{n <= x} n^{-s}, compensated.  Zero for 0 <= x < 1."""
    p = ZetaPoint.coerce(s)
    x = float(x)
    if not x >= 0.0 or math.isinf(x):
        raise DomainError(f"x must be finite and non-negative, got {x!r}")
    return _power_sum(p.sigma, p.t, int(math.floor(x)))


def theorem_constant() -> float:
    """(pi + 3 gamma + 3 log(1 + 1/(2 pi)) + 2 pi/(2 pi - 1)) / pi = 2.070795..."""
    two_pi = 2.0 * math.pi
    return (math.pi + 3.0 * EULER_GAMMA + 3.0 * math.log1p(1.0 / two_pi)
            + two_pi / (two_pi - 1.0)) / math.pi


_MODES = {
    "published": lambda: PUBLISHED_CONSTANT,
    "sharp": theorem_constant,
    "memorable": lambda: MEMORABLE_CONSTANT,
}


def error_radius(s: PointLike, x: float, mode: str = "published") -> float:
    """Certified radius K x^{-sigma} with K = 29/14, the sharp constant, or 3."""
    p = ZetaPoint.coerce(s)
    x = float(x)
    if p.sigma < 0.0:
        raise DomainError("error_radius requires sigma >= 0")
    if not x > 0.0:
        raise DomainError("error_radius requires x > 0")
    try:
        constant = _MODES[mode]()
    except KeyError:
        raise DomainError(f"unknown mode {mode!r}; expected one of {sorted(_MODES)}") from None
    return constant * x ** -p.sigma


def _check_hypotheses(p: ZetaPoint, x: float) -> None:
    if not x > 0.0 or math.isinf(x):
        raise HypothesisViolation("x > 0", f"x = {x!r}")
    if p.sigma < 0.0:
        raise HypothesisViolation("sigma >= 0", f"sigma = {p.sigma!r}")
    if not p.t > 0.0:
        raise HypothesisViolation("t > 0", f"t = {p.t!r}")
    if p.t > x:
        raise HypothesisViolation("t <= x", f"t = {p.t!r}, x = {x!r}")


def approx_zeta(s: PointLike, x: float) -> ApproxResult:
    """Main term sum_{n <= x} n^{-s} + x^{1-s}/(s-1) and its radius.

    Raises :class:`HypothesisViolation` unless sigma >= 0 and 0 < t <= x.
    """
    p = ZetaPoint.coerce(s)
    x = float(x)
    _check_hypotheses(p, x)
    sv = p.s
    terms = int(math.floor(x))
    value = _power_sum(p.sigma, p.t, terms) + cmath.exp((1.0 - sv) * math.log(x)) / (sv - 1.0)
    flags = ("empty_sum",) if terms == 0 else ()
    return ApproxResult(
        value=value,
        radius=error_radius(p, x, "published"),
        sharp_radius=error_radius(p, x, "sharp"),
        terms=terms,
        x=x,
        flags=flags,
    )


def _oracle_bound(sv: complex, sigma: float, M: int, order: int) -> float:
    if order == 0:
        # |s int_M^inf (1/2 - {u}) u^{-s-1} du| <= |s| / (2 sigma M^sigma)
        return abs(sv) / (2.0 * sigma) * M ** -sigma
    # Remainder after the B_2 term: -s(s+1)(s+2)/6 int_M^inf B3({u}) u^{-s-3} du
    return abs(sv * (sv + 1.0) * (sv + 2.0)) * _B3_SUP / (6.0 * (sigma + 2.0)) * M ** (-sigma - 2.0)


def _rounding_bound(sv: complex, sigma: float, M: int) -> float:
    """Worst-case floating point error of the order-0/1 oracle sum.

    Each term n^{-s} is off by at most u n^{-sigma} ((2|t| + sigma) log n + 4);
    the terms are summed against sum_{n<=M} n^{-sigma} <= 1 + int_1^M u^{-sigma} du,
    and the correction terms of size |M^{1-s}/(s-1)| carry the same relative error.
    """
    logM = math.log(M)
    rel = _UNIT_ROUNDOFF * ((2.0 * abs(sv.imag) + abs(sigma)) * logM + 4.0)
    if abs(sigma - 1.0) < 1e-12:
        mass = 1.0 + logM
    else:
        mass = 1.0 + math.expm1((1.0 - sigma) * logM) / (1.0 - sigma)
    m_pow = M ** -sigma
    correction = M * m_pow / abs(sv - 1.0) + m_pow
    return rel * (mass + correction)


def zeta_oracle(s: PointLike, target_eps: float = 1e-10, order: int = 1,
                min_terms: float = 1.0, M: Optional[int] = None) -> OracleResult:
    """Euler-Maclaurin evaluation of zeta(s) with an explicit error bound.

    zeta(s) = sum_{n<=M} n^{-s} + M^{1-s}/(s-1) - M^{-s}/2 [+ s M^{-s-1}/12] + R.

    Order 0 bounds R by |s|/(2 sigma M^sigma) and needs sigma > 0.  Order 1
    keeps the B_2 correction; integrating the tail by parts twice gives
    |R| <= |s(s+1)(s+2)| (sqrt(3)/36) M^{-sigma-2} / (6 (sigma+2)), valid for
    sigma > -1 here.  Unless ``M`` is given, M is the smallest power of two
    exceeding ``min_terms`` whose bound meets ``target_eps`` (at most 2^24).
    The reported bound also carries a worst-case rounding term, which grows
    with M, so very small targets at large |t| or sigma < 0 are refused with
    :class:`PrecisionUnreachable`.
    """
    p = ZetaPoint.coerce(s)
    sv = p.s
    if sv == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if order not in (0, 1):
        raise DomainError("order must be 0 or 1")
    if order == 0 and not p.sigma > 0.0:
        raise DomainError("order-0 remainder needs sigma > 0")
    if not p.sigma > -1.0:
        raise DomainError("zeta_oracle needs sigma > -1")
    if not target_eps > 0.0:
        raise DomainError("target_eps must be positive")

    def total(m):
        return _oracle_bound(sv, p.sigma, m, order) + _rounding_bound(sv, p.sigma, m)

    if M is None:
        M = 2
        while M <= min_terms:
            M *= 2
        while (total(M) > target_eps and M < ORACLE_MAX_TERMS
               and _rounding_bound(sv, p.sigma, M) <= target_eps):
            M *= 2
        if total(M) > target_eps or M > ORACLE_MAX_TERMS:
            raise PrecisionUnreachable(target_eps, total(M), M)
    else:
        M = int(M)
        if M < 1:
            raise DomainError("M must be a positive integer")
    rounding = _rounding_bound(sv, p.sigma, M)
    bound = _oracle_bound(sv, p.sigma, M, order) + rounding

    logM = math.log(M)
    m_pow = cmath.exp(-sv * logM)  # M^{-s}
    value = _power_sum(p.sigma, p.t, M) + M * m_pow / (sv - 1.0) - 0.5 * m_pow
    if order == 1:
        value += sv * m_pow / (12.0 * M)
    return OracleResult(value=value, error_bound=bound, M=M, order=order, rounding=rounding)


def verify_point(s: PointLike, x: float, oracle_eps: Optional[float] = None) -> SweepRow:
    """Compare :func:`approx_zeta` against the oracle at one point.

    The oracle runs at ``radius / 1000`` unless ``oracle_eps`` is given.
    The row passes when ratio <= 1 + (eps + 1e-9) / radius.
    """
    p = ZetaPoint.coerce(s)
    approx = approx_zeta(p, x)
    eps = approx.radius / 1000.0 if oracle_eps is None else float(oracle_eps)
    oracle = zeta_oracle(p, eps, min_terms=max(float(x), 1.0))
    observed = abs(oracle.value - approx.value)
    ratio = observed / approx.radius
    slack = (eps + ROUNDING_SLACK) / approx.radius
    flags = (f"slack={slack:.6e}",) + approx.flags
    return SweepRow(
        sigma=p.sigma,
        t=p.t,
        x=approx.x,
        observed_error=observed,
        radius=approx.radius,
        ratio=ratio,
        oracle_M=oracle.M,
        oracle_bound=oracle.error_bound,
        passed=ratio <= 1.0 + slack,
        flags=flags,
    )
