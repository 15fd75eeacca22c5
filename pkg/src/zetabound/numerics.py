"""Numerical foundation: constants, digamma, compensated sums and quadrature.

Complex quantities are plain Python ``complex`` (IEEE double components);
array work is done with numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .exceptions import DomainError, MonotonicityError, QuadratureError

__all__ = [
    "EULER_GAMMA",
    "euler_gamma",
    "digamma",
    "compensated_sum",
    "CompensatedAccumulator",
    "PhaseFunction",
    "WeightFunction",
    "adaptive_integral",
    "oscillatory_integral",
]

EULER_GAMMA = 0.57721566490153286061

# B_{2k} / (2k) for k = 1..6
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
)
_DIGAMMA_SHIFT = 10.0


def euler_gamma() -> float:
    """Euler's constant 0.5772156649015329..."""
    return EULER_GAMMA


def digamma(x: float) -> float:
    """Logarithmic derivative of the Gamma function, Gamma'(x)/Gamma(x).

    Shifts ``x`` upward with psi(x) = psi(x+1) - 1/x until x >= 10, then sums
    the Stirling-type asymptotic series with six Bernoulli terms.
    """
    x = float(x)
    if not x > 0.0 or math.isinf(x):
        raise DomainError(f"digamma requires finite x > 0, got {x!r}")
    shift = 0.0
    while x < _DIGAMMA_SHIFT:
        shift += 1.0 / x
        x += 1.0
    r2 = 1.0 / (x * x)
    series = 0.0
    for c in reversed(_DIGAMMA_ASYMPTOTIC):
        series = (series + c) * r2
    return math.log(x) - 0.5 / x - series - shift


def compensated_sum(terms: Iterable[complex]) -> complex:
    """Sum complex terms with correctly rounded real and imaginary parts.

    Accepts any iterable of numbers or a numpy array.  Each component is
    summed with :func:`math.fsum`, so the result is within one ulp of the
    exact sum of the given floating point terms.
    """
    if isinstance(terms, np.ndarray):
        arr = terms.ravel()
        if np.iscomplexobj(arr):
            return complex(math.fsum(arr.real.tolist()), math.fsum(arr.imag.tolist()))
        return complex(math.fsum(arr.tolist()), 0.0)
    re = []
    im = []
    for z in terms:
        z = complex(z)
        re.append(z.real)
        im.append(z.imag)
    return complex(math.fsum(re), math.fsum(im))


class CompensatedAccumulator:
    """Running complex sum with Neumaier compensation.

    Useful when terms arrive in blocks (e.g. chunked partial sums) and a
    single :func:`compensated_sum` call over everything is impractical.
    """

    __slots__ = ("_re", "_im", "_cre", "_cim")

    def __init__(self, start: complex = 0.0):
        start = complex(start)
        self._re, self._im = start.real, start.imag
        self._cre = self._cim = 0.0

    @staticmethod
    def _two_sum(s, c, v):
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        return t, c

    def add(self, z: complex) -> None:
        z = complex(z)
        self._re, self._cre = self._two_sum(self._re, self._cre, z.real)
        self._im, self._cim = self._two_sum(self._im, self._cim, z.imag)

    def extend(self, terms: Iterable[complex]) -> None:
        for z in terms:
            self.add(z)

    @property
    def value(self) -> complex:
        return complex(self._re + self._cre, self._im + self._cim)

    @property
    def compensation(self) -> complex:
        return complex(self._cre, self._cim)


@dataclass(frozen=True)
class PhaseFunction:
    """Real phase f with derivative f', optionally tied to an interval.

    Both callables must accept numpy arrays.
    """

    value: Callable
    derivative: Callable
    a: Optional[float] = None
    b: Optional[float] = None

    def __call__(self, x):
        return self.value(x)

    @property
    def domain(self):
        return self.a, self.b

    def on(self, a: float, b: float) -> "PhaseFunction":
        return PhaseFunction(self.value, self.derivative, float(a), float(b))

    def check_strictly_decreasing(self, a=None, b=None, samples: int = 256) -> None:
        """Sample f' on a uniform grid and require strict decrease."""
        a = self.a if a is None else a
        b = self.b if b is None else b
        x = np.linspace(a, b, samples)
        d = np.asarray(self.derivative(x), dtype=float)
        if not np.all(np.isfinite(d)):
            raise MonotonicityError("f' finite on [a, b]")
        if not np.all(np.diff(d) < 0.0):
            raise MonotonicityError("f' strictly decreasing on [a, b]",
                                    f"sampled at {samples} points")


@dataclass(frozen=True)
class WeightFunction:
    """Amplitude g with derivative g' (vectorised callables)."""

    value: Callable
    derivative: Callable

    def __call__(self, x):
        return self.value(x)

    @classmethod
    def constant(cls, c: float = 1.0) -> "WeightFunction":
        return cls(lambda x: np.full_like(np.asarray(x, dtype=float), c),
                   lambda x: np.zeros_like(np.asarray(x, dtype=float)))

    def check_continuous(self, a: float, b: float, samples: int = 256) -> None:
        x = np.linspace(a, b, samples)
        if not (np.all(np.isfinite(self.value(x))) and np.all(np.isfinite(self.derivative(x)))):
            raise DomainError("weight or its derivative is not finite on the interval")


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(7)
# one coarse 7-point rule on [-1, 1] followed by one on each half
_NODES_21 = np.concatenate([_GL_NODES, 0.5 * (_GL_NODES - 1.0), 0.5 * (_GL_NODES + 1.0)])
_EPS = np.finfo(float).eps
_MAX_PANELS = 1 << 22
_BATCH = 1 << 15


def _panel_rules(func, left, right):
    """Coarse and two-half 7-point Gauss-Legendre values on each panel."""
    mid = 0.5 * (left + right)
    half = 0.5 * (right - left)
    x = mid[:, None] + half[:, None] * _NODES_21[None, :]
    y = np.asarray(func(x.ravel())).reshape(x.shape)
    coarse = half * (y[:, :7] @ _GL_WEIGHTS)
    fine = 0.5 * half * (y[:, 7:14] @ _GL_WEIGHTS + y[:, 14:] @ _GL_WEIGHTS)
    mag = 0.5 * half * (np.abs(y[:, 7:14]) @ _GL_WEIGHTS + np.abs(y[:, 14:]) @ _GL_WEIGHTS)
    return coarse, fine, mag


def adaptive_integral(func, a: float, b: float, tol: float, max_width: Optional[float] = None,
                      max_depth: int = 48):
    """Adaptive composite 7-point Gauss-Legendre quadrature.

    ``func`` must be vectorised.  The interval is first cut into panels no
    wider than ``max_width``; each panel is compared against its two halves
    and bisected until the difference is within its share of ``tol``.
    Returns ``(value, error_estimate)``; value is complex if ``func`` is.
    """
    a = float(a)
    b = float(b)
    if not a < b:
        raise DomainError(f"invalid interval: need a < b, got [{a}, {b}]")
    if not tol > 0:
        raise DomainError("tol must be positive")
    length = b - a
    n0 = 1 if max_width is None else max(1, math.ceil(length / max_width))
    if n0 > _MAX_PANELS:
        raise QuadratureError("panel count exceeds limit", math.nan, math.inf)
    edges = np.linspace(a, b, n0 + 1)

    accepted = []
    err_total = 0.0
    pending = [(edges[:-1], edges[1:])]
    unresolved = []
    depth = 0
    while pending:
        if depth > max_depth:
            best = compensated_sum(np.concatenate(accepted + [f for f, _ in unresolved]))
            raise QuadratureError("maximum bisection depth reached", best,
                                  err_total + sum(float(e.sum()) for _, e in unresolved))
        next_left, next_right = [], []
        unresolved = []
        for left, right in pending:
            for i in range(0, left.size, _BATCH):
                lft, rgt = left[i:i + _BATCH], right[i:i + _BATCH]
                coarse, fine, mag = _panel_rules(func, lft, rgt)
                est = np.abs(fine - coarse)
                local = np.maximum(tol * (rgt - lft) / length, 64.0 * _EPS * mag)
                ok = est <= local
                accepted.append(fine[ok])
                err_total += float(est[ok].sum())
                if not ok.all():
                    bad_l, bad_r = lft[~ok], rgt[~ok]
                    mid = 0.5 * (bad_l + bad_r)
                    next_left += [bad_l, mid]
                    next_right += [mid, bad_r]
                    unresolved.append((fine[~ok], est[~ok]))
        if next_left:
            pending = [(np.concatenate(next_left), np.concatenate(next_right))]
            if pending[0][0].size > _MAX_PANELS:
                best = compensated_sum(np.concatenate(accepted + [f for f, _ in unresolved]))
                raise QuadratureError("panel count exceeds limit", best,
                                      err_total + sum(float(e.sum()) for _, e in unresolved))
        else:
            pending = []
        depth += 1

    value = compensated_sum(np.concatenate(accepted))
    if not any(np.iscomplexobj(v) for v in accepted):
        value = value.real
    return value, err_total


def _as_callable(fn):
    if fn is None:
        return None
    if isinstance(fn, (PhaseFunction, WeightFunction)):
        return fn.value
    return fn


def oscillatory_integral(g, f, a: float, b: float, omega: float, tol: float = 1e-10) -> complex:
    """Integral of g(x) * exp(i f(x)) over [a, b].

    ``omega`` bounds |f'| on [a, b]; panels start no wider than
    pi / (2 max(1, omega)) so none covers more than a quarter period.
    ``g=None`` means g = 1.  Raises :class:`QuadratureError` when the
    estimated error cannot be brought below ``tol``.
    """
    if not a < b:
        raise DomainError(f"invalid interval: need a < b, got [{a}, {b}]")
    gf = _as_callable(g)
    ff = _as_callable(f)
    if gf is None:
        def integrand(x):
            return np.exp(1j * ff(x))
    else:
        def integrand(x):
            return gf(x) * np.exp(1j * ff(x))
    width = 0.5 * math.pi / max(1.0, abs(float(omega)))
    value, _ = adaptive_integral(integrand, a, b, tol, max_width=width)
    return complex(value)
