"""Seeded parametric families of phases and weights for the lemma suites.

Every generator takes an explicit seed so that a suite is reproducible
across machines; the default seed is 0x5EED.
"""

from __future__ import annotations

import math
from typing import List, Tuple

import numpy as np

from .exceptions import MonotonicityError
from .expsum import LOW_INFORMATION_DELTA, Lemma47Params
from .numerics import PhaseFunction, WeightFunction

DEFAULT_SEED = 0x5EED


def log_phase(beta: float, a=None, b=None) -> PhaseFunction:
    """f(x) = beta log x, f'(x) = beta / x."""
    return PhaseFunction(lambda x: beta * np.log(x), lambda x: beta / np.asarray(x, dtype=float), a, b)


def quadratic_phase(alpha: float, beta: float, a=None, b=None) -> PhaseFunction:
    """f(x) = alpha x - beta x^2 / 2, f'(x) = alpha - beta x."""
    return PhaseFunction(lambda x: alpha * x - 0.5 * beta * x * x,
                         lambda x: alpha - beta * np.asarray(x, dtype=float), a, b)


def linear_phase(c: float, a=None, b=None) -> PhaseFunction:
    return PhaseFunction(lambda x: c * x, lambda x: np.full_like(np.asarray(x, dtype=float), c), a, b)


def zeta_phase(t: float, a=None, b=None) -> PhaseFunction:
    """The phase (t / 2 pi) log x behind n^{-it}."""
    return log_phase(t / (2.0 * math.pi), a, b)


def power_weight(alpha: float) -> WeightFunction:
    """g(x) = x^{-alpha}."""
    return WeightFunction(lambda x: np.asarray(x, dtype=float) ** -alpha,
                          lambda x: -alpha * np.asarray(x, dtype=float) ** (-alpha - 1.0))


def rational_weight() -> WeightFunction:
    """g(x) = 1 / (1 + x)."""
    return WeightFunction(lambda x: 1.0 / (1.0 + np.asarray(x, dtype=float)),
                          lambda x: -1.0 / (1.0 + np.asarray(x, dtype=float)) ** 2)


def cosine_weight(kappa: float, depth: float = 0.5) -> WeightFunction:
    """g(x) = 1 + depth cos(kappa x); not monotone, so G exceeds |g(b)| + |g(a) - g(b)|."""
    return WeightFunction(lambda x: 1.0 + depth * np.cos(kappa * np.asarray(x, dtype=float)),
                          lambda x: -depth * kappa * np.sin(kappa * np.asarray(x, dtype=float)))


def _log_uniform(rng, lo, hi):
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def lemma43_family(count: int, seed: int = DEFAULT_SEED) -> List[Tuple[str, WeightFunction, PhaseFunction, float, float]]:
    """Power weights x^{-alpha} crossed with logarithmic and quadratic phases.

    Quadratic draws whose g/f' is not monotone on the interval are redrawn.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        alpha = float(rng.uniform(0.0, 2.0))
        a = float(rng.uniform(1.0, 10.0))
        b = a + _log_uniform(rng, 0.5, 20.0)
        g = power_weight(alpha)
        if rng.random() < 0.5:
            beta = _log_uniform(rng, 0.5, 200.0)
            f = log_phase(beta, a, b)
            label = f"pow{alpha:.4f}-log{beta:.4f}"
        else:
            slope_b = _log_uniform(rng, 0.5, 50.0)
            beta = _log_uniform(rng, 0.01, 5.0)
            alpha_lin = slope_b + beta * b
            f = quadratic_phase(alpha_lin, beta, a, b)
            xs = np.linspace(a, b, 256)
            dq = np.diff(g.value(xs) / f.derivative(xs))
            if not (np.all(dq >= 0.0) or np.all(dq <= 0.0)):
                continue
            label = f"pow{alpha:.4f}-quad{alpha_lin:.4f},{beta:.4f}"
        out.append((f"{len(out):04d}:{label}", g, f, a, b))
    return out


def random_lemma47_params(rng) -> Lemma47Params:
    """One draw with f'(a) <= 50, delta >= 0.05 and b - a <= 200."""
    while True:
        fpa = _log_uniform(rng, 0.02, 50.0)
        if 1.0 - (fpa - math.floor(fpa)) < LOW_INFORMATION_DELTA:
            continue
        length = _log_uniform(rng, 1.0, 200.0)
        a = float(rng.uniform(1.0, 50.0))
        b = a + length
        if rng.random() < 0.5:
            f = log_phase(fpa * a, a, b)
        else:
            fpb = fpa * float(rng.uniform(0.05, 0.95))
            beta = (fpa - fpb) / length
            f = quadratic_phase(fpa + beta * a, beta, a, b)
        fpb = float(f.derivative(np.asarray(b)))
        N = int(rng.integers(0, math.floor(fpb) + 1))
        p = Lemma47Params(f, N)
        try:
            p.validate()
        except MonotonicityError:
            continue
        return p


def lemma47_family(count: int, seed: int = DEFAULT_SEED) -> List[Lemma47Params]:
    rng = np.random.default_rng(seed)
    return [random_lemma47_params(rng) for _ in range(count)]


def lemma410_family(count: int, seed: int = DEFAULT_SEED) -> List[Tuple[WeightFunction, Lemma47Params]]:
    """Cycles through power, rational and cosine weights."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        p = random_lemma47_params(rng)
        kind = i % 3
        if kind == 0:
            g = power_weight(float(rng.uniform(0.0, 1.5)))
        elif kind == 1:
            g = rational_weight()
        else:
            g = cosine_weight(float(rng.uniform(0.05, 1.0)))
        out.append((g, p))
    return out


def theorem_instance(t: float = 10.0, x: float = 10.0, M: float = 200.0) -> Lemma47Params:
    """The phase (t/2pi) log y on [x, M] with N = 0; f'(a) = 1/(2 pi) when t = x."""
    return Lemma47Params(zeta_phase(t, x, M), 0)
