"""Randomised lemma suites plus the fixed witness cases, and their reports."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Callable, List, Sequence

from .exceptions import NumericalFailure
from .expsum import Lemma47Params, LemmaReport, check_lemma43, check_lemma47, check_lemma410
from .families import (
    DEFAULT_SEED,
    lemma43_family,
    lemma47_family,
    lemma410_family,
    linear_phase,
    power_weight,
    theorem_instance,
    zeta_phase,
)
from .numerics import WeightFunction

MAX_COUNT = 10 ** 4
SUITES = ("l43", "l47", "l410")
SHARPNESS_WINDOW = 1e-6
REDUCTION_TOL = 1e-12
LEMMA_CSV_HEADER = ("lemma", "label", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "error_bound",
                    "observed_error", "ratio", "quadrature_tol", "integrals", "pass", "flags")


def _guard(lemma: str, label: str, fn: Callable[[], LemmaReport]) -> LemmaReport:
    try:
        return fn()
    except NumericalFailure as exc:
        nan = math.nan
        return LemmaReport(lemma, complex(nan, nan), complex(nan, nan), nan, nan, nan, nan, 0,
                           False, ("numerical_failure", type(exc).__name__), label)


def sharpness_report() -> LemmaReport:
    """g = 1, f(x) = x on [0, pi]: the first-derivative bound 2 is attained."""
    r = check_lemma43(None, linear_phase(1.0), 0.0, math.pi, label="sharpness:g=1,f=x,[0,pi]")
    inside = abs(r.ratio - 1.0) <= SHARPNESS_WINDOW
    flags = r.flags + (("sharp",) if inside else ("not_sharp",))
    return LemmaReport(**{**r.__dict__, "flags": flags, "passed": r.passed and inside})


def run_l43(count: int, seed: int = DEFAULT_SEED) -> List[LemmaReport]:
    rows = [sharpness_report()]
    for label, g, f, a, b in lemma43_family(count, seed):
        rows.append(_guard("l43", label, lambda: check_lemma43(g, f, a, b, label=label)))
    return rows


def run_l47(count: int, seed: int = DEFAULT_SEED) -> List[LemmaReport]:
    rows = [check_lemma47(theorem_instance(), label="theorem:t=x=10,[10,200],N=0")]
    for i, p in enumerate(lemma47_family(count, seed)):
        label = f"{i:04d}:fpa={p.fpa:.6g},L={p.b - p.a:.6g},N={p.N}"
        rows.append(_guard("l47", label, lambda: check_lemma47(p, label=label)))
    return rows


def reduction_report(p: Lemma47Params, label: str) -> LemmaReport:
    """Weighted check with g = 1 against the unweighted check on the same params."""
    plain = check_lemma47(p)
    weighted = check_lemma410(WeightFunction.constant(1.0), p)
    bound_diff = abs(weighted.error_bound - plain.error_bound)
    obs_diff = abs(weighted.observed_error - plain.observed_error)
    ok = bound_diff <= REDUCTION_TOL and obs_diff <= REDUCTION_TOL
    flags = weighted.flags + (f"bound_diff={bound_diff:.3e}", f"observed_diff={obs_diff:.3e}")
    return LemmaReport(**{**weighted.__dict__, "lemma": "l410=l47", "label": label,
                          "flags": flags, "passed": weighted.passed and ok})


def run_l410(count: int, seed: int = DEFAULT_SEED, cross_check: bool = False) -> List[LemmaReport]:
    inner = Lemma47Params(zeta_phase(3.0, 3.0, 50.0), 0)
    rows = [check_lemma410(power_weight(0.5), inner, label="theorem:sigma=0.5,t=3,[3,50]")]
    family = lemma410_family(count, seed)
    for i, (g, p) in enumerate(family):
        label = f"{i:04d}:w{i % 3}:fpa={p.fpa:.6g},L={p.b - p.a:.6g},N={p.N}"
        rows.append(_guard("l410", label, lambda: check_lemma410(g, p, label=label)))
    if cross_check:
        for i, (_, p) in enumerate(family):
            label = f"{i:04d}:reduction"
            rows.append(_guard("l410=l47", label, lambda: reduction_report(p, label)))
    return rows


def run_suite(suite: str, count: int, seed: int = DEFAULT_SEED,
              cross_check: bool = False) -> List[LemmaReport]:
    if count < 0 or count > MAX_COUNT:
        raise ValueError(f"count must be in [0, {MAX_COUNT}]")
    if suite == "all":
        return (run_l43(count, seed) + run_l47(count, seed)
                + run_l410(count, seed, cross_check))
    if suite == "l43":
        return run_l43(count, seed)
    if suite == "l47":
        return run_l47(count, seed)
    if suite == "l410":
        return run_l410(count, seed, cross_check)
    raise ValueError(f"unknown suite {suite!r}")


def suite_summary(rows: Sequence[LemmaReport]) -> dict:
    out = {}
    for r in rows:
        s = out.setdefault(r.lemma, {"rows": 0, "failures": 0, "max_ratio": 0.0})
        s["rows"] += 1
        s["failures"] += not r.passed
        if math.isfinite(r.ratio):
            s["max_ratio"] = max(s["max_ratio"], r.ratio)
    return out


def _record(r: LemmaReport) -> dict:
    return {
        "lemma": r.lemma, "label": r.label,
        "lhs_re": r.lhs.real, "lhs_im": r.lhs.imag,
        "rhs_re": r.rhs_main.real, "rhs_im": r.rhs_main.imag,
        "error_bound": r.error_bound, "observed_error": r.observed_error,
        "ratio": r.ratio, "quadrature_tol": r.quadrature_tol,
        "integrals": r.integrals, "pass": r.passed, "flags": ";".join(r.flags),
    }


def format_reports(rows: Sequence[LemmaReport], fmt: str = "csv") -> str:
    if fmt == "jsonl":
        return "".join(json.dumps(_record(r)) + "\n" for r in rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(LEMMA_CSV_HEADER)
    for r in rows:
        rec = _record(r)
        w.writerow([v if isinstance(v, str) else
                     ("true" if v else "false") if isinstance(v, bool) else
                     str(v) if isinstance(v, int) else format(v, ".17g")
                     for v in rec.values()])
    return buf.getvalue()
