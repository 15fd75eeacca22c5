"""Grid sweeps of the approximation bound and their CSV / JSON-lines reports."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import DomainError, NumericalFailure
from .zeta import SweepRow, verify_point

T_CAP = 1e4
X_CAP = 1e6
MAX_GRID_POINTS = 10 ** 6
CSV_HEADER = ("sigma", "t", "x", "observed_error", "radius", "ratio",
              "oracle_M", "oracle_bound", "pass", "flags")

DEFAULT_SIGMAS = (0.0, 0.5, 1.0, 2.0)
DEFAULT_T_RANGE = (0.5, 1000.0, 25)
DEFAULT_XMULT = (1.0, 2.0, 10.0)


class ConfigError(DomainError):
    """Invalid sweep configuration; ``field`` names the offending setting."""

    def __init__(self, field_name, message):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


def log_range(lo: float, hi: float, count: int) -> Tuple[float, ...]:
    if count < 1:
        raise ConfigError("t_range", "count must be >= 1")
    if not 0.0 < lo <= hi:
        raise ConfigError("t_range", "need 0 < lo <= hi")
    if count == 1:
        return (float(lo),)
    return tuple(float(v) for v in np.geomspace(lo, hi, count))


@dataclass(frozen=True)
class SweepConfig:
    sigma_list: Tuple[float, ...] = DEFAULT_SIGMAS
    t_list: Tuple[float, ...] = field(default_factory=lambda: log_range(*DEFAULT_T_RANGE))
    x_multipliers: Tuple[float, ...] = DEFAULT_XMULT
    oracle_eps: Optional[float] = None  # None: radius / 1000 per point
    seed: int = 0x5EED
    uncapped: bool = False

    def validate(self) -> None:
        if not self.sigma_list:
            raise ConfigError("sigma", "empty list")
        if not self.t_list:
            raise ConfigError("t", "empty list")
        if not self.x_multipliers:
            raise ConfigError("xmult", "empty list")
        for s in self.sigma_list:
            if not (math.isfinite(s) and s >= 0.0):
                raise ConfigError("sigma", f"need sigma >= 0, got {s!r}")
        for t in self.t_list:
            if not (math.isfinite(t) and t > 0.0):
                raise ConfigError("t", f"need t > 0, got {t!r}")
            if t > T_CAP and not self.uncapped:
                raise ConfigError("t", f"t = {t!r} exceeds cap {T_CAP:g}")
        for m in self.x_multipliers:
            if not (math.isfinite(m) and m >= 1.0):
                raise ConfigError("xmult", f"need multiplier >= 1, got {m!r}")
        if self.oracle_eps is not None and not self.oracle_eps > 0.0:
            raise ConfigError("oracle_eps", "must be positive")
        n = len(self.sigma_list) * len(self.t_list) * len(self.x_multipliers)
        if n > MAX_GRID_POINTS:
            raise ConfigError("grid", f"{n} points exceeds {MAX_GRID_POINTS}")

    def points(self) -> List[Tuple[float, float, float]]:
        """(sigma, t, x) triples, sigma-major; x = m t clamped into [1, 1e6]."""
        self.validate()
        pts = []
        for s in self.sigma_list:
            for t in self.t_list:
                for m in self.x_multipliers:
                    x = max(1.0, m * t)
                    if not self.uncapped:
                        x = min(x, X_CAP)
                    pts.append((float(s), float(t), float(x)))
        return pts


def _eps_flag(eps: Optional[float]) -> Tuple[str, ...]:
    return () if eps is None else (f"eps={eps!r}",)


def evaluate_point(args) -> SweepRow:
    """Worker: verify one point; numerical failures become flagged rows."""
    sigma, t, x, eps = args
    try:
        row = verify_point((sigma, t), x, eps)
    except NumericalFailure as exc:
        return SweepRow(sigma, t, x, math.nan, math.nan, math.nan, 0, math.nan, False,
                        ("numerical_failure", type(exc).__name__) + _eps_flag(eps))
    if eps is None:
        return row
    return SweepRow(**{**row.__dict__, "flags": row.flags + _eps_flag(eps)})


def run_sweep(config: SweepConfig, jobs: int = 1) -> List[SweepRow]:
    """Verify every grid point; row order follows :meth:`SweepConfig.points`."""
    tasks = [(s, t, x, config.oracle_eps) for s, t, x in config.points()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(evaluate_point, tasks, chunksize=8))
    return [evaluate_point(task) for task in tasks]


def is_numerical_failure(row: SweepRow) -> bool:
    return "numerical_failure" in row.flags


def summarize(rows: Sequence[SweepRow]) -> dict:
    finite = [r for r in rows if math.isfinite(r.ratio)]
    worst = max(finite, key=lambda r: r.ratio, default=None)
    return {
        "points": len(rows),
        "failures": sum(not r.passed for r in rows),
        "flagged": sum(is_numerical_failure(r) for r in rows),
        "max_ratio": worst.ratio if worst else math.nan,
        "argmax": (worst.sigma, worst.t, worst.x) if worst else None,
    }


# -- serialisation ---------------------------------------------------------

def _fmt(v: float) -> str:
    return format(v, ".17g")


def row_to_record(row: SweepRow) -> dict:
    return {
        "sigma": row.sigma,
        "t": row.t,
        "x": row.x,
        "observed_error": row.observed_error,
        "radius": row.radius,
        "ratio": row.ratio,
        "oracle_M": row.oracle_M,
        "oracle_bound": row.oracle_bound,
        "pass": row.passed,
        "flags": ";".join(row.flags),
    }


def record_to_row(rec: dict) -> SweepRow:
    flags = rec["flags"]
    passed = rec["pass"]
    if isinstance(passed, str):
        passed = passed == "true"
    return SweepRow(
        sigma=float(rec["sigma"]),
        t=float(rec["t"]),
        x=float(rec["x"]),
        observed_error=float(rec["observed_error"]),
        radius=float(rec["radius"]),
        ratio=float(rec["ratio"]),
        oracle_M=int(rec["oracle_M"]),
        oracle_bound=float(rec["oracle_bound"]),
        passed=bool(passed),
        flags=tuple(f for f in flags.split(";") if f),
    )


def format_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        rec = row_to_record(row)
        w.writerow([
            _fmt(rec["sigma"]), _fmt(rec["t"]), _fmt(rec["x"]),
            _fmt(rec["observed_error"]), _fmt(rec["radius"]), _fmt(rec["ratio"]),
            str(rec["oracle_M"]), _fmt(rec["oracle_bound"]),
            "true" if rec["pass"] else "false", rec["flags"],
        ])
    return buf.getvalue()


def format_jsonl(rows: Iterable[SweepRow]) -> str:
    return "".join(json.dumps(row_to_record(r)) + "\n" for r in rows)


def write_rows(rows: Sequence[SweepRow], path, fmt: str = "csv") -> None:
    text = format_csv(rows) if fmt == "csv" else format_jsonl(rows)
    Path(path).write_text(text)


def read_rows(path) -> List[SweepRow]:
    """Read a CSV or JSON-lines sweep report (format sniffed from content)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return [record_to_row(json.loads(line)) for line in text.splitlines() if line.strip()]
    return [record_to_row(rec) for rec in csv.DictReader(io.StringIO(text))]


def replay_row(row: SweepRow) -> Tuple[SweepRow, float]:
    """Recompute a row from its own inputs; return it and the relative deviation
    of the observed error."""
    eps = None
    for f in row.flags:
        if f.startswith("eps="):
            eps = float(f[4:])
    fresh = evaluate_point((row.sigma, row.t, row.x, eps))
    if math.isnan(row.observed_error) and math.isnan(fresh.observed_error):
        return fresh, 0.0
    scale = max(abs(row.observed_error), 1e-300)
    return fresh, abs(fresh.observed_error - row.observed_error) / scale
