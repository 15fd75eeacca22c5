"""Command line front end: ``zetabound {constants,sweep,lemmas,eval}``.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 numerical failure (quadrature or oracle precision).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import suites
from .exceptions import DomainError, HypothesisViolation, NumericalFailure
from .families import DEFAULT_SEED
from .numerics import EULER_GAMMA
from .sweep import (
    DEFAULT_SIGMAS,
    DEFAULT_T_RANGE,
    DEFAULT_XMULT,
    ConfigError,
    SweepConfig,
    format_csv,
    format_jsonl,
    is_numerical_failure,
    log_range,
    read_rows,
    replay_row,
    run_sweep,
    summarize,
)
from .zeta import (
    MEMORABLE_CONSTANT,
    PUBLISHED_CONSTANT,
    approx_zeta,
    error_radius,
    theorem_constant,
    zeta_oracle,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
REPLAY_TOL = 1e-12


def _float_list(text: str):
    return tuple(float(v) for v in text.split(",") if v.strip())


def _t_range(text: str):
    try:
        lo, hi, n = text.split(":")
        return float(lo), float(hi), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError("expected LO:HI:N") from None


def _seed(text: str) -> int:
    return int(text, 0)


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_constants(args) -> int:
    c = theorem_constant()
    chain = {
        "sharp_lt_published": c < PUBLISHED_CONSTANT,
        "published_lt_memorable": PUBLISHED_CONSTANT < MEMORABLE_CONSTANT,
    }
    if args.format == "json":
        print(json.dumps({
            "constant_sharp": c,
            "constant_published": PUBLISHED_CONSTANT,
            "constant_memorable": MEMORABLE_CONSTANT,
            "euler_gamma": EULER_GAMMA,
            **chain,
        }))
    else:
        mark = {True: "PASS", False: "FAIL"}
        print(f"C (proof constant)  = {c:.15f}")
        print(f"29/14 (published)   = {PUBLISHED_CONSTANT:.15f}")
        print(f"3 (memorable)       = {MEMORABLE_CONSTANT:.15f}")
        print(f"Euler gamma         = {EULER_GAMMA:.15f}")
        print(f"C < 29/14: {mark[chain['sharp_lt_published']]}")
        print(f"29/14 < 3: {mark[chain['published_lt_memorable']]}")
    return EXIT_OK if all(chain.values()) else EXIT_FAIL


def _replay(path) -> int:
    rows = read_rows(path)
    worst = 0.0
    for i, row in enumerate(rows):
        _, dev = replay_row(row)
        worst = max(worst, dev)
        if dev > REPLAY_TOL:
            _log(f"row {i}: relative deviation {dev:.3e}")
    _log(f"replayed {len(rows)} rows, max relative deviation {worst:.3e}")
    return EXIT_OK if worst <= REPLAY_TOL else EXIT_FAIL


def cmd_sweep(args) -> int:
    if args.replay:
        return _replay(args.replay)
    if args.t is not None and args.t_range is not None:
        raise ConfigError("t", "give either --t or --t-range, not both")
    if args.t is not None:
        t_list = args.t
    else:
        t_list = log_range(*(args.t_range or DEFAULT_T_RANGE))
    config = SweepConfig(
        sigma_list=args.sigma if args.sigma is not None else DEFAULT_SIGMAS,
        t_list=tuple(t_list),
        x_multipliers=args.xmult if args.xmult is not None else DEFAULT_XMULT,
        oracle_eps=args.oracle_eps,
        seed=args.seed,
        uncapped=args.unsafe_uncapped,
    )
    config.validate()
    if args.unsafe_uncapped:
        _log("warning: domain caps lifted; phases t*log(n) beyond ~1e5 rad lose "
             "double-precision accuracy and results are not certified")
    rows = run_sweep(config, jobs=args.jobs)
    _emit(format_csv(rows) if args.format == "csv" else format_jsonl(rows), args.out)

    s = summarize(rows)
    numeric = s["flagged"]
    failures = s["failures"] - (numeric if args.allow_flagged else 0)
    _log(f"points={s['points']} failures={failures} flagged={numeric} "
         f"max_ratio={s['max_ratio']:.6f} at (sigma, t, x)={s['argmax']}")
    if failures == 0:
        return EXIT_OK
    verification = sum(not r.passed and not is_numerical_failure(r) for r in rows)
    return EXIT_FAIL if verification else EXIT_NUMERIC


def cmd_lemmas(args) -> int:
    if not 0 <= args.count <= suites.MAX_COUNT:
        raise ConfigError("count", f"must be in [0, {suites.MAX_COUNT}]")
    rows = suites.run_suite(args.suite, args.count, args.seed, cross_check=args.cross_check)
    _emit(suites.format_reports(rows, args.format), args.out)
    summary = suites.suite_summary(rows)
    for lemma, s in summary.items():
        _log(f"{lemma}: rows={s['rows']} failures={s['failures']} max_ratio={s['max_ratio']:.6f}")
    if all(r.passed for r in rows):
        return EXIT_OK
    if any("numerical_failure" in r.flags for r in rows):
        return EXIT_NUMERIC
    return EXIT_FAIL


def cmd_eval(args) -> int:
    s = (args.sigma, args.t)
    approx = approx_zeta(s, args.x)
    radius = error_radius(s, args.x, args.mode)
    eps = radius / 1000.0
    oracle = zeta_oracle(s, eps, min_terms=max(args.x, 1.0))
    err = abs(oracle.value - approx.value)
    print(f"s                = {args.sigma!r} + {args.t!r}i, x = {args.x!r}")
    print(f"D(x, s)          = {approx.value.real:.15g} {approx.value.imag:+.15g}i")
    print(f"radius ({args.mode}) = {radius:.15g}")
    print(f"zeta oracle      = {oracle.value.real:.15g} {oracle.value.imag:+.15g}i "
          f"(M={oracle.M}, bound={oracle.error_bound:.3g})")
    print(f"observed error   = {err:.15g}")
    print(f"ratio            = {err / radius:.6f}")
    if approx.flags:
        print(f"flags            = {';'.join(approx.flags)}")
    return EXIT_OK if err <= radius + eps + 1e-9 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetabound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="print the approximation constants")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("sweep", help="verify the bound over a (sigma, t, x) grid")
    p.add_argument("--sigma", type=_float_list, help="comma-separated sigma values")
    p.add_argument("--t", type=_float_list, help="comma-separated t values")
    p.add_argument("--t-range", type=_t_range, metavar="LO:HI:N", help="log-spaced t values")
    p.add_argument("--xmult", type=_float_list, help="comma-separated multipliers, x = m t")
    p.add_argument("--oracle-eps", type=float, help="fixed oracle accuracy (default radius/1000)")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out", help="report path (default stdout)")
    p.add_argument("--allow-flagged", action="store_true",
                   help="do not count numerically flagged rows as failures")
    p.add_argument("--replay", metavar="PATH", help="recompute every row of an existing report")
    p.add_argument("--unsafe-uncapped", action="store_true", help="lift the t and x caps")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemmas", help="run the exponential-sum lemma suites")
    p.add_argument("suite", nargs="?", choices=suites.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out")
    p.add_argument("--cross-check", action="store_true",
                   help="add g = 1 reduction rows to the weighted suite")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("eval", help="approximate zeta at one point and compare with the oracle")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--mode", choices=("published", "sharp", "memorable"), default="published")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HypothesisViolation, DomainError) as exc:
        _log(f"error: {exc}")
        return EXIT_USAGE
    except NumericalFailure as exc:
        _log(f"numerical failure: {exc}")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
