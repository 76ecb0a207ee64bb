"""Command-line front end.

Every command writes one JSON object per line to stdout, except ``lemmas``
(PASS/FAIL lines) and ``sweep --out csv``.  Exit codes: 0 computed or holds,
1 violation or suite failure, 2 usage or domain error.
"""

import argparse
import csv
import itertools
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import BohrError, NonMonotonePredicate
from .numerics import DEFAULT_TOL, ToleranceConfig
from .radii import PARAM_NAMES, Theorem, TheoremParams, sharp_radius
from .verify import (VIOLATION_EPS, check_holds, empirical_radius, lemma_suite,
                     sharpness_witness)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
AXIS_ALIASES = {"lambda": "lam", "N": "n"}


class UsageError(Exception):
    pass


def _add_theorem_args(parser):
    parser.add_argument("--theorem", required=True, choices=[t.value for t in Theorem],
                        help="theorem selector")
    parser.add_argument("--p", type=float, help="exponent p")
    parser.add_argument("--lambda", dest="lam", type=float, help="weight lambda")
    parser.add_argument("--t", type=float, help="convex weight t in (0, 1)")
    parser.add_argument("--n", type=int, help="lacunary start index N >= 2")


def _add_tolerance_args(parser, tol_help="root-finding absolute tolerance"):
    parser.add_argument("--tol", type=float, default=None, help=tol_help)
    parser.add_argument("--grid", type=int, default=DEFAULT_TOL.grid_points,
                        help="grid points for the sup over a")
    parser.add_argument("--violation-eps", type=float, default=VIOLATION_EPS,
                        help="excess over 1 treated as a violation")


def _params(args, overrides=None) -> TheoremParams:
    values = {"p": args.p, "lam": args.lam, "t": args.t, "n": args.n}
    values.update(overrides or {})
    wanted = PARAM_NAMES[Theorem(args.theorem)]
    extra = [k for k, v in values.items() if v is not None and k not in wanted]
    if extra:
        flags = ", ".join("--lambda" if k == "lam" else f"--{k}" for k in extra)
        raise UsageError(f"theorem {args.theorem} does not take {flags}")
    return TheoremParams(args.theorem, **{k: v for k, v in values.items() if v is not None})


def _tol_config(args, use_tol=True) -> ToleranceConfig:
    try:
        abs_tol = args.tol if (use_tol and args.tol is not None) else DEFAULT_TOL.abs_tol
        return ToleranceConfig(abs_tol=abs_tol, grid_points=args.grid)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(record, out):
    out.write(json.dumps(record, ensure_ascii=False) + "\n")
    out.flush()


def cmd_radius(args, out) -> int:
    result = sharp_radius(args.theorem, _params(args), _tol_config(args))
    _emit({"command": "radius", **result.as_dict()}, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = check_holds(args.theorem, _params(args), args.r, args.kind,
                         _tol_config(args), args.violation_eps)
    _emit({"command": "verify", **report.as_dict()}, out)
    return EXIT_VIOLATION if report.verdict == "violated" else EXIT_OK


def cmd_witness(args, out) -> int:
    result = sharpness_witness(args.theorem, _params(args), args.r,
                               _tol_config(args), args.violation_eps)
    _emit({"command": "witness", **result.as_dict()}, out)
    return EXIT_OK


def cmd_empirical(args, out) -> int:
    params = _params(args)
    tol = 1e-6 if args.tol is None else args.tol
    try:
        value = empirical_radius(args.theorem, params, tol, _tol_config(args, use_tol=False),
                                 args.violation_eps)
    except NonMonotonePredicate as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"command": "empirical", "theorem": args.theorem, "params": params.as_dict(),
               "empirical_radius": None, "transitions": exc.transitions}, out)
        return EXIT_VIOLATION
    closed = sharp_radius(args.theorem, params).value
    _emit({"command": "empirical", "theorem": args.theorem, "params": params.as_dict(),
           "empirical_radius": value, "closed_form": closed, "difference": value - closed,
           "tol": tol}, out)
    return EXIT_OK


def cmd_lemmas(args, out) -> int:
    report = lemma_suite(args.grid)
    for suite in report.suites:
        if args.json:
            _emit({"command": "lemmas", "suite": suite.name, "passed": suite.passed,
                   "checked": suite.checked, "failures": len(suite.failures)}, out)
        else:
            out.write(suite.line() + "\n")
    out.flush()
    return EXIT_OK if report.passed else EXIT_VIOLATION


def parse_axis(text: str, theorem: Theorem):
    """``name=start:stop:step`` -> ``(name, values)``; ``stop`` is inclusive."""
    name, sep, spec = text.partition("=")
    name = AXIS_ALIASES.get(name.strip(), name.strip())
    if not sep or name not in PARAM_NAMES[theorem]:
        raise UsageError(f"bad axis {text!r}; expected one of "
                         f"{', '.join(PARAM_NAMES[theorem])} as name=start:stop:step")
    try:
        start, stop, step = (float(s) for s in spec.split(":"))
    except ValueError:
        raise UsageError(f"bad axis range {spec!r}; expected start:stop:step") from None
    if not (step > 0 and start <= stop and all(map(math.isfinite, (start, stop, step)))):
        raise UsageError(f"axis {name} needs step > 0 and start <= stop")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = [round(start + i * step, 12) for i in range(count)]
    if name == "n":
        values = [int(round(v)) for v in values]
    return name, values


def _sweep_cell(job):
    params, empirical, violation_eps = job
    result = sharp_radius(params.theorem, params)
    row = {**params.as_dict(), "radius": result.value, "branch": result.branch,
           "region": result.region, "residual": result.residual}
    if empirical:
        try:
            row["empirical"] = empirical_radius(params.theorem, params,
                                                violation_eps=violation_eps)
        except BohrError:
            row["empirical"] = None
    return row


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def cmd_sweep(args, out) -> int:
    theorem = Theorem(args.theorem)
    axes = [parse_axis(a, theorem) for a in args.axis]
    names = [n for n, _ in axes]
    if len(set(names)) != len(names):
        raise UsageError("each axis may be given only once")
    fixed = {"p": args.p, "lam": args.lam, "t": args.t, "n": args.n}
    jobs = []
    for combo in itertools.product(*(values for _, values in axes)):
        jobs.append((_params(args, {**fixed, **dict(zip(names, combo))}),
                     args.empirical, args.violation_eps))

    columns = ["theorem", *PARAM_NAMES[theorem], "radius", "branch", "region", "residual"]
    if args.empirical:
        columns.append("empirical")
    writer = None
    if args.out == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)

    n_jobs = max(1, args.jobs)
    pool = ProcessPoolExecutor(max_workers=n_jobs) if n_jobs > 1 else None
    try:
        rows = pool.map(_sweep_cell, jobs) if pool else map(_sweep_cell, jobs)
        for row in rows:
            row = {"theorem": theorem.value, **row}
            if writer:
                writer.writerow([_fmt(row[c]) for c in columns])
                out.flush()
            else:
                _emit({"command": "sweep", **{c: row[c] for c in columns}}, out)
    finally:
        if pool:
            pool.shutdown()
    return EXIT_OK


def _env_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BOHR_KIT_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bohr-kit", description="Sharp Bohr-type radii: compute, verify, explore.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="closed-form sharp radius")
    _add_theorem_args(p)
    _add_tolerance_args(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("verify", help="sup over a of a functional at radius r")
    _add_theorem_args(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--kind", choices=["majorant", "extremal"], default="majorant")
    _add_tolerance_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="search for a sharpness witness at radius r")
    _add_theorem_args(p)
    p.add_argument("--r", type=float, required=True)
    _add_tolerance_args(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("empirical", help="recover the radius by scan and bisection")
    _add_theorem_args(p)
    _add_tolerance_args(p, tol_help="bisection width (default 1e-6)")
    p.set_defaults(func=cmd_empirical)

    p = sub.add_parser("lemmas", help="run the lemma property suites")
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--json", action="store_true", help="one JSON record per suite")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("sweep", help="radius table over a parameter grid")
    _add_theorem_args(p)
    p.add_argument("--axis", action="append", required=True,
                   help="name=start:stop:step, stop inclusive; repeatable")
    p.add_argument("--out", choices=["csv", "json"], default="csv")
    p.add_argument("--empirical", action="store_true",
                   help="also compute the empirical radius per cell")
    p.add_argument("--jobs", type=int, default=_env_jobs(),
                   help="worker processes (default: $BOHR_KIT_JOBS or 1)")
    p.add_argument("--violation-eps", type=float, default=VIOLATION_EPS)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (BohrError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
