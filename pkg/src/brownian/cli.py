"""Command-line entry point: ``brownian {gen,invert,det,verify,bench}``.

Exit codes: 0 success, 1 a property or check failed, 2 usage or parse error.
"""

import argparse
import os
import sys
from pathlib import Path

from . import bench as benchmod
from . import io
from .closed_form import determinant
from .elimination import eliminate
from .errors import BrownianError, ParseError, RecurrenceBreakdown
from .model import Variant, build_matrix, random_params
from .oracle import gauss_det
from .recursive import Form, count_report, recursive_inverse, write_count_report
from .scalar import EXACT, FLOAT64, format_scalar
from .verify import run_verify

SEED_ENV = "BROWNIAN_SEED"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _seed(args):
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}")
    return args.seed


def _render(m):
    return "[" + ",".join("[" + ",".join(format_scalar(x) for x in row) + "]" for row in m.rows) + "]"


def _field(name):
    return EXACT if name == "exact" else FLOAT64


def cmd_gen(args):
    if args.params:
        p = io.read_params(args.params)
        if args.n is not None and args.n != p.n:
            raise UsageError(f"--n {args.n} disagrees with parameter file order {p.n}")
        if args.variant and Variant.parse(args.variant) is not p.variant:
            raise UsageError("--variant disagrees with parameter file")
    else:
        if args.variant is None or args.n is None:
            raise UsageError("gen needs --variant and --n unless --params is given")
        seed = _seed(args)
        if seed is None:
            raise UsageError("gen needs --params or --seed")
        print(f"seed: {seed}")
        p = random_params(args.variant, args.n, seed)
    fmt = args.format
    if fmt == "json":
        io.write_params(p, args.out)
    else:
        io.write_matrix(build_matrix(p), args.out, fmt)
    print(f"wrote {args.variant or p.variant.value} n={p.n} to {args.out}")
    return EXIT_OK


def cmd_invert(args):
    p = io.read_params(args.params, field=_field(args.field))
    method = args.method
    ops = None
    if args.count_ops and not method.startswith("recursive"):
        raise UsageError("--count-ops applies to recursive-i / recursive-j only")
    if method.startswith("recursive"):
        form = Form.ROW_I if method.endswith("i") else Form.COL_J
        try:
            x, ops = recursive_inverse(p, form)
        except RecurrenceBreakdown as exc:
            print(f"warning: RecurrenceBreakdown: {exc}; falling back to closed form", file=sys.stderr)
            x, ops = recursive_inverse(p, form, fallback=True)
    elif method == "elimination" and args.trace_dir:
        trace = eliminate(p)
        io.dump_trace(trace, args.trace_dir)
        x = trace.inverse
    else:
        x = benchmod.invert(p, method)
    if args.out:
        fmt = args.format or ("mm" if Path(args.out).suffix == ".mtx" else "csv")
        io.write_matrix(x, args.out, fmt)
        print(f"wrote inverse to {args.out}")
    else:
        print(_render(x))
    if args.count_ops:
        print(f"mul_div = {ops.mul_div}")
        print(f"add_sub = {ops.add_sub}")
    return EXIT_OK


def cmd_det(args):
    p = io.read_params(args.params)
    formula = determinant(p)
    if not args.oracle:
        print(f"formula: {format_scalar(formula)}")
        return EXIT_OK
    oracle = gauss_det(build_matrix(p))
    match = formula == oracle
    print(f"formula: {format_scalar(formula)}, oracle: {format_scalar(oracle)}, match: {str(match).lower()}")
    return EXIT_OK if match else EXIT_FAIL


def cmd_verify(args):
    seed = _seed(args)
    print(f"seed: {seed}")
    tallies = run_verify(args.variant, args.n_max, args.trials, seed)
    failed = False
    for name, t in tallies.items():
        status = "PASS" if t.failed == 0 else "FAIL"
        failed |= t.failed > 0
        line = f"{status} {name}: {t.passed} passed, {t.failed} failed, {t.skipped} skipped"
        if t.first_failure:
            line += f" (first failure {t.first_failure})"
        print(line)
    return EXIT_FAIL if failed else EXIT_OK


def _csv_list(text, cast=str):
    return [cast(t.strip()) for t in text.split(",") if t.strip()]


def cmd_bench(args):
    sizes = _csv_list(args.sizes, int)
    methods = _csv_list(args.methods)
    for m in methods:
        if m not in benchmod.METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {', '.join(benchmod.METHODS)}")
    rows = benchmod.run_bench(sizes, methods, _field(args.field), args.variant, args.repeats)
    benchmod.write_report(rows, args.out)
    for r in rows:
        print(f"{r.method:12s} n={r.n:6d} {r.ms:12.3f} ms  residual {r.residual:.3e}")
    for m in methods:
        print(f"slope {m}: {benchmod.loglog_slope(rows, m):.3f}")
    print(f"wrote {args.out}")
    if args.count_report:
        counts = count_report(args.variant, range(3, max(sizes) + 1) if args.count_max is None
                              else range(3, args.count_max + 1), seed=_seed(args) or 0)
        write_count_report(counts, args.count_report)
        print(f"wrote {args.count_report}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="brownian", description="Brownian-type test matrices with explicit Hessenberg inverses."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate parameters or a matrix")
    g.add_argument("--variant", type=str.lower, choices=["a1", "a2"])
    g.add_argument("--n", type=int)
    src = g.add_mutually_exclusive_group()
    src.add_argument("--params")
    src.add_argument("--seed", type=int)
    g.add_argument("--out", required=True)
    g.add_argument("--format", choices=["mm", "csv", "json"], default="json")
    g.set_defaults(func=cmd_gen)

    inv = sub.add_parser("invert", help="invert a parameterized matrix")
    inv.add_argument("--params", required=True)
    inv.add_argument("--method", choices=list(benchmod.METHODS), default="closed")
    inv.add_argument("--field", choices=["exact", "f64"], default="exact")
    inv.add_argument("--count-ops", action="store_true")
    inv.add_argument("--out")
    inv.add_argument("--format", choices=["mm", "csv"])
    inv.add_argument("--trace-dir", help="with --method elimination, dump every stage as .mtx")
    inv.set_defaults(func=cmd_invert)

    d = sub.add_parser("det", help="determinant from the product formula")
    d.add_argument("--params", required=True)
    d.add_argument("--oracle", action="store_true")
    d.set_defaults(func=cmd_det)

    v = sub.add_parser("verify", help="run the invariant suite on random instances")
    v.add_argument("--variant", type=str.lower, choices=["a1", "a2"], required=True)
    v.add_argument("--n-max", type=int, default=20)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time inversion methods")
    b.add_argument("--sizes", default="250,500,1000,2000")
    b.add_argument("--methods", default="closed,recursive-i,recursive-j,oracle")
    b.add_argument("--field", choices=["exact", "f64"], default="f64")
    b.add_argument("--variant", type=str.upper, choices=["A1", "A2"], default="A1")
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--out", default="report.csv")
    b.add_argument("--count-report", help="also write recurrence operation counts (CSV) to this path")
    b.add_argument("--count-max", type=int, help="largest order in the count sweep (default: max size)")
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError, FileNotFoundError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrownianError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
