"""Timing sweep of the inversion methods with oracle residuals."""

import csv
import math
import time
from dataclasses import dataclass

from .closed_form import inverse
from .elimination import eliminate
from .errors import RecurrenceBreakdown
from .model import build_matrix, well_conditioned_params
from .oracle import gauss_inverse, residual
from .recursive import Form, recursive_inverse
from .scalar import FLOAT64, get_field

METHODS = ("closed", "recursive-i", "recursive-j", "elimination", "oracle")


def invert(p, method, *, fallback=False):
    """Dispatch to one inversion method; returns the inverse matrix."""
    if method == "closed":
        return inverse(p).matrix
    if method in ("recursive-i", "recursive-j"):
        form = Form.ROW_I if method.endswith("i") else Form.COL_J
        return recursive_inverse(p, form, fallback=fallback, count_ops=False)[0]
    if method == "elimination":
        return eliminate(p).inverse
    if method == "oracle":
        return gauss_inverse(build_matrix(p))
    raise ValueError(f"unknown method {method!r}")


@dataclass
class BenchRow:
    method: str
    n: int
    ms: float
    residual: float


def run_bench(sizes, methods, field=FLOAT64, variant="A1", repeats=5, min_time=0.2):
    """Best wall time per (method, n) on the well-conditioned family.

    A cell is re-timed up to ``repeats`` times while its accumulated time is
    under ``min_time`` seconds, so fast cells get several samples and slow
    ones a single run.
    """
    field = get_field(field)
    rows = []
    for n in sizes:
        p = well_conditioned_params(variant, n, field)
        a = build_matrix(p)
        for method in methods:
            best, spent = math.inf, 0.0
            for _ in range(max(repeats, 1)):
                t0 = time.perf_counter()
                try:
                    x = invert(p, method)
                except RecurrenceBreakdown:
                    x = invert(p, method, fallback=True)
                dt = time.perf_counter() - t0
                best, spent = min(best, dt), spent + dt
                if spent >= min_time:
                    break
            rows.append(BenchRow(method, n, best * 1e3, residual(a, x)))
    return rows


def loglog_slope(rows, method):
    """Least-squares slope of log(ms) against log(n) for one method."""
    pts = [(math.log(r.n), math.log(r.ms)) for r in rows if r.method == method and r.ms > 0]
    if len(pts) < 2:
        return math.nan
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    sxy = sum((x - mx) * (y - my) for x, y in pts)
    return sxy / sxx


def write_report(rows, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["method", "n", "ms", "residual"])
        for r in rows:
            w.writerow([r.method, r.n, f"{r.ms:.3f}", f"{r.residual:.3e}"])
