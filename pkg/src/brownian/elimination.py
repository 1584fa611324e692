"""Row-reduction of A1/A2 to the identity, recording each stage.

Four operation groups are applied in a fixed order and their effect on the
identity matrix is accumulated alongside, so after the last group the
accumulated multiplier is the inverse. Conventions used in the coefficients:
``k_{n+1} = 1`` and ``g_n = 1`` (1-based subscripts).

A1, with ``rho_i`` the Operation 2 coefficient:

1. ``row i -= (k_i / k_{i+1}) row (i+1)``, i = 1..n-1
2. ``row i -= (k_i g_i / (k_{i+1} g_{i-1})) row (i-1)``, i = n..3
3. ``row 2 -= (k_2 a_1 g_2 / (k_3 c_1)) row 1``, then
   ``row i -= (k_i^2 g_i f_{i-1} / (k_{i+1} g_{i-1} c_{i-1})) row (i-1)``, i = 3..n
4. ``row i *= k_{i+1} / (k_i c_i)``

A2:

1. ``row i -= row (i+1)``, i = 1..n-1
2. ``row n -= (k_n / g_{n-1}) row (n-1)``, then
   ``row i -= (g_i / g_{i-1}) row (i-1)``, i = n-1..3
3. ``row 2 -= (a_1 g_2 / c_1) row 1``,
   ``row i -= (g_i k_{i-1} f_{i-1} / (g_{i-1} c_{i-1})) row (i-1)``, i = 3..n-1,
   ``row n -= (k_n k_{n-1} f_{n-1} / (g_{n-1} c_{n-1})) row (n-1)``
4. ``row i *= 1 / c_i`` for i < n and ``row n *= 1 / (k_n c_n)``

For A2 at n = 2 the Operation 2 group is empty and Operation 3 uses
``k_2 a_1 / c_1`` (the last row still holds ``k_n a_1``).
"""

from dataclasses import dataclass, field as dc_field

from .closed_form import inverse
from .errors import EliminationBreakdown, SingularInput, StageMismatch
from .matrix import DenseMatrix
from .model import BrownianParams, Variant, build_matrix, helper_seqs, validate_params


@dataclass
class StageRecord:
    stage: int
    working: DenseMatrix
    multiplier: DenseMatrix


@dataclass
class EliminationTrace:
    params: BrownianParams
    stages: list = dc_field(default_factory=list)

    @property
    def inverse(self):
        return self.stages[-1].multiplier

    def determinant(self):
        """Product of the stage-3 pivots; Operations 1-3 are unimodular."""
        det = self.params.field.one
        w = self.stages[2].working
        for i in range(w.n):
            det = det * w[i, i]
        return det


@dataclass
class StageReport:
    stage: int
    checks: list


class _Ctx:
    """1-based accessors with the ``k_{n+1} = 1``, ``g_n = 1`` conventions."""

    def __init__(self, p):
        self.p = p
        self.n = p.n
        self.h = helper_seqs(p)
        self.one = p.field.one

    def k(self, i):
        return self.one if i == self.n + 1 else self.p.k[i - 1]

    def a(self, i):
        return self.p.a[i - 1]

    def b(self, i):
        return self.p.b[i - 1]

    def c(self, i):
        return self.h.c[i]

    def f(self, i):
        return self.h.f[i]

    def g(self, i):
        return self.one if i == self.n else self.h.g[i]

    def gk(self, i):
        """``k_{i+1} - k_i`` (A1) or ``k_i - k_{i+1}`` (A2) for any i < n."""
        if self.p.variant is Variant.A1:
            return self.k(i + 1) - self.k(i)
        return self.k(i) - self.k(i + 1)


def _require_nonzero(value, stage, index, what):
    if value == 0:
        raise EliminationBreakdown(stage, index, f"{what} = 0")


def _sub_row(w, m, i, coef, r):
    # 1-based rows: row i -= coef * row r, on both sides
    if coef == 0:
        return
    for mat in (w, m):
        ri, rr = mat.rows[i - 1], mat.rows[r - 1]
        mat.rows[i - 1] = [x - coef * y for x, y in zip(ri, rr)]


def _scale_row(w, m, i, s):
    for mat in (w, m):
        mat.rows[i - 1] = [s * x for x in mat.rows[i - 1]]


def _snapshot(trace, stage, w, m):
    trace.stages.append(StageRecord(stage, w.copy(), m.copy()))


def eliminate(p):
    """Run Operations 1-4 on ``p``'s matrix and return the four-stage trace.

    Raises SingularInput for invalid parameters and EliminationBreakdown
    (checked before each stage) when a coefficient divisor vanishes.
    """
    report = validate_params(p)
    if not report.valid:
        raise SingularInput(report.reasons)
    x = _Ctx(p)
    n = p.n
    w = build_matrix(p)
    m = DenseMatrix.identity(n, p.field)
    trace = EliminationTrace(p)
    if p.variant is Variant.A1:
        _eliminate_a1(x, w, m, trace)
    else:
        _eliminate_a2(x, w, m, trace)
    return trace


def _eliminate_a1(x, w, m, trace):
    n = x.n
    for i in range(2, n + 1):
        _require_nonzero(x.k(i), 1, i, f"k{i}")
    for i in range(1, n):
        _sub_row(w, m, i, x.k(i) / x.k(i + 1), i + 1)
    _snapshot(trace, 1, w, m)

    for i in range(2, n):
        _require_nonzero(x.g(i), 2, i, f"g{i}")
    for i in range(n, 2, -1):
        _sub_row(w, m, i, x.k(i) * x.g(i) / (x.k(i + 1) * x.g(i - 1)), i - 1)
    _snapshot(trace, 2, w, m)

    for i in range(1, n):
        _require_nonzero(x.c(i), 3, i, f"c{i}")
    if n >= 2:
        _sub_row(w, m, 2, x.k(2) * x.a(1) * x.g(2) / (x.k(3) * x.c(1)), 1)
    for i in range(3, n + 1):
        coef = x.k(i) * x.k(i) * x.g(i) * x.f(i - 1) / (x.k(i + 1) * x.g(i - 1) * x.c(i - 1))
        _sub_row(w, m, i, coef, i - 1)
    _snapshot(trace, 3, w, m)

    _require_nonzero(x.c(n), 4, n, f"c{n}")
    for i in range(1, n + 1):
        _scale_row(w, m, i, x.k(i + 1) / (x.k(i) * x.c(i)))
    _snapshot(trace, 4, w, m)


def _eliminate_a2(x, w, m, trace):
    n = x.n
    for i in range(1, n):
        _sub_row(w, m, i, x.one, i + 1)
    _snapshot(trace, 1, w, m)

    for i in range(2, n):
        _require_nonzero(x.g(i), 2, i, f"g{i}")
    if n >= 3:
        _sub_row(w, m, n, x.k(n) / x.g(n - 1), n - 1)
        for i in range(n - 1, 2, -1):
            _sub_row(w, m, i, x.g(i) / x.g(i - 1), i - 1)
    _snapshot(trace, 2, w, m)

    for i in range(1, n):
        _require_nonzero(x.c(i), 3, i, f"c{i}")
    if n == 2:
        _sub_row(w, m, 2, x.k(2) * x.a(1) / x.c(1), 1)
    elif n >= 3:
        _sub_row(w, m, 2, x.a(1) * x.g(2) / x.c(1), 1)
        for i in range(3, n):
            _sub_row(w, m, i, x.g(i) * x.k(i - 1) * x.f(i - 1) / (x.g(i - 1) * x.c(i - 1)), i - 1)
        coef = x.k(n) * x.k(n - 1) * x.f(n - 1) / (x.g(n - 1) * x.c(n - 1))
        _sub_row(w, m, n, coef, n - 1)
    _snapshot(trace, 3, w, m)

    _require_nonzero(x.k(n) * x.c(n), 4, n, f"k{n} c{n}")
    for i in range(1, n):
        _scale_row(w, m, i, 1 / x.c(i))
    _scale_row(w, m, n, 1 / (x.k(n) * x.c(n)))
    _snapshot(trace, 4, w, m)


# -- expected stage shapes -------------------------------------------------


def _pivots(x):
    """Diagonal left after Operations 2 and 3."""
    n = x.n
    if x.p.variant is Variant.A1:
        return [x.k(i) * x.c(i) / x.k(i + 1) for i in range(1, n + 1)]
    return [x.c(i) for i in range(1, n)] + [x.k(n) * x.c(n)]


def _stage1_working(x):
    n = x.n
    p = x.p
    out = DenseMatrix.zeros(n, p.field)
    piv = _pivots(x)
    for i in range(1, n):
        for j in range(1, i):
            if p.variant is Variant.A1:
                out[i - 1, j - 1] = x.k(j) * x.a(j) * x.gk(i) / x.k(i + 1)
            else:
                out[i - 1, j - 1] = x.a(j) * x.gk(i)
        out[i - 1, i - 1] = piv[i - 1]
    last = build_matrix(p).rows[n - 1]
    out.rows[n - 1] = list(last)
    return out


def _stage2_working(x):
    n = x.n
    p = x.p
    out = DenseMatrix.zeros(n, p.field)
    for i, v in enumerate(_pivots(x)):
        out[i, i] = v
    for i in range(2, n + 1):
        if p.variant is Variant.A1:
            if i == 2:
                v = x.k(1) * x.a(1) * x.g(2) / x.k(3)
            else:
                v = x.k(i - 1) * x.k(i) * x.g(i) * x.f(i - 1) / (x.k(i + 1) * x.g(i - 1))
        elif n == 2:
            v = x.k(2) * x.a(1)
        elif i == 2:
            v = x.a(1) * x.g(2)
        elif i < n:
            v = x.g(i) * x.k(i - 1) * x.f(i - 1) / x.g(i - 1)
        else:
            v = x.k(n) * x.k(n - 1) * x.f(n - 1) / x.g(n - 1)
        out[i - 1, i - 2] = v
    return out


def _form1(x):
    n = x.n
    out = DenseMatrix.identity(n, x.p.field)
    for i in range(1, n):
        if x.p.variant is Variant.A1:
            out[i - 1, i] = -(x.k(i) / x.k(i + 1))
        else:
            out[i - 1, i] = -x.one
    return out


def _form2(x):
    n = x.n
    out = _form1(x)
    for i in range(3, n + 1):
        if x.p.variant is Variant.A1:
            rho = x.k(i) * x.g(i) / (x.k(i + 1) * x.g(i - 1))
            out[i - 1, i - 1] = x.one + x.k(i - 1) * x.g(i) / (x.k(i + 1) * x.g(i - 1))
        else:
            rho = x.k(n) / x.g(n - 1) if i == n else x.g(i) / x.g(i - 1)
            out[i - 1, i - 1] = x.one + rho
        out[i - 1, i - 2] = -rho
    return out


def _form3(x):
    """Row ``i`` of the inverse scaled by the ``i``-th pivot."""
    inv = inverse(x.p).matrix
    piv = _pivots(x)
    return DenseMatrix._wrap([[s * v for v in row] for s, row in zip(piv, inv.rows)], x.p.field)


def _compare(stage, side, expected, got):
    for i, (re, rg) in enumerate(zip(expected.rows, got.rows)):
        for j, (e, g) in enumerate(zip(re, rg)):
            if e != g:
                raise StageMismatch(stage, side, (i, j), e, g)


def _check_band(stage, side, mat, lower, upper):
    bad = mat.bandwidth_violations(lower, upper)
    if bad:
        i, j = bad[0]
        raise StageMismatch(stage, side, (i, j), 0, mat[i, j])


def validate_stage(trace, stage, *, check_product=True):
    """Check the working matrix and multiplier after Operation ``stage``.

    Shapes: working lower triangular / lower bidiagonal / diagonal /
    identity; multiplier upper bidiagonal / tridiagonal / lower Hessenberg /
    the closed-form inverse. Explicit entries are compared as well, and with
    ``check_product`` the invariant ``multiplier @ A == working`` is checked.
    Raises StageMismatch at the first offending entry.
    """
    if stage not in (1, 2, 3, 4):
        raise ValueError("stage must be 1..4")
    rec = trace.stages[stage - 1]
    x = _Ctx(trace.params)
    n = x.n
    w, m = rec.working, rec.multiplier
    checks = []
    if stage == 1:
        _check_band(1, "working", w, n, 0)
        _compare(1, "working", _stage1_working(x), w)
        _check_band(1, "multiplier", m, 0, 1)
        _compare(1, "multiplier", _form1(x), m)
        checks += ["working lower triangular", "multiplier upper bidiagonal"]
    elif stage == 2:
        _check_band(2, "working", w, 1, 0)
        _compare(2, "working", _stage2_working(x), w)
        _check_band(2, "multiplier", m, 1, 1)
        _compare(2, "multiplier", _form2(x), m)
        checks += ["working lower bidiagonal", "multiplier tridiagonal"]
    elif stage == 3:
        _check_band(3, "working", w, 0, 0)
        expected = DenseMatrix.zeros(n, x.p.field)
        for i, v in enumerate(_pivots(x)):
            expected[i, i] = v
        _compare(3, "working", expected, w)
        _check_band(3, "multiplier", m, n, 1)
        _compare(3, "multiplier", _form3(x), m)
        checks += ["working diagonal", "multiplier lower Hessenberg"]
    else:
        _compare(4, "working", DenseMatrix.identity(n, x.p.field), w)
        _compare(4, "multiplier", inverse(x.p).matrix, m)
        checks += ["working identity", "multiplier equals closed form"]
    if check_product:
        _compare(stage, "multiplier @ A", w, m @ build_matrix(x.p))
        checks.append("multiplier @ A == working")
    return StageReport(stage, checks)
