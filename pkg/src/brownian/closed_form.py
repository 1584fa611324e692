"""Explicit inverse and determinant of A1 and A2.

Both inverses are lower Hessenberg. With the helper sequences of
:func:`brownian.model.helper_seqs` the entries are

* ``(i, i+1)``: ``-1 / c_i``
* ``(i, j)`` with ``i > j``:
  ``(-1)^(i+j) d_{j-1} g_i prod_{v=j+1}^{i-1} k_v f_v / prod_{v=j-1}^{i} c_v``
  (the empty product is 1)
* diagonal, interior ``1 < i < n``:
  ``(k_{i+1} b_{i-1} - k_{i-1} a_{i-1}) / (c_{i-1} c_i)`` for A1 and
  ``(k_{i-1} b_{i-1} - k_{i+1} a_{i-1}) / (c_{i-1} c_i)`` for A2
* corners: A1 ``k_2 / (k_1 c_1)`` and ``b_{n-1} / (c_{n-1} c_n)``;
  A2 ``1 / c_1`` and ``k_{n-1} b_{n-1} / (k_n c_{n-1} c_n)``
* zero above the first superdiagonal.
"""

from dataclasses import dataclass

from .errors import SingularInput
from .matrix import DenseMatrix
from .model import HelperSeqs, Variant, helper_seqs, validate_params


@dataclass(frozen=True)
class InverseResult:
    matrix: DenseMatrix
    variant: Variant
    helpers: HelperSeqs


def _check(p, h):
    report = validate_params(p, h)
    if not report.valid:
        raise SingularInput(report.reasons)


def diagonal_entry(p, h, i):
    """Diagonal entry ``(i, i)`` (1-based) for ``n >= 2``."""
    n = p.n
    k = (None,) + p.k
    a = (None,) + p.a
    b = (None,) + p.b
    c = h.c
    if p.variant is Variant.A1:
        if i == 1:
            return k[2] / (k[1] * c[1])
        if i == n:
            return b[n - 1] / (c[n - 1] * c[n])
        return (k[i + 1] * b[i - 1] - k[i - 1] * a[i - 1]) / (c[i - 1] * c[i])
    if i == 1:
        return 1 / c[1]
    if i == n:
        return k[n - 1] * b[n - 1] / (k[n] * c[n - 1] * c[n])
    return (k[i - 1] * b[i - 1] - k[i + 1] * a[i - 1]) / (c[i - 1] * c[i])


def inverse_entry(p, h, i, j):
    """Entry ``(i, j)`` of the inverse, 1-based, evaluated literally."""
    n = p.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"entry ({i},{j}) outside order {n}")
    zero = p.field.zero
    if j - i > 1:
        return zero
    _check(p, h)
    if n == 1:
        return 1 / (p.k[0] * p.b[0])
    if j - i == 1:
        return -1 / h.c[i]
    if i == j:
        return diagonal_entry(p, h, i)
    # ratios taken step by step so long products stay in floating range
    value = h.d[j - 1] * h.g[i] / (h.c[j - 1] * h.c[j])
    for v in range(j + 1, i):
        value = value * (p.k[v - 1] * h.f[v] / h.c[v])
    value = value / h.c[i]
    return value if (i + j) % 2 == 0 else -value


def inverse(p):
    """Assemble the full inverse in O(n^2) scalar operations.

    The subdiagonal products are carried down each column: moving from row
    ``i`` to ``i + 1`` multiplies the running term by ``-k_i f_i / c_{i+1}``.
    """
    h = helper_seqs(p)
    _check(p, h)
    n = p.n
    out = DenseMatrix.zeros(n, p.field)
    rows = out.rows
    if n == 1:
        rows[0][0] = 1 / (p.k[0] * p.b[0])
        return InverseResult(out, p.variant, h)

    c, d, f, g = h.c, h.d, h.f, h.g
    k = (None,) + p.k
    for i in range(1, n):
        rows[i - 1][i] = -1 / c[i]
    for i in range(1, n + 1):
        rows[i - 1][i - 1] = diagonal_entry(p, h, i)
    for j in range(1, n):
        term = -d[j - 1] / (c[j - 1] * c[j] * c[j + 1])
        rows[j][j - 1] = term * g[j + 1]
        for i in range(j + 2, n + 1):
            term = -term * k[i - 1] * f[i - 1] / c[i]
            rows[i - 1][j - 1] = term * g[i]
    return InverseResult(out, p.variant, h)


def determinant(p):
    """``k_1 * prod c_i`` for A1 and ``k_n * prod c_i`` for A2 (0 when singular)."""
    h = helper_seqs(p)
    det = p.k[0] if p.variant is Variant.A1 else p.k[-1]
    for i in range(1, p.n + 1):
        det = det * h.c[i]
    return det
