"""Generic Gauss-Jordan inverse and determinant used as ground truth.

Deliberately unstructured and O(n^3): nothing here knows about Brownian
matrices, so agreement with the structured paths is meaningful.
"""

import numpy as np

from .errors import DimensionMismatch, SingularMatrix
from .matrix import DenseMatrix


def gauss_inverse(m):
    """Inverse by Gauss-Jordan elimination.

    Exact field: first nonzero pivot down the column. Float field: the same
    elimination on a NumPy array with partial pivoting.
    """
    if not m.field.exact:
        return DenseMatrix.from_numpy(_gauss_inverse_float(m.to_numpy()))
    n = m.n
    one, zero = m.field.one, m.field.zero
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix(f"no nonzero pivot in column {col + 1}")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv = 1 / prow[col]
        prow = aug[col] = [x * inv for x in prow]
        for r in range(n):
            if r != col:
                factor = aug[r][col]
                if factor != 0:
                    aug[r] = [x - factor * y for x, y in zip(aug[r], prow)]
    return DenseMatrix._wrap([row[n:] for row in aug], m.field)


def _gauss_inverse_float(a):
    n = a.shape[0]
    aug = np.hstack([np.array(a, dtype=float), np.eye(n)])
    for col in range(n):
        piv = col + int(np.argmax(np.abs(aug[col:, col])))
        if aug[piv, col] == 0.0:
            raise SingularMatrix(f"no nonzero pivot in column {col + 1}")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] /= aug[col, col]
        factors = aug[:, col].copy()
        factors[col] = 0.0
        aug -= np.outer(factors, aug[col])
    return aug[:, n:]


def gauss_det(m):
    """Determinant by elimination with row-swap sign tracking (0 if singular)."""
    n = m.n
    a = [list(row) for row in m.rows]
    det = m.field.one
    for col in range(n):
        if m.field.exact:
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        else:
            piv = max(range(col, n), key=lambda r: abs(a[r][col]))
            if a[piv][col] == 0:
                piv = None
        if piv is None:
            return m.field.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pivot = a[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            factor = a[r][col] / pivot
            if factor != 0:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def residual(a, x):
    """``max |a @ x - I|`` computed in double precision."""
    if a.n != x.n:
        raise DimensionMismatch(f"orders differ: {a.n} vs {x.n}")
    prod = a.to_numpy() @ x.to_numpy()
    prod[np.diag_indices_from(prod)] -= 1.0
    return float(np.max(np.abs(prod))) if prod.size else 0.0
