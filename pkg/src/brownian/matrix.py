"""Minimal dense square matrix over one scalar field.

Math indices are 1-based; storage is 0-based, so entry (i, j) of the math
lives at ``rows[i - 1][j - 1]``.
"""

import numpy as np

from .errors import DimensionMismatch
from .scalar import EXACT, FLOAT64, get_field


class DenseMatrix:
    __slots__ = ("rows", "field")

    def __init__(self, rows, field=EXACT):
        self.field = get_field(field)
        self.rows = [list(r) for r in rows]
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise DimensionMismatch("matrix is not square")

    @classmethod
    def _wrap(cls, rows, field):
        # trusted constructor: takes ownership of ``rows`` without copying
        m = cls.__new__(cls)
        m.rows = rows
        m.field = field
        return m

    @classmethod
    def zeros(cls, n, field=EXACT):
        field = get_field(field)
        z = field.zero
        return cls._wrap([[z] * n for _ in range(n)], field)

    @classmethod
    def identity(cls, n, field=EXACT):
        m = cls.zeros(n, field)
        for i in range(n):
            m.rows[i][i] = m.field.one
        return m

    @classmethod
    def from_numpy(cls, array):
        array = np.asarray(array, dtype=float)
        return cls._wrap(array.tolist(), FLOAT64)

    @property
    def n(self):
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.rows[i][j] = value

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"DenseMatrix({self.rows!r}, field={self.field.tag.value!r})"

    def copy(self):
        return DenseMatrix._wrap([list(r) for r in self.rows], self.field)

    def tolist(self):
        return [list(r) for r in self.rows]

    def to_numpy(self):
        return np.array(self.rows, dtype=float)

    def to_field(self, field):
        field = get_field(field)
        return DenseMatrix._wrap([[field.coerce(x) for x in r] for r in self.rows], field)

    def matmul(self, other):
        if self.n != other.n:
            raise DimensionMismatch(f"orders differ: {self.n} vs {other.n}")
        if not self.field.exact:
            return DenseMatrix.from_numpy(self.to_numpy() @ other.to_numpy())
        zero = self.field.zero
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if x]
            out.append([sum((x * col[k] for k, x in nz), zero) for col in cols])
        return DenseMatrix._wrap(out, self.field)

    __matmul__ = matmul

    def is_identity(self):
        return all(
            x == (1 if i == j else 0) for i, row in enumerate(self.rows) for j, x in enumerate(row)
        )

    def is_lower_hessenberg(self):
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(i + 2, self.n))

    def bandwidth_violations(self, lower, upper):
        """Entries (0-based) outside the band ``-lower <= j - i <= upper``."""
        return [
            (i, j)
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
            if x != 0 and not (-lower <= j - i <= upper)
        ]


def hadamard(x, y):
    """Entrywise product of two matrices of the same order and field."""
    if x.n != y.n:
        raise DimensionMismatch(f"orders differ: {x.n} vs {y.n}")
    if x.field != y.field:
        raise DimensionMismatch("fields differ")
    rows = [[p * q for p, q in zip(rx, ry)] for rx, ry in zip(x.rows, y.rows)]
    return DenseMatrix._wrap(rows, x.field)
