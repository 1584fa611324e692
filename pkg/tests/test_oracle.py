from fractions import Fraction

import numpy as np
import pytest

from brownian import DenseMatrix, SingularMatrix, gauss_det, gauss_inverse, residual
from brownian.errors import DimensionMismatch
from brownian.model import build_matrix, well_conditioned_params
from brownian.closed_form import inverse
from conftest import adjugate_inverse, leibniz_det


def m(rows):
    return DenseMatrix([[Fraction(x) for x in r] for r in rows])


def test_gauss_inverse_examples():
    assert gauss_inverse(m([[1, 1], [1, 2]])).rows == [[2, -1], [-1, 1]]
    assert gauss_inverse(DenseMatrix.identity(4)) == DenseMatrix.identity(4)
    assert gauss_inverse(m([[1, 1, 1], [1, 2, 2], [1, 2, 3]])).rows == [[2, -1, 0], [-1, 2, -1], [0, -1, 1]]


def test_gauss_inverse_needs_row_swap():
    a = m([[0, 1, 2], [1, 0, 3], [4, -3, 8]])
    assert gauss_inverse(a).rows == adjugate_inverse(a.rows)


def test_gauss_det_examples():
    assert gauss_det(m([[1, 1, 1], [1, 2, 2], [1, 2, 3]])) == 1
    assert gauss_det(m([[3, 2, 1], [2, 2, 1], [1, 1, 1]])) == 1
    assert gauss_det(m([[1, 2, 3], [0, 0, 0], [4, 5, 6]])) == 0
    a = m([[0, 1, 2], [1, 0, 3], [4, -3, 8]])
    assert gauss_det(a) == leibniz_det(a.rows)


def test_singular_raises():
    with pytest.raises(SingularMatrix):
        gauss_inverse(m([[1, 2], [2, 4]]))


def test_float_inverse_matches_numpy():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(30, 30))
    x = gauss_inverse(DenseMatrix.from_numpy(a)).to_numpy()
    np.testing.assert_allclose(x, np.linalg.inv(a), rtol=1e-8, atol=1e-10)


def test_residual_identity():
    eye = DenseMatrix.identity(3).to_field("f64")
    assert residual(eye, eye) == 0.0


def test_residual_exact_inverse_as_float():
    p = well_conditioned_params("A1", 10)
    a = build_matrix(p).to_field("f64")
    x = inverse(p).matrix.to_field("f64")
    assert residual(a, x) <= 1e-12


def test_residual_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        residual(DenseMatrix.identity(2, "f64"), DenseMatrix.identity(3, "f64"))
