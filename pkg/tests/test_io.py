import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brownian import BrownianParams, DenseMatrix, LengthMismatch, ParseError, Variant, inverse, random_params
from brownian.errors import FormatUnsupported
from brownian.io import dump_trace, read_matrix, read_params, sidecar_path, write_matrix, write_params
from brownian.elimination import eliminate


def write_json(tmp_path, obj, name="p.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return path


def test_read_params_n2(tmp_path):
    p = read_params(write_json(tmp_path, {"variant": "A1", "k": [1, 2], "a": [1], "b": [1, 1]}))
    assert p == BrownianParams(Variant.A1, [1, 2], [1], [1, 1])


def test_length_mismatch_names_field(tmp_path):
    path = write_json(tmp_path, {"variant": "A1", "k": [1], "a": [1], "b": [1]})
    with pytest.raises(LengthMismatch) as exc:
        read_params(path)
    assert exc.value.field == "a"


def test_rational_and_integer_scalars(tmp_path):
    p = read_params(write_json(tmp_path, {"variant": "A2", "k": ["1/3", 2], "a": ["-4/6"], "b": [1, "5"]}))
    assert p.k == (Fraction(1, 3), Fraction(2))
    assert p.a == (Fraction(-2, 3),)


@pytest.mark.parametrize(
    "text",
    ['{"variant": "A1", "k": [1], "a": [], "b": ["x"]}', '{"variant": "A3", "k": [1], "a": [], "b": [1]}', "{", "[]",
     '{"k": [1], "a": [], "b": [1]}'],
)
def test_parse_errors(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(ParseError):
        read_params(path)


def test_parse_error_has_line(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n"variant": "A1",\n"k": [1,,]}')
    with pytest.raises(ParseError, match="line 3"):
        read_params(path)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(list(Variant)), st.integers(1, 20), st.integers(0, 2**32))
def test_params_round_trip(tmp_path_factory, variant, n, seed):
    p = random_params(variant, n, seed)
    p = BrownianParams(p.variant, [x / 3 for x in p.k], p.a, p.b)
    path = tmp_path_factory.mktemp("rt") / "p.json"
    write_params(p, path)
    assert read_params(path) == p


def test_csv_of_worked_inverse(tmp_path, a1_n3):
    path = tmp_path / "inv.csv"
    write_matrix(inverse(a1_n3).matrix, path, "csv")
    assert path.read_text() == "2,-1,0\n-1,2,-1\n0,-1,1\n"


def test_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(ParseError):
        read_matrix(path)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.fractions(max_denominator=1000), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_csv_round_trip_exact(tmp_path_factory, rows):
    m = DenseMatrix(rows)
    path = tmp_path_factory.mktemp("csv") / "m.csv"
    write_matrix(m, path, "csv")
    assert read_matrix(path) == m


def test_mm_round_trip_integer(tmp_path):
    m = DenseMatrix([[Fraction(x) for x in r] for r in [[1, -2, 3], [4, 5, -6], [7, 8, 9]]])
    path = tmp_path / "m.mtx"
    write_matrix(m, path, "mm")
    lines = path.read_text().splitlines()
    assert lines[0] == "%%MatrixMarket matrix array real general"
    assert lines[1] == "3 3"
    assert lines[2:5] == ["1", "4", "7"]  # column-major
    assert read_matrix(path) == m
    assert not sidecar_path(path).exists()


def test_mm_rational_writes_sidecar(tmp_path):
    m = DenseMatrix([[Fraction(1, 3), Fraction(1)], [Fraction(0), Fraction(-2, 7)]])
    path = tmp_path / "m.mtx"
    write_matrix(m, path, "mm")
    back = read_matrix(path)
    assert back.field.tag.value == "f64"
    assert back[0, 0] == float(Fraction(1, 3))
    assert read_matrix(sidecar_path(path)) == m


def test_unsupported_format(tmp_path):
    with pytest.raises(FormatUnsupported):
        write_matrix(DenseMatrix.identity(2), tmp_path / "x", "hb")
    path = tmp_path / "coord.mtx"
    path.write_text("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 2\n")
    with pytest.raises(FormatUnsupported):
        read_matrix(path)


def test_dump_trace(tmp_path, a2_n3):
    paths = dump_trace(eliminate(a2_n3), tmp_path)
    names = sorted(p.name for p in paths)
    assert names == sorted(f"stage{s}_{side}.mtx" for s in range(1, 5) for side in ("working", "multiplier"))
    assert read_matrix(tmp_path / "stage4_working.mtx") == DenseMatrix.identity(3)
