import csv
import json

import pytest

from brownian.cli import main


@pytest.fixture
def a1_file(tmp_path):
    path = tmp_path / "a1_n3.json"
    path.write_text(json.dumps({"variant": "A1", "k": [1, 2, 3], "a": [1, 1], "b": [1, 1, 1]}))
    return str(path)


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2_n3.json"
    path.write_text(json.dumps({"variant": "A2", "k": [3, 2, 1], "a": [1, 1], "b": [1, 1, 1]}))
    return str(path)


def test_invert_closed(a1_file, capsys):
    assert main(["invert", "--params", a1_file, "--method", "closed", "--field", "exact"]) == 0
    assert capsys.readouterr().out.strip() == "[[2,-1,0],[-1,2,-1],[0,-1,1]]"


@pytest.mark.parametrize("method", ["recursive-i", "recursive-j", "elimination", "oracle"])
def test_invert_methods_agree(a2_file, capsys, method):
    assert main(["invert", "--params", a2_file, "--method", method]) == 0
    assert capsys.readouterr().out.strip() == "[[1,-1,0],[-1,2,-1],[0,-1,2]]"


def test_invert_count_ops(a1_file, capsys):
    assert main(["invert", "--params", a1_file, "--method", "recursive-i", "--count-ops"]) == 0
    out = capsys.readouterr().out
    assert "add_sub = 6" in out


def test_invert_float_rendering(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"variant": "A1", "k": [1, 2], "a": [1], "b": [1, 3]}))
    assert main(["invert", "--params", str(path), "--field", "f64"]) == 0
    out = capsys.readouterr().out
    assert out.strip() == "[[2,-1],[-0.33333333333333331,0.33333333333333331]]"


def test_recursive_fallback_warns(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"variant": "A1", "k": [1, 2, 3, 4], "a": [2, 1, 1], "b": [3, 3, 1, 1]}))
    assert main(["invert", "--params", str(path), "--method", "recursive-i"]) == 0
    cap = capsys.readouterr()
    assert "RecurrenceBreakdown" in cap.err
    assert main(["invert", "--params", str(path), "--method", "closed"]) == 0
    assert capsys.readouterr().out == cap.out


def test_invert_out_file(a1_file, tmp_path):
    out = tmp_path / "inv.csv"
    assert main(["invert", "--params", a1_file, "--out", str(out)]) == 0
    assert out.read_text() == "2,-1,0\n-1,2,-1\n0,-1,1\n"


def test_det_oracle(a2_file, capsys):
    assert main(["det", "--params", a2_file, "--oracle"]) == 0
    assert capsys.readouterr().out.strip() == "formula: 1, oracle: 1, match: true"


def test_singular_exit_code(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"variant": "A1", "k": [0, 2], "a": [1], "b": [1, 1]}))
    assert main(["invert", "--params", str(path)]) == 1
    assert "SingularInput" in capsys.readouterr().err
    assert main(["det", "--params", str(path), "--oracle"]) == 0


def test_verify(capsys, monkeypatch):
    monkeypatch.delenv("BROWNIAN_SEED", raising=False)
    assert main(["verify", "--variant", "a1", "--n-max", "20", "--trials", "50", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "seed: 7" in out
    assert "FAIL" not in out
    assert out.count("PASS") == 12


def test_verify_deterministic_and_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("BROWNIAN_SEED", "11")
    main(["verify", "--variant", "a2", "--n-max", "8", "--trials", "10", "--seed", "1"])
    first = capsys.readouterr().out
    assert "seed: 11" in first
    main(["verify", "--variant", "a2", "--n-max", "8", "--trials", "10", "--seed", "2"])
    assert capsys.readouterr().out == first


def test_gen_formats(tmp_path, capsys):
    out = tmp_path / "p.json"
    assert main(["gen", "--variant", "a2", "--n", "5", "--seed", "3", "--out", str(out), "--format", "json"]) == 0
    data = json.loads(out.read_text())
    assert data["variant"] == "A2" and len(data["k"]) == 5 and len(data["a"]) == 4
    mtx = tmp_path / "m.mtx"
    assert main(["gen", "--params", str(out), "--out", str(mtx), "--format", "mm"]) == 0
    assert mtx.read_text().startswith("%%MatrixMarket matrix array real general\n5 5\n")
    assert "seed: 3" in capsys.readouterr().out


def test_usage_errors(tmp_path, capsys):
    assert main(["nope"]) == 2
    assert main(["invert", "--params", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["det", "--params", str(bad)]) == 2
    assert main(["gen", "--variant", "a1", "--out", str(tmp_path / "x.json")]) == 2
    assert main(["bench", "--methods", "magic", "--sizes", "4"]) == 2


def test_bench_small(tmp_path, capsys):
    out = tmp_path / "report.csv"
    code = main(["bench", "--sizes", "20,40", "--methods", "closed,recursive-i,oracle,elimination",
                 "--field", "f64", "--out", str(out)])
    assert code == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert list(rows[0]) == ["method", "n", "ms", "residual"]
    assert len(rows) == 8
    assert all(float(r["residual"]) < 1e-10 for r in rows)


def test_bench_count_report(tmp_path):
    out, counts = tmp_path / "report.csv", tmp_path / "counts.csv"
    code = main(["bench", "--sizes", "10", "--methods", "closed", "--out", str(out),
                 "--count-report", str(counts), "--count-max", "12"])
    assert code == 0
    lines = counts.read_text().splitlines()
    assert lines[0] == "n,mul_div,add_sub,paper_mul_div_bound,paper_add_sub"
    assert lines[1] == "3,24,6,24,6"
    assert len(lines) == 11
