"""Parameter files (JSON) and matrix files (CSV, Matrix Market array)."""

import json
import os
from fractions import Fraction
from pathlib import Path

from .errors import FormatUnsupported, LengthMismatch, ParseError
from .matrix import DenseMatrix
from .model import BrownianParams, Variant
from .scalar import EXACT, FLOAT64, format_rational, format_scalar, parse_rational

MM_HEADER = "%%MatrixMarket matrix array real general"


def _parse_scalar(value, where):
    if isinstance(value, bool):
        raise ParseError(f"{where}: booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: cannot parse {value!r} as num/den") from exc
    raise ParseError(f"{where}: unsupported scalar {value!r}")


def params_from_dict(obj, field=EXACT):
    if not isinstance(obj, dict):
        raise ParseError("parameter file must hold a JSON object")
    for key in ("variant", "k", "a", "b"):
        if key not in obj:
            raise ParseError(f"missing field {key!r}")
    try:
        variant = Variant.parse(obj["variant"])
    except ValueError as exc:
        raise ParseError(f"field 'variant': expected A1 or A2, got {obj['variant']!r}") from exc
    seqs = {}
    for key in ("k", "a", "b"):
        if not isinstance(obj[key], list):
            raise ParseError(f"field {key!r} must be a list")
        seqs[key] = [_parse_scalar(v, f"{key}[{i}]") for i, v in enumerate(obj[key])]
    n = len(seqs["k"])
    if n < 1:
        raise LengthMismatch("k", ">= 1", 0)
    if len(seqs["a"]) != n - 1:
        raise LengthMismatch("a", n - 1, len(seqs["a"]))
    if len(seqs["b"]) != n:
        raise LengthMismatch("b", n, len(seqs["b"]))
    return BrownianParams(variant, seqs["k"], seqs["a"], seqs["b"], field=field)


def params_to_dict(p):
    def enc(x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else format_rational(x)

    return {
        "variant": p.variant.value,
        "k": [enc(x) for x in p.k],
        "a": [enc(x) for x in p.a],
        "b": [enc(x) for x in p.b],
    }


def read_params(path, field=EXACT):
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return params_from_dict(obj, field)


def write_params(p, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(params_to_dict(p), fh)
        fh.write("\n")


def _mm_value(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return repr(float(x))


def sidecar_path(path):
    path = Path(path)
    return path.with_suffix(".exact.csv")


def matrix_to_csv(m):
    return "".join(",".join(format_scalar(x) for x in row) + "\n" for row in m.rows)


def write_matrix(m, path, format="csv"):
    """Write ``m`` as CSV or Matrix Market array (column-major).

    Exact matrices with non-integer entries also get a ``.exact.csv``
    sidecar when written as Matrix Market, which only carries decimals.
    """
    fmt = str(format).lower()
    if fmt == "csv":
        text = matrix_to_csv(m)
    elif fmt in ("mm", "mm_array", "mtx"):
        lines = [MM_HEADER, f"{m.n} {m.n}"]
        lines += [_mm_value(m.rows[i][j]) for j in range(m.n) for i in range(m.n)]
        text = "\n".join(lines) + "\n"
        if m.field.exact and any(Fraction(x).denominator != 1 for row in m.rows for x in row):
            write_matrix(m, sidecar_path(path), "csv")
    else:
        raise FormatUnsupported(f"unsupported matrix format {format!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _is_int_token(tok):
    return tok.lstrip("+-").isdigit()


def read_matrix(path):
    text = Path(path).read_text(encoding="utf-8")
    if not text.strip():
        raise ParseError(f"{path}: empty file")
    if text.startswith("%%MatrixMarket"):
        return _read_mm(text, path)
    return _read_csv(text, path)


def _read_csv(text, path):
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            rows.append((lineno, [tok.strip() for tok in line.split(",")]))
    exact = all("." not in t and "e" not in t.lower() for _, r in rows for t in r)
    out = []
    for lineno, toks in rows:
        try:
            out.append([parse_rational(t) if exact else float(t) for t in toks])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{path}: line {lineno}: {exc}") from exc
    if any(len(r) != len(out) for r in out):
        raise ParseError(f"{path}: matrix is not square")
    return DenseMatrix._wrap(out, EXACT if exact else FLOAT64)


def _read_mm(text, path):
    lines = text.splitlines()
    header = lines[0].split()
    if len(header) < 4 or header[1].lower() != "matrix" or header[2].lower() != "array":
        raise FormatUnsupported(f"{path}: only dense 'matrix array' files are supported")
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines[1:], 1) if ln.strip() and not ln.startswith("%")]
    if not body:
        raise ParseError(f"{path}: missing size line")
    lineno, size = body[0]
    try:
        nrows, ncols = (int(t) for t in size.split())
    except ValueError as exc:
        raise ParseError(f"{path}: line {lineno}: bad size line {size!r}") from exc
    if nrows != ncols:
        raise ParseError(f"{path}: matrix is not square")
    toks = [(ln, t) for ln, t in body[1:]]
    if len(toks) != nrows * ncols:
        raise ParseError(f"{path}: expected {nrows * ncols} entries, got {len(toks)}")
    exact = all(_is_int_token(t) for _, t in toks)
    vals = []
    for ln, t in toks:
        try:
            vals.append(Fraction(int(t)) if exact else float(t))
        except ValueError as exc:
            raise ParseError(f"{path}: line {ln}: bad value {t!r}") from exc
    n = nrows
    rows = [[vals[j * n + i] for j in range(n)] for i in range(n)]
    return DenseMatrix._wrap(rows, EXACT if exact else FLOAT64)


def dump_trace(trace, directory, format="mm"):
    """Write ``stage{s}_{working,multiplier}.mtx`` for every stage."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for rec in trace.stages:
        for side in ("working", "multiplier"):
            path = Path(directory) / f"stage{rec.stage}_{side}.mtx"
            write_matrix(getattr(rec, side), path, format)
            paths.append(path)
    return paths
