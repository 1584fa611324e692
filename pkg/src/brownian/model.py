"""Parameters, Hadamard factors and the two Brownian-type matrices.

Variant ``A1`` is ``K o G`` (entry ``k_i b_j`` on and above the diagonal,
``k_j a_j`` below); variant ``A2`` is ``N o G`` (``k_j b_j`` on and above,
``k_i a_j`` below). Both are fixed by ``3n - 1`` scalars ``k_1..k_n``,
``a_1..a_{n-1}`` and ``b_1..b_n``.
"""

import enum
import random
from dataclasses import dataclass, field as dc_field

from .errors import GenerationFailed, LengthMismatch
from .matrix import DenseMatrix, hadamard
from .scalar import EXACT, Field, get_field

MAX_RETRIES = 1000
PARAM_RANGE = (-9, 9)


class Variant(enum.Enum):
    A1 = "A1"
    A2 = "A2"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        return cls(str(text).upper())


@dataclass(frozen=True)
class BrownianParams:
    """The ``3n - 1`` parameters of either variant.

    ``k``, ``a`` and ``b`` are stored 0-based: ``k[0]`` is ``k_1``. Scalars are
    coerced into ``field`` on construction.
    """

    variant: Variant
    k: tuple
    a: tuple
    b: tuple
    field: Field = dc_field(default=EXACT, compare=False)

    def __post_init__(self):
        fld = get_field(self.field)
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        n = len(self.k)
        if n < 1:
            raise LengthMismatch("k", ">= 1", 0)
        if len(self.a) != n - 1:
            raise LengthMismatch("a", n - 1, len(self.a))
        if len(self.b) != n:
            raise LengthMismatch("b", n, len(self.b))
        for name in ("k", "a", "b"):
            object.__setattr__(self, name, tuple(fld.coerce(x) for x in getattr(self, name)))

    @property
    def n(self):
        return len(self.k)

    def to_field(self, field):
        return BrownianParams(self.variant, self.k, self.a, self.b, field=field)


@dataclass(frozen=True)
class HelperSeqs:
    """Derived sequences ``c``, ``d``, ``f``, ``g``.

    Each list is indexed directly by the math subscript; slots outside the
    defined range (``f[0]``, ``f[1]``, ``g[0]``, ``g[1]``) hold ``None``.
    Defined ranges: ``c_0..c_n``, ``d_0..d_{n-2}``, ``f_2..f_{n-1}``,
    ``g_2..g_n``.
    """

    c: list
    d: list
    f: list
    g: list

    def as_tuples(self):
        """The four sequences with the undefined slots dropped."""
        return tuple(self.c), tuple(self.d), tuple(self.f[2:]), tuple(self.g[2:])


@dataclass
class ValidationReport:
    valid: bool
    reasons: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.valid


def helper_seqs(p):
    """Compute the helper sequences for ``p`` according to its variant."""
    n = p.n
    one = p.field.one
    k = (None,) + p.k  # 1-based views
    a = (None,) + p.a
    b = (None,) + p.b
    a1 = p.variant is Variant.A1

    c = [one] + [None] * n
    for i in range(1, n):
        c[i] = k[i + 1] * b[i] - k[i] * a[i] if a1 else k[i] * b[i] - k[i + 1] * a[i]
    c[n] = b[n]

    d = [None] * max(n - 1, 0)
    if n >= 2:
        d[0] = a[1]
    for i in range(1, n - 1):
        if a1:
            d[i] = k[i + 1] * a[i + 1] * b[i] - k[i] * a[i] * b[i + 1]
        else:
            d[i] = k[i] * a[i + 1] * b[i] - k[i + 1] * a[i] * b[i + 1]

    f = [None] * max(n, 2)
    for i in range(2, n):
        f[i] = a[i] - b[i]

    g = [None] * (max(n, 1) + 1)
    for i in range(2, n):
        g[i] = k[i + 1] - k[i] if a1 else k[i] - k[i + 1]
    if n >= 2:
        g[n] = one
    return HelperSeqs(c, d, f, g)


def validate_params(p, helpers=None):
    """Report every violated nonsingularity condition (never raises)."""
    h = helpers if helpers is not None else helper_seqs(p)
    reasons = []
    if p.variant is Variant.A1:
        if p.k[0] == 0:
            reasons.append("k1 = 0")
    elif p.k[-1] == 0:
        reasons.append("kn = 0")
    for i in range(1, p.n + 1):
        if h.c[i] == 0:
            reasons.append(f"c{i} = 0")
    return ValidationReport(not reasons, reasons)


def build_matrix(p):
    """Dense ``A1`` or ``A2`` built directly from its entry formula."""
    n = p.n
    k, a, b = p.k, p.a, p.b
    if p.variant is Variant.A1:
        rows = [[k[i] * b[j] if i <= j else k[j] * a[j] for j in range(n)] for i in range(n)]
    else:
        rows = [[k[j] * b[j] if i <= j else k[i] * a[j] for j in range(n)] for i in range(n)]
    return DenseMatrix._wrap(rows, p.field)


def build_factors(p):
    """Return ``(K or N, G)`` whose Hadamard product is the variant's matrix.

    ``G`` would need an ``a_n`` in its last column below the diagonal; no
    such entry exists, so 0 is stored there.
    """
    n = p.n
    k, a, b = p.k, p.a, p.b
    pick = min if p.variant is Variant.A1 else max
    kn = [[k[pick(i, j)] for j in range(n)] for i in range(n)]
    zero = p.field.zero
    g = [[b[j] if i <= j else (a[j] if j < n - 1 else zero) for j in range(n)] for i in range(n)]
    return DenseMatrix._wrap(kn, p.field), DenseMatrix._wrap(g, p.field)


def hadamard_product(p):
    return hadamard(*build_factors(p))


def _draw_nonzero(rng, lo, hi):
    for _ in range(MAX_RETRIES):
        x = rng.randint(lo, hi)
        if x:
            return x
    raise GenerationFailed("could not draw a nonzero integer")


def random_params(variant, n, seed, *, nondegenerate=False, lo=PARAM_RANGE[0], hi=PARAM_RANGE[1]):
    """Seeded integer parameters in ``[lo, hi]`` that pass :func:`validate_params`.

    Draws proceed index by index; a draw ``(a_i, b_i, k_{i+1})`` that makes
    ``c_i`` vanish (or ``k_n`` for ``A2``) is redrawn. With ``nondegenerate``
    every ``k_i``, ``g_i`` and ``d_i`` is also kept nonzero, so that the
    recurrences and the elimination path apply as well.
    """
    variant = Variant.parse(variant)
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    a1 = variant is Variant.A1
    k = [_draw_nonzero(rng, lo, hi) if (a1 or n == 1 or nondegenerate) else rng.randint(lo, hi)]
    a, b = [], []

    for i in range(1, n):  # choose a_i, b_i, k_{i+1}
        for _ in range(MAX_RETRIES):
            ai, bi, kn = rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi)
            ki = k[i - 1]
            ci = kn * bi - ki * ai if a1 else ki * bi - kn * ai
            if ci == 0:
                continue
            if not a1 and i == n - 1 and kn == 0:
                continue
            if nondegenerate:
                if kn == 0:
                    continue
                if i >= 2:
                    kp, ap, bp = k[i - 2], a[i - 2], b[i - 2]
                    gi = kn - ki if a1 else ki - kn
                    di = ki * ai * bp - kp * ap * bi if a1 else kp * ai * bp - ki * ap * bi
                    if gi == 0 or di == 0:
                        continue
            break
        else:
            raise GenerationFailed(f"no admissible draw for index {i} after {MAX_RETRIES} tries")
        a.append(ai)
        b.append(bi)
        k.append(kn)
    b.append(_draw_nonzero(rng, lo, hi))
    return BrownianParams(variant, k, a, b)


def well_conditioned_params(variant, n, field=EXACT, seed=None):
    """A small-integer family with a modest condition number.

    ``A1``: ``k_i = i``; ``A2``: ``k_i = n + 1 - i``; both with ``a_i = 1``
    and ``b_i = 2``, so every ``|c_i| >= 2``, ``d_i = 2``, ``g_i = 1`` and the
    step ratios ``k f / c`` stay below 1 in magnitude. With a ``seed`` each
    ``b_i`` is drawn from ``{2, 3}`` instead (some ``d_i`` may then vanish).
    """
    variant = Variant.parse(variant)
    k = list(range(1, n + 1)) if variant is Variant.A1 else list(range(n, 0, -1))
    if seed is None:
        b = [2] * n
    else:
        rng = random.Random(seed)
        b = [rng.choice((2, 3)) for _ in range(n)]
    return BrownianParams(variant, k, [1] * (n - 1), b, field=field)
