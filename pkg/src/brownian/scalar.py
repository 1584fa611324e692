"""Scalar fields: exact rationals and IEEE doubles behind one interface.

Rationals are :class:`fractions.Fraction`, which is kept in lowest terms with
a positive denominator after every operation. Algorithms are written with the
ordinary arithmetic operators, so the same code runs over either field once
its inputs have been coerced with :meth:`Field.coerce`.
"""

import enum
import operator
from fractions import Fraction

from .errors import DivisionByZero, ZeroDenominator

Rational = Fraction


class FieldTag(enum.Enum):
    EXACT = "exact"
    FLOAT64 = "f64"


def rational_normalize(num, den=1):
    """Return ``num/den`` in canonical form; raise ZeroDenominator if den is 0."""
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


class Field:
    """One of the two supported scalar fields."""

    def __init__(self, tag):
        self.tag = FieldTag(tag)

    @property
    def exact(self):
        return self.tag is FieldTag.EXACT

    @property
    def zero(self):
        return Fraction(0) if self.exact else 0.0

    @property
    def one(self):
        return Fraction(1) if self.exact else 1.0

    def coerce(self, x):
        if self.exact:
            if isinstance(x, float):
                # exact binary value of the double
                return Fraction(x)
            return parse_rational(x) if isinstance(x, str) else Fraction(x)
        if isinstance(x, str):
            x = parse_rational(x)
        return float(x)

    def __eq__(self, other):
        return isinstance(other, Field) and other.tag is self.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"Field({self.tag.value!r})"


EXACT = Field(FieldTag.EXACT)
FLOAT64 = Field(FieldTag.FLOAT64)


def get_field(field):
    if isinstance(field, Field):
        return field
    return Field(field)


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def field_arithmetic(op, x, y):
    """Apply ``op`` (add, sub, mul, div) to two scalars of the same field."""
    if op == "div" and y == 0:
        raise DivisionByZero(f"division of {x} by zero")
    return _OPS[op](x, y)


def parse_rational(text):
    """Parse ``"num/den"`` or an integer string into a Rational."""
    text = str(text).strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return rational_normalize(int(num), int(den))
    return Fraction(int(text))


def format_rational(x):
    """Render a Rational as ``"num/den"``, omitting ``/1`` for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x):
    """Exact values as ``num/den``; floats with 17 significant digits."""
    if isinstance(x, float):
        return f"{x:.17g}"
    return format_rational(x)


def to_float(x):
    return float(x)
