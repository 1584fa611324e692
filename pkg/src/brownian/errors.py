"""Exception hierarchy shared by every module."""


class BrownianError(Exception):
    """Base class for all package errors."""


class ZeroDenominator(BrownianError, ZeroDivisionError):
    pass


class DivisionByZero(BrownianError, ZeroDivisionError):
    pass


class DimensionMismatch(BrownianError, ValueError):
    pass


class SingularInput(BrownianError, ValueError):
    """Parameters violate the nonsingularity conditions of the closed form."""

    def __init__(self, reasons):
        self.reasons = list(reasons)
        super().__init__("singular input: " + ", ".join(self.reasons))


class SingularMatrix(BrownianError, ValueError):
    pass


class GenerationFailed(BrownianError, RuntimeError):
    pass


class RecurrenceBreakdown(BrownianError, ZeroDivisionError):
    """A divisor required by the recurrence is zero.

    ``index`` is the 1-based subscript of the vanishing helper and ``helper``
    its name (``"d"`` for the row form, ``"g"`` for the column form).
    """

    def __init__(self, helper, index):
        self.helper = helper
        self.index = index
        super().__init__(f"recurrence breakdown: {helper}{index} = 0")


class EliminationBreakdown(BrownianError, ZeroDivisionError):
    def __init__(self, stage, index, reason=""):
        self.stage = stage
        self.index = index
        self.reason = reason
        msg = f"elimination breakdown at operation {stage}, index {index}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class StageMismatch(BrownianError, AssertionError):
    def __init__(self, stage, side, entry, expected, got):
        self.stage = stage
        self.side = side
        self.entry = entry
        self.expected = expected
        self.got = got
        i, j = entry
        super().__init__(
            f"stage {stage} {side}: entry ({i + 1},{j + 1}) expected {expected}, got {got}"
        )


class ParseError(BrownianError, ValueError):
    pass


class LengthMismatch(ParseError):
    def __init__(self, field, expected, got):
        self.field = field
        super().__init__(f"length mismatch for {field!r}: expected {expected}, got {got}")


class FormatUnsupported(BrownianError, ValueError):
    pass
