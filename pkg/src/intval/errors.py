"""Exception types shared across the package."""


class IntvalError(Exception):
    """Base class for all library errors."""


class ParseError(IntvalError):
    """Malformed textual input (rationals, functions, measure specs)."""

    def __init__(self, message: str, column: int | None = None):
        self.column = column
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


class UsageError(IntvalError):
    """Invalid combination of command-line options."""


class CutInversionError(IntvalError):
    """A lower approximation exceeded an upper approximation.

    Signals a broken upstream construction, never a rounding artifact:
    everything here is exact.
    """


class GapContractError(IntvalError):
    """A gap bound returned a budget that failed to deliver the promised width."""


class BudgetExhaustedError(IntvalError):
    """A semidecidable search hit its work ceiling before producing a witness."""

    def __init__(self, message: str, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class MixedPolarityError(IntvalError):
    """A formal sum mixed open and closed lattice elements."""


class TermLimitError(IntvalError):
    """A subset enumeration would exceed the configured term limit."""


class InternalCheckError(IntvalError):
    """A cross-check between two redundant computations disagreed."""
