"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DedekindError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeModulus(DedekindError, ValueError):
    pass


class ZeroDenominator(DedekindError, ZeroDivisionError):
    pass


class DivisionByZero(DedekindError, ZeroDivisionError):
    pass


class FieldMismatch(DedekindError, ValueError):
    pass


class DimensionMismatch(DedekindError, ValueError):
    pass


class EmptyMatrix(DedekindError, ValueError):
    pass


class IndexOutOfRange(DedekindError, IndexError):
    pass


class ZeroFirstColumn(DedekindError, ValueError):
    """Raised when a reduction is asked to pivot on an all-zero first column."""


class NotLeftInverse(DedekindError, ValueError):
    """``A @ B`` is not the identity.

    ``row`` and ``col`` are the 1-based position of the first entry (in
    row-major order) where the product differs from the identity.
    """

    def __init__(self, row: int, col: int, got, expected):
        self.row = row
        self.col = col
        self.got = got
        self.expected = expected
        super().__init__(
            f"A*B differs from the identity at ({row},{col}): got {got}, expected {expected}"
        )


class InternalContradiction(DedekindError, AssertionError):
    """A state the two-sided inverse argument rules out was reached.

    Seeing this means the implementation is wrong, never the input.
    """


class MalformedCertificate(DedekindError, ValueError):
    pass


class TooLarge(DedekindError, ValueError):
    pass


class ParseError(DedekindError, ValueError):
    """Bad token in a text input; line and column are 1-based."""

    def __init__(self, source: str, line: int, column: int, message: str):
        self.source = source
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{source}:{line}:{column}: {message}")
