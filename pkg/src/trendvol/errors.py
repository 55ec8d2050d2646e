"""Exception types.

Two families matter to callers: ``InvalidParameter`` covers bad
configuration or misuse of the API (the CLI maps these to exit code 1),
``DataError`` covers problems with the data itself (exit code 2).
"""


class TrendvolError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(TrendvolError, ValueError):
    """A configuration value or argument violates its contract."""


class DegreeTooLow(InvalidParameter):
    """A derivative was requested from a degree-0 fit."""


class WrongKind(InvalidParameter):
    """A return series of the wrong kind was passed to an operation."""


class DataError(TrendvolError):
    """Base class for failures caused by the input data."""


class InvalidSeries(DataError):
    """A series violates its structural invariants."""


class NonPositivePrice(DataError):
    """A price is zero or negative, so logarithms are undefined."""

    def __init__(self, index, line=None):
        self.index = index
        self.line = line
        where = f"line {line}" if line is not None else f"index {index}"
        super().__init__(f"non-positive price at {where}")


class SeriesTooShort(DataError):
    """The series has too few samples for the requested estimate."""


class DegenerateWindow(DataError):
    """A fit window holds fewer samples than the polynomial needs."""


class EmptyIntersection(DataError):
    """Two series share no common timestamps."""


class MisalignedSeries(DataError):
    """An operation on two series requires identical timestamps."""


class ParseError(DataError):
    """A file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnorderedDates(ParseError):
    """Dates are not strictly ascending."""

    def __init__(self, line=None):
        super().__init__("dates must be strictly ascending", line=line)


class DuplicateDate(ParseError):
    """The same date appears twice."""

    def __init__(self, line=None):
        super().__init__("duplicate date", line=line)
