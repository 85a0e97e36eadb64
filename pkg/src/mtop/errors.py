"""Exception hierarchy shared by every module."""
from __future__ import annotations



class MtopError(Exception):
    """Base class for all errors raised by :mod:`mtop`."""


class UnknownElement(MtopError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CountExceedsOmega(MtopError, ValueError):
    pass


class UniverseMismatch(MtopError, ValueError):
    pass


class NotWithinAmbient(MtopError, ValueError):
    pass


class NotAFunction(MtopError, ValueError):
    pass


class NotSubmset(MtopError, ValueError):
    pass


class MissingSecondOperand(MtopError, ValueError):
    pass


class BudgetExceeded(MtopError, RuntimeError):
    pass


class DslError(MtopError):
    """A diagnostic from the expression language, tied to a source position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}, column {self.column}: {self.message}"


class DslSyntaxError(DslError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.expected = tuple(sorted(expected))
        if self.expected:
            shown = ", ".join(e if e.isupper() else f"'{e}'" for e in self.expected)
            message = f"{message}; expected one of {shown}"
        super().__init__(message, line, column)


class DslTypeError(DslError):
    pass


class UnboundIdentifier(DslError):
    pass


class NoUniverse(DslError):
    pass


class DslEvalError(DslError):
    """An error from the underlying algebra, reported at the failing node."""
