"""Exception hierarchy shared by all modules."""


class HomchordError(Exception):
    """Base class for every error raised by this package."""


class FaceError(HomchordError, KeyError):
    """A face or label is not part of the complex it was used with."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ChainError(HomchordError, ValueError):
    """A chain violates an operation's precondition (e.g. not a cycle)."""


class ParseError(HomchordError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotApplicableError(HomchordError):
    """The question is outside the hypotheses under which it is answered."""


class ScanTooLargeError(HomchordError):
    """A full vertex-subset scan was requested on too many vertices."""


class BudgetExceeded(HomchordError):
    """An exhaustive search ran out of its node budget before finishing."""
