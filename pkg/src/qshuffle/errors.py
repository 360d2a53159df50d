"""Exception hierarchy shared by the library and the command line."""


class QShuffleError(Exception):
    """Base class for all library errors."""


class WordError(QShuffleError, ValueError):
    """Malformed or empty word where a nonempty one is required."""


class BraidingError(QShuffleError, KeyError):
    """The braiding is not defined for a pair of letters, or is misconfigured."""

    def __str__(self):
        # KeyError quotes its argument; keep plain messages
        return str(self.args[0]) if self.args else ""


class DegenerateBasisError(QShuffleError, ZeroDivisionError):
    """A leading coefficient vanishes under the active specialization."""

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


class InvariantViolation(QShuffleError, AssertionError):
    """An internal consistency check failed."""


class TermLimitExceeded(QShuffleError, RuntimeError):
    """A shuffle expansion would exceed the configured term budget."""
