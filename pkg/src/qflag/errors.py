"""Exception hierarchy shared across the package.

DomainError covers invalid inputs or requests (CLI exit code 2);
InternalError covers broken internal invariants (CLI exit code 1).
"""


class QflagError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QflagError):
    """The request or input is invalid."""


class InternalError(QflagError):
    """An internal invariant was violated; this is a bug, not bad input."""


class ArithmeticDomainError(DomainError):
    """Division by zero in exact coefficient arithmetic."""


class EvaluationError(DomainError):
    """Numerical evaluation failed (pole, or evaluation point out of range)."""


class ConstructionError(DomainError):
    """Invalid data while building a presentation, morphism or representation."""


class UsageError(DomainError):
    """Operation applied to an object that does not support it."""


class CoinvarianceError(DomainError):
    """Conditional expectation requested for a non-coinvariant element."""


class ParseError(DomainError):
    """Expression could not be parsed; carries the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class AlgebraMismatchError(ParseError):
    """Generator token used in an algebra that does not declare it."""


class EngineError(InternalError):
    """The rewrite engine detected a non-terminating or inconsistent state."""
