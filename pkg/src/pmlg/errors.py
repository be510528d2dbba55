"""Exception types shared across the package."""


class PmlgError(Exception):
    """Base class for all library errors."""


class AlphabetMismatchError(PmlgError):
    """Graph and pattern declare different alphabets."""


class FormatError(PmlgError):
    """A text document violates one of the file formats."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message}, line {line}"
        super().__init__(message)


class OracleBudgetError(PmlgError):
    """The exhaustive matching oracle would exceed its state budget."""


class TriviallyOrthogonalError(PmlgError):
    """The deterministic-DAG builder rejects instances containing an all-zero
    second-set vector: such a vector is orthogonal to everything, so callers
    should answer the instance directly instead of building a graph."""
