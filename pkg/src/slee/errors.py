"""Shared exception types for the slee package."""


class SleeError(Exception):
    """Base class for all package-specific errors."""


class ArgumentError(SleeError, ValueError):
    """A caller-supplied argument violates an operation's preconditions."""


class ContractError(SleeError, ValueError):
    """An input fails a structural contract (e.g. a non-unicyclic graph)."""


class ParseError(SleeError, ValueError):
    """Malformed textual input; carries the byte offset of the problem."""

    def __init__(self, message: str, position: int | None = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class LimitError(SleeError, ValueError):
    """A documented size limit would be exceeded; the message names it."""


class TransferMonotonicityError(SleeError):
    """Verified transfer hypotheses were followed by the wrong SLEE sign."""
