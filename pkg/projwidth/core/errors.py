from typing import Optional


class ProjWidthError(Exception):
    """Base class for every error raised by projwidth."""


class FormatError(ProjWidthError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class EmbeddingError(ProjWidthError):
    pass


class NotApplicableError(ProjWidthError):
    pass


class InvalidParameterError(ProjWidthError, ValueError):
    pass


class CapExceeded(ProjWidthError):
    pass


class InvariantError(ProjWidthError):
    """A postcondition guaranteed by the mathematics did not hold."""
