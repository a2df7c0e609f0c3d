"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SignedFlowError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(SignedFlowError, ValueError):
    """Input does not satisfy the requirements of the called operation."""


class OrientationError(SignedFlowError, ValueError):
    """An orientation is not consistent with the signature of the graph."""


class InvariantError(SignedFlowError, RuntimeError):
    """A construction reached a state its correctness argument rules out.

    Raised instead of retrying; the message carries the diagnostics.
    """


class FormatError(SignedFlowError, ValueError):
    """Malformed graph, catalog or certificate text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
