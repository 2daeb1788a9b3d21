"""Exception hierarchy shared by all minorclub modules."""

from __future__ import annotations


class MinorclubError(Exception):
    """Base class for all library errors."""


class ParseError(MinorclubError):
    """Malformed input data. Carries the byte offset of the offending token."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class FormatError(MinorclubError):
    """Structurally valid input whose declared counts or ranges are inconsistent."""


class DomainError(MinorclubError):
    """A precondition on the operation's input does not hold.

    ``certificate`` optionally carries a witness of the violation, e.g. the
    four vertices of an induced P4 when a cograph was required.
    """

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class CapacityError(MinorclubError):
    """Input exceeds a configured size cap of an exponential-time routine."""


class InvalidStructureError(MinorclubError):
    """A witness structure violates its own structural invariants."""


class MethodError(MinorclubError):
    """No applicable solving method for this input."""
