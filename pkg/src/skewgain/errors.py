"""Exception hierarchy for gain-graph operations.

Every error raised by the library derives from :class:`GainGraphError`, so
callers can catch the whole family with one clause. The class name doubles as
the diagnostic ``kind`` emitted by the command line tool.
"""

from __future__ import annotations


class GainGraphError(ValueError):
    """Base class for domain errors."""

    @property
    def kind(self) -> str:
        name = type(self).__name__
        return name[:-5] if name.endswith("Error") else name


# graph construction
class SelfLoopError(GainGraphError):
    pass


class DuplicateEdgeError(GainGraphError):
    pass


class ZeroGainError(GainGraphError):
    pass


class BadVertexError(GainGraphError):
    pass


class NotAdjacentError(GainGraphError):
    pass


# switching
class LengthMismatchError(GainGraphError):
    pass


class NonUnitModulusError(GainGraphError):
    pass


# traversal
class DisconnectedError(GainGraphError):
    pass


class CapExceededError(GainGraphError):
    pass


class InvalidCycleError(GainGraphError):
    pass


class NotDistanceCompatibleError(GainGraphError):
    """Raised when a common distance matrix is requested but some pair has
    more than one shortest-path gain."""

    def __init__(self, witness: tuple[int, int], message: str | None = None):
        self.witness = tuple(witness)
        if message is None:
            message = f"NotDistanceCompatible witness=[{witness[0]},{witness[1]}]"
        super().__init__(message)


# linear algebra
class NotHermitianError(GainGraphError):
    pass


class NoConvergenceError(GainGraphError):
    def __init__(self, message: str, residual: float | None = None):
        self.residual = residual
        super().__init__(message)


class DimensionTooLargeError(GainGraphError):
    pass


class DimensionMismatchError(GainGraphError):
    pass


class PrecisionLossError(GainGraphError):
    """Imaginary residue of a characteristic polynomial of a Hermitian matrix
    exceeded the rounding threshold."""


# closed forms
class SingularDenominatorError(GainGraphError):
    pass


class EvenLengthError(GainGraphError):
    pass


class BadModulusError(GainGraphError):
    pass


# generators and files
class BadEdgeCountError(GainGraphError):
    pass


class ParseError(GainGraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
