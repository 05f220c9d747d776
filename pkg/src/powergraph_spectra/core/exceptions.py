"""Core exceptions for the power graph spectra toolkit."""


class PowerGraphSpectraError(Exception):
    """Base exception for all toolkit errors."""

    pass


class InvalidGroupSpecError(PowerGraphSpectraError):
    """Raised when a group spec string or its parameters are invalid."""

    pass


class GroupAxiomError(PowerGraphSpectraError):
    """Raised when a multiplication table violates a group axiom."""

    pass


class InvalidActionError(PowerGraphSpectraError):
    """Raised when a semidirect product action is not a homomorphism into Aut(N)."""

    pass


class ArityMismatchError(PowerGraphSpectraError):
    """Raised when a joined union receives the wrong number of parts."""

    pass


class DisconnectedGraphError(PowerGraphSpectraError):
    """Raised when a distance-based routine receives a disconnected graph."""

    pass


class DiameterTooLargeError(PowerGraphSpectraError):
    """Raised when a diameter-two routine receives a graph of larger diameter."""

    pass


class NonEquitablePartitionError(PowerGraphSpectraError):
    """Raised when a partition is not equitable for the matrix it is applied to."""

    pass


class FactorizationError(PowerGraphSpectraError):
    """Raised when a factorization is malformed for the requested operation."""

    pass


class ToleranceNotReachedError(PowerGraphSpectraError):
    """Raised when root refinement runs out of bisection steps."""

    pass


class InvalidTheoremParamsError(PowerGraphSpectraError):
    """Raised when a closed-form evaluator receives invalid parameters."""

    pass


class UnsupportedExportError(PowerGraphSpectraError):
    """Raised when an export format does not support the payload type."""

    pass
