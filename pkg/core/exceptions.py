"""
Custom exceptions for the Signed Balance toolkit.
Following Clean Architecture - domain exceptions are separate from infrastructure.
"""
from typing import Optional


class BalanceError(Exception):
    """Base exception for the Signed Balance toolkit."""
    pass


class ConfigurationError(BalanceError):
    """Raised when configuration or an option combination is invalid."""
    pass


class ParsingError(BalanceError):
    """Raised when parsing an edge-list document fails."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(BalanceError):
    """Raised when a signed graph or colouring violates its invariants."""
    pass


class MeasureRefusedError(BalanceError):
    """Raised when a measure is undefined for the given input."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class ConvergenceError(BalanceError):
    """Raised when the eigensolver runs out of sweeps."""
    pass


class SolverError(BalanceError):
    """Raised when a solver request cannot be honoured."""
    pass


class InfeasibleSpecError(BalanceError):
    """Raised when a generator family spec is outside its domain."""
    pass
