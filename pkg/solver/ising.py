"""
Ground-state energy of the ±J Ising model whose couplings are the edge signs.
"""
from core.exceptions import SolverError

from .models import FrustrationResult


def ising_hamiltonian(result: FrustrationResult, m: int) -> int:
    """H* = 2L - m; only an optimal result gives the ground state."""
    if not result.optimal:
        raise SolverError(f"ground-state energy needs an optimal result, got status {result.status}")
    if result.weighted:
        raise SolverError("ground-state energy is defined for ±1 couplings only")
    if m < 0 or result.L > m:
        raise SolverError(f"edge count {m} is inconsistent with L = {result.L}")
    return 2 * int(result.L) - m
