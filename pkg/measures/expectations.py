"""
Expected values of the cycle-based measures when every edge is negative
independently with probability q.
"""
from .cycles import CycleCensus


def _check_probability(q: float) -> None:
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {q}")


def expected_relative_k_balance(q: float, k: int) -> float:
    """E[D_k] = (1 + (1 - 2q)^k) / 2."""
    _check_probability(q)
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    return (1.0 + (1.0 - 2.0 * q) ** k) / 2.0


def expected_degree_of_balance(census: CycleCensus, q: float) -> float:
    """E[D] = 1/2 * sum (1 + (1-2q)^k) O_k / sum O_k; 1 without cycles."""
    _check_probability(q)
    census.require_exact()
    total = sum(census.total(k) for k in census.counts)
    if total == 0:
        return 1.0
    weighted = sum((1.0 + (1.0 - 2.0 * q) ** k) * census.total(k) for k in census.counts)
    return 0.5 * weighted / total
