"""
Exact closed-form measure values for the complete graph with a single
negative edge (K_n^a) and the all-negative complete graph (K_n^c).
"""
import math
from fractions import Fraction
from typing import Callable, Dict

FAMILY_ALIASES = {
    "a": "single-negative-complete",
    "c": "all-negative-complete",
    "single-negative-complete": "single-negative-complete",
    "all-negative-complete": "all-negative-complete",
}


def complete_cycle_count(n: int, k: int) -> int:
    """Number of simple k-cycles in K_n: n! / (2k (n-k)!)."""
    return math.factorial(n) // (2 * k * math.factorial(n - k))


def cycles_through_edge(n: int, k: int) -> int:
    """Number of simple k-cycles of K_n through a fixed edge: (n-2)! / (n-k)!."""
    return math.factorial(n - 2) // math.factorial(n - k)


def _ratio(n: int, weight: Callable[[int], Fraction], balanced: Callable[[int], int]) -> float:
    numerator = sum(weight(k) * balanced(k) for k in range(3, n + 1))
    denominator = sum(weight(k) * complete_cycle_count(n, k) for k in range(3, n + 1))
    return float(Fraction(numerator) / denominator)


def _uniform(k: int) -> Fraction:
    return Fraction(1)


def _inverse_factorial(k: int) -> Fraction:
    return Fraction(1, math.factorial(k))


def _tight_bound(n: int, m: int) -> int:
    return (2 * m - n + 1) // 4


def single_negative_complete(n: int) -> Dict[str, float]:
    m = n * (n - 1) // 2
    balanced = lambda k: complete_cycle_count(n, k) - cycles_through_edge(n, k)

    root = math.sqrt((n - 2) * (n + 6))
    signed = [(n - 4 - root) / 2, (n - 4 + root) / 2, 1.0] + [-1.0] * (n - 3)
    unsigned = [n - 1.0] + [-1.0] * (n - 1)
    shift = n - 1.0
    k_value = sum(math.exp(x - shift) for x in signed) / sum(math.exp(x - shift) for x in unsigned)
    lam = (n + 2 - root) / 2

    table: Dict[str, float] = {
        "n": n,
        "m": m,
        "m_neg": 1,
        "L": 1,
        "D": _ratio(n, _uniform, balanced),
        "C_inv_fact": _ratio(n, _inverse_factorial, balanced),
    }
    for k in range(3, n + 1):
        table[f"D_{k}"] = 1.0 - 2.0 * k / (n * (n - 1))
    table.update({
        "T": 1.0 - 6.0 / (n * (n - 1)),
        "K": k_value,
        "W": (1.0 + k_value) / 2.0,
        "lambda": lam,
        "A": 1.0 - lam / (n - 2),
        "F": 1.0 - 4.0 / (n * (n - 1)),
        "F_prime": 1.0 - 1.0 / _tight_bound(n, m),
        "X": 0.0,
        "Y": 1.0 - 1.0 / m,
        "Z": 0,
    })
    return table


def all_negative_complete(n: int) -> Dict[str, float]:
    m = n * (n - 1) // 2
    balanced = lambda k: complete_cycle_count(n, k) if k % 2 == 0 else 0
    frustration = (n * n - 2 * n) // 4 if n % 2 == 0 else (n * n - 2 * n + 1) // 4

    # A has eigenvalues 1 - n (once) and 1 (n - 1 times); |A| has n - 1 and -1
    k_value = ((n - 1) * math.exp(2 - n) + math.exp(2 - 2 * n)) / ((n - 1) * math.exp(-n) + 1.0)

    table: Dict[str, float] = {
        "n": n,
        "m": m,
        "m_neg": m,
        "L": frustration,
        "D": _ratio(n, _uniform, balanced),
        "C_inv_fact": _ratio(n, _inverse_factorial, balanced),
    }
    for k in range(3, n + 1):
        table[f"D_{k}"] = 1.0 if k % 2 == 0 else 0.0
    table.update({
        "T": 0.0,
        "K": k_value,
        "W": (1.0 + k_value) / 2.0,
        "lambda": float(n - 2),
        "A": 0.0,
        "F": 1.0 / (n - 1) if n % 2 == 0 else 1.0 / n,
        "F_prime": 1.0 - frustration / _tight_bound(n, m),
        "X": 1.0 - frustration / m,
        "Y": 0.0,
        "Z": 0,
    })
    return table


def family_oracle(n: int, family: str) -> Dict[str, float]:
    """Closed-form measure table for K_n^a ('a') or K_n^c ('c')."""
    if n < 3:
        raise ValueError("closed forms need n >= 3")
    try:
        canonical = FAMILY_ALIASES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; use 'a' or 'c'")
    if canonical == "single-negative-complete":
        return single_negative_complete(n)
    return all_negative_complete(n)
