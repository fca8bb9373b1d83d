"""
Frustration-based measures F, F' and X, and the trivial measures Y and Z.
"""
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Optional, Union

from core.balance import is_balanced
from core.entities import SignedGraph
from core.exceptions import MeasureRefusedError

Number = Union[int, float]


@dataclass(frozen=True)
class FrustrationMeasures:
    """Normalised frustration values; skipped entries are None with a reason."""
    F: float
    F_prime: Optional[float]
    X: Optional[float]
    skipped: Dict[str, str] = field(default_factory=dict)


class TrivialMeasures(NamedTuple):
    Y: float
    Z: int


def tight_frustration_bound(graph: SignedGraph) -> int:
    """floor(m/2 - (n-1)/4), attained by the all-negative complete graph."""
    return (2 * graph.m - graph.n + 1) // 4


def frustration_measures(L: Number, graph: SignedGraph) -> FrustrationMeasures:
    """
    F = 1 - 2L/m, F' = 1 - L / floor(m/2 - (n-1)/4), X = 1 - L/m-.
    L must be the frustration index of the graph.
    """
    skipped: Dict[str, str] = {}

    if graph.m == 0:
        f_value = 1.0
    else:
        f_value = 1.0 - 2.0 * L / graph.m

    denominator = tight_frustration_bound(graph)
    if denominator <= 0:
        f_prime = None
        skipped["F_prime"] = "floor(m/2 - (n-1)/4) <= 0"
    else:
        f_prime = 1.0 - L / denominator

    if graph.m_neg == 0:
        x_value = 1.0 if L == 0 else None
        if x_value is None:
            skipped["X"] = "no negative edge"
    else:
        x_value = 1.0 - L / graph.m_neg

    return FrustrationMeasures(F=f_value, F_prime=f_prime, X=x_value, skipped=skipped)


def trivial_measures(graph: SignedGraph) -> TrivialMeasures:
    """Y = m+/m and Z = 1 iff the graph is balanced."""
    if graph.m == 0:
        raise MeasureRefusedError("Y needs at least one edge")
    return TrivialMeasures(Y=graph.m_pos / graph.m, Z=int(is_balanced(graph).balanced))
