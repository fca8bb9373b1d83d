"""
Cycle-based measures: simple-cycle census by length and sign, the
(weighted) degree of balance and the trace formula for the triangle index.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np

from core.entities import SignedGraph
from core.exceptions import MeasureRefusedError

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_LIMIT = 10_000_000

WEIGHTING_KINDS = ("uniform", "inverse", "inverse-factorial", "single-k")


@dataclass(frozen=True)
class Weighting:
    """Length weighting f(k) of the weighted degree of balance."""
    kind: str = "uniform"
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in WEIGHTING_KINDS:
            raise ValueError(f"unknown weighting {self.kind!r}")
        if self.kind == "single-k" and (self.k is None or self.k < 3):
            raise ValueError("single-k weighting needs k >= 3")

    @classmethod
    def single(cls, k: int) -> "Weighting":
        return cls("single-k", k)

    def __call__(self, length: int) -> Fraction:
        if self.kind == "uniform":
            return Fraction(1)
        if self.kind == "inverse":
            return Fraction(1, length)
        if self.kind == "inverse-factorial":
            return Fraction(1, math.factorial(length))
        return Fraction(1 if length == self.k else 0)


@dataclass(frozen=True)
class CycleCensus:
    """Simple cycles per length k as (balanced, unbalanced) counts."""
    counts: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    cap: int = 3
    truncated: bool = False

    def balanced(self, k: int) -> int:
        return self.counts.get(k, (0, 0))[0]

    def unbalanced(self, k: int) -> int:
        return self.counts.get(k, (0, 0))[1]

    def total(self, k: int) -> int:
        return sum(self.counts.get(k, (0, 0)))

    @property
    def cycle_count(self) -> int:
        return sum(p + q for p, q in self.counts.values())

    def require_exact(self) -> None:
        if self.truncated:
            raise MeasureRefusedError(
                f"cycle census truncated after {self.cycle_count} cycles; raise the limit"
            )


def cycle_census(
    graph: SignedGraph,
    cap: Optional[int] = None,
    limit: int = DEFAULT_CYCLE_LIMIT,
) -> CycleCensus:
    """
    Count simple cycles of length 3..cap by sign.
    Each cycle is rooted at its smallest node and walked in the direction
    whose second node is smaller than its last, so it is seen exactly once.
    """
    cap = graph.n if cap is None else cap
    if cap < 3:
        raise ValueError("cycle length cap must be at least 3")

    tally: Dict[int, list] = {}
    found = 0

    for root in range(graph.n):
        path = [root]
        on_path = {root}
        signs = [1]
        stack = [iter(graph.neighbours[root])]

        while stack:
            advanced = False
            for other, sign, _ in stack[-1]:
                if other == root:
                    if len(path) >= 3 and path[1] < path[-1]:
                        slot = tally.setdefault(len(path), [0, 0])
                        slot[0 if signs[-1] * sign > 0 else 1] += 1
                        found += 1
                        if found > limit:
                            logger.warning(f"Cycle census stopped at limit {limit}")
                            return _freeze(tally, cap, truncated=True)
                    continue
                if other < root or other in on_path or len(path) >= cap:
                    continue
                path.append(other)
                on_path.add(other)
                signs.append(signs[-1] * sign)
                stack.append(iter(graph.neighbours[other]))
                advanced = True
                break

            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
                signs.pop()

    return _freeze(tally, cap, truncated=False)


def _freeze(tally: Dict[int, list], cap: int, truncated: bool) -> CycleCensus:
    counts = {k: (v[0], v[1]) for k, v in sorted(tally.items())}
    return CycleCensus(counts=counts, cap=cap, truncated=truncated)


def degree_of_balance(census: CycleCensus, weighting: Weighting = Weighting()) -> float:
    """
    Sum f(k) O_k+ over sum f(k) O_k; 1 when no weighted cycle exists.
    Uniform weights give D(G), single-k weights give D_k(G).
    """
    census.require_exact()
    numerator = Fraction(0)
    denominator = Fraction(0)
    for k, (positive, negative) in census.counts.items():
        weight = weighting(k)
        numerator += weight * positive
        denominator += weight * (positive + negative)
    if denominator == 0:
        return 1.0
    return float(numerator / denominator)


def triangle_index(graph: SignedGraph) -> float:
    """T(G) = (Tr(A^3) + Tr(|A|^3)) / (2 Tr(|A|^3)); 1 when there is no triangle."""
    signed = graph.adjacency().astype(np.int64)
    unsigned = np.abs(signed)
    signed_trace = int(np.trace(signed @ signed @ signed))
    unsigned_trace = int(np.trace(unsigned @ unsigned @ unsigned))
    if unsigned_trace == 0:
        return 1.0
    return (signed_trace + unsigned_trace) / (2 * unsigned_trace)
