"""
Balance algebra on signed graphs: frustration counting, switching,
balance detection, sign reshuffling and the local-search upper bound.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .entities import Colouring, DegreeProfile, Edge, Pair, SignedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BalanceCheck:
    """Outcome of a balance test."""
    balanced: bool
    bipartition: Optional[Colouring] = None
    witness: Optional[Tuple[int, ...]] = None

    def __iter__(self):
        return iter((self.balanced, self.bipartition, self.witness))


def is_frustrated(sign: int, colour_u: bool, colour_v: bool) -> bool:
    """Positive edges are frustrated across colours, negative edges within a colour."""
    return (colour_u != colour_v) if sign > 0 else (colour_u == colour_v)


def frustration_count(graph: SignedGraph, colouring: Colouring) -> int:
    """Number of frustrated edges f_G(X)."""
    colouring.check(graph)
    bits = colouring.bits
    return sum(1 for e in graph.edges if is_frustrated(e.sign, bits[e.u], bits[e.v]))


def frustrated_edges(graph: SignedGraph, colouring: Colouring) -> List[Pair]:
    colouring.check(graph)
    bits = colouring.bits
    return [e.pair for e in graph.edges if is_frustrated(e.sign, bits[e.u], bits[e.v])]


def edge_cost(weight: float, same_colour: bool) -> float:
    """(1 - w)/2 + w (x_i + x_j - 2 x_i x_j) for one edge."""
    return (1.0 - weight) / 2.0 if same_colour else (1.0 + weight) / 2.0


def weighted_frustration(graph: SignedGraph, colouring: Colouring) -> float:
    """Weighted frustration count; equals frustration_count when all |w| = 1."""
    colouring.check(graph)
    bits = colouring.bits
    return sum(edge_cost(e.weight, bits[e.u] == bits[e.v]) for e in graph.edges)


def switch(graph: SignedGraph, colouring: Colouring) -> SignedGraph:
    """Negate every edge whose endpoints have different colours."""
    colouring.check(graph)
    bits = colouring.bits
    edges = tuple(
        e if bits[e.u] == bits[e.v] else Edge(e.u, e.v, -e.sign, -e.weight)
        for e in graph.edges
    )
    return SignedGraph(graph.n, edges, graph.name, graph.labels, graph.weighted)


def is_balanced(graph: SignedGraph) -> BalanceCheck:
    """
    Propagate colours along a BFS spanning forest (same colour across positive
    edges, opposite across negative ones) and check every non-tree edge.
    Linear in m. On failure the witness is a negative cycle.
    """
    colour: List[Optional[bool]] = [None] * graph.n
    parent: List[int] = [-1] * graph.n
    depth: List[int] = [0] * graph.n

    for root in range(graph.n):
        if colour[root] is not None:
            continue
        colour[root] = False
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for other, sign, _ in graph.neighbours[node]:
                expected = colour[node] if sign > 0 else not colour[node]
                if colour[other] is None:
                    colour[other] = expected
                    parent[other] = node
                    depth[other] = depth[node] + 1
                    queue.append(other)
                elif colour[other] != expected:
                    witness = _tree_cycle(node, other, parent, depth)
                    return BalanceCheck(False, None, witness)

    return BalanceCheck(True, Colouring(tuple(bool(c) for c in colour)), None)


def _tree_cycle(u: int, v: int, parent: List[int], depth: List[int]) -> Tuple[int, ...]:
    """Cycle closed by non-tree edge (u, v) through the BFS tree."""
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right repeats it
    return tuple(left + right[-2::-1])


def reshuffle(graph: SignedGraph, seed: int) -> SignedGraph:
    """Same topology with m- negative edges placed uniformly at random."""
    if graph.m_neg in (0, graph.m):
        return graph
    rng = np.random.default_rng(seed)
    negative = rng.choice(graph.m, size=graph.m_neg, replace=False)
    signs = np.ones(graph.m, dtype=int)
    signs[negative] = -1
    return graph.with_signs(signs.tolist())


def local_search_upper_bound(
    graph: SignedGraph,
    start: Optional[Colouring] = None,
) -> Tuple[Colouring, int]:
    """
    Flip any node with more frustrated than satisfied incident edges until none
    is left. Each flip lowers the count, so the loop terminates.
    """
    bits = list(start.bits) if start is not None else [False] * graph.n
    if start is not None:
        start.check(graph)

    count = frustration_count(graph, Colouring(tuple(bits)))
    improved = True
    while improved:
        improved = False
        for node in range(graph.n):
            frustrated = sum(
                1 for other, sign, _ in graph.neighbours[node]
                if is_frustrated(sign, bits[node], bits[other])
            )
            satisfied = graph.degrees[node] - frustrated
            if frustrated > satisfied:
                bits[node] = not bits[node]
                count -= frustrated - satisfied
                improved = True

    logger.debug(f"Local search settled at {count} frustrated edges")
    return Colouring(tuple(bits)), count


def degree_profile(graph: SignedGraph) -> DegreeProfile:
    positive = [0] * graph.n
    negative = [0] * graph.n
    for e in graph.edges:
        target = positive if e.sign > 0 else negative
        target[e.u] += 1
        target[e.v] += 1
    return DegreeProfile(tuple(positive), tuple(negative))
