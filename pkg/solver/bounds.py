"""
Combinatorial bounds on the frustration index.
"""
import logging
from typing import Dict, Iterable, List, Optional, Set, Tuple

from core.balance import edge_cost
from core.entities import Colouring, Pair, SignedGraph

logger = logging.getLogger(__name__)

Triangle = Tuple[int, int, int]


def triangles(graph: SignedGraph) -> List[Triangle]:
    """All triangles (i, j, k), i < j < k, in lexicographic order."""
    higher: List[Set[int]] = [
        {other for other, _, _ in graph.neighbours[node] if other > node}
        for node in range(graph.n)
    ]
    found = []
    for i in range(graph.n):
        for j in sorted(higher[i]):
            for k in sorted(higher[i] & higher[j]):
                found.append((i, j, k))
    return found


def unbalanced_triangles(graph: SignedGraph) -> List[Triangle]:
    """Triangles whose sign product is negative, lexicographically ordered."""
    return [
        (i, j, k) for i, j, k in triangles(graph)
        if graph.sign_of(i, j) * graph.sign_of(i, k) * graph.sign_of(j, k) < 0
    ]


def greedy_packing(candidates: Iterable[Triangle]) -> int:
    """Take each triangle whose three edges are still unused."""
    used: Set[Pair] = set()
    packed = 0
    for i, j, k in candidates:
        sides = ((i, j), (i, k), (j, k))
        if any(side in used for side in sides):
            continue
        used.update(sides)
        packed += 1
    return packed


def triangle_packing_lower_bound(graph: SignedGraph) -> int:
    """
    Size of a greedy edge-disjoint packing of unbalanced triangles.
    Every unbalanced triangle holds a frustrated edge, so this bounds L from below.
    """
    return greedy_packing(unbalanced_triangles(graph))


def packing_by_depth(graph: SignedGraph, order: List[int]) -> List[int]:
    """
    Greedy packing restricted to the nodes order[d:], for every depth d.
    A triangle survives to depth d while its earliest node in `order` is at
    position >= d.
    """
    position = {node: p for p, node in enumerate(order)}
    pool = unbalanced_triangles(graph)
    earliest = [min(position[i], position[j], position[k]) for i, j, k in pool]

    table = [0] * (len(order) + 1)
    for depth in range(len(order)):
        table[depth] = greedy_packing(t for t, e in zip(pool, earliest) if e >= depth)
        if table[depth] == 0:
            break
    return table


def upper_bounds(graph: SignedGraph) -> Dict[str, int]:
    """A-priori upper bounds on L(G)."""
    components = len(graph.components()) if graph.n else 0
    return {
        "negative_edges": graph.m_neg,
        "half_edges": graph.m // 2,
        "circuit_rank": graph.m - graph.n + components,
        "dense": (graph.n - 1) ** 2 // 4 if graph.n else 0,
    }


def weighted_local_search(
    graph: SignedGraph,
    start: Optional[Colouring] = None,
) -> Tuple[Colouring, float]:
    """Flip nodes while the weighted frustration cost strictly drops."""
    bits = list(start.bits) if start is not None else [False] * graph.n
    improved = True
    while improved:
        improved = False
        for node in range(graph.n):
            gain = 0.0
            for other, _, weight in graph.neighbours[node]:
                same = bits[node] == bits[other]
                gain += edge_cost(weight, same) - edge_cost(weight, not same)
            if gain > 1e-12:
                bits[node] = not bits[node]
                improved = True

    colouring = Colouring(tuple(bits))
    cost = sum(edge_cost(e.weight, bits[e.u] == bits[e.v]) for e in graph.edges)
    logger.debug(f"Weighted local search settled at {cost:.6g}")
    return colouring, cost
