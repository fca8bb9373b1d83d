"""
Data reduction with separators of size 0 and 1: isolated and pendant nodes
are pruned, the remainder is cut at articulation points into biconnected pieces.
"""
import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Set

import networkx as nx

from .entities import Colouring, Pair, Piece, SignedGraph
from .exceptions import GraphValidationError

logger = logging.getLogger(__name__)


def prune_pendants(graph: SignedGraph) -> Set[int]:
    """Nodes left after repeatedly removing nodes of degree 0 and 1."""
    degree = list(graph.degrees)
    alive = [True] * graph.n
    queue = deque(node for node in range(graph.n) if degree[node] <= 1)

    while queue:
        node = queue.popleft()
        if not alive[node]:
            continue
        alive[node] = False
        for other, _, _ in graph.neighbours[node]:
            if alive[other]:
                degree[other] -= 1
                if degree[other] == 1:
                    queue.append(other)

    return {node for node in range(graph.n) if alive[node]}


def decompose(graph: SignedGraph) -> List[Piece]:
    """
    Biconnected pieces carrying every cycle of the graph.
    Bridges never lie on a cycle and are dropped, so the piece frustration
    indices add up to L(G).
    """
    core = prune_pendants(graph)
    if not core:
        return []

    reduced = graph.to_networkx().subgraph(core)
    pieces = []
    for block in nx.biconnected_components(reduced):
        if len(block) < 3:
            continue
        nodes = tuple(sorted(block))
        pieces.append(Piece(graph=graph.subgraph(nodes), nodes=nodes))

    pieces.sort(key=lambda piece: piece.nodes)
    logger.debug(
        f"Decomposed n={graph.n} m={graph.m} into {len(pieces)} pieces "
        f"({graph.n - len(core)} nodes pruned)"
    )
    return pieces


def lift_colouring(
    graph: SignedGraph,
    pieces: Sequence[Piece],
    colourings: Sequence[Colouring],
) -> Colouring:
    """
    Combine piece colourings into a colouring of the whole graph.
    Pieces meet at articulation points and are complemented to agree there;
    every edge outside the pieces is a bridge and is coloured to be satisfied.
    """
    if len(pieces) != len(colourings):
        raise GraphValidationError("one colouring per piece is required")

    memberships: Dict[int, List[int]] = {}
    inside: Set[Pair] = set()
    for k, piece in enumerate(pieces):
        colourings[k].check(piece.graph)
        for node in piece.nodes:
            memberships.setdefault(node, []).append(k)
        for e in piece.graph.edges:
            u, v = piece.nodes[e.u], piece.nodes[e.v]
            inside.add((min(u, v), max(u, v)))

    colour: List[Optional[bool]] = [None] * graph.n
    placed = [False] * len(pieces)

    for root in range(graph.n):
        if colour[root] is not None:
            continue
        colour[root] = False
        queue = deque([root])
        while queue:
            node = queue.popleft()
            for k in memberships.get(node, ()):
                if placed[k]:
                    continue
                placed[k] = True
                piece, local = pieces[k], colourings[k]
                flip = local[piece.nodes.index(node)] != colour[node]
                for i, member in enumerate(piece.nodes):
                    if colour[member] is None:
                        colour[member] = local[i] != flip
                        queue.append(member)
            for other, sign, _ in graph.neighbours[node]:
                pair = (min(node, other), max(node, other))
                if colour[other] is None and pair not in inside:
                    colour[other] = colour[node] if sign > 0 else not colour[node]
                    queue.append(other)

    return Colouring(tuple(bool(c) for c in colour))
