"""
Domain entities for the Signed Balance toolkit.
Following Clean Architecture - entities are at the core of the domain.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .exceptions import GraphValidationError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Edge:
    """An undirected signed edge stored with u < v."""
    u: int
    v: int
    sign: int
    weight: float

    @property
    def pair(self) -> Pair:
        return (self.u, self.v)


@dataclass(frozen=True)
class SignedGraph:
    """
    Canonical undirected signed graph, the universal input of the toolkit.
    Nodes are the integers 0..n-1; edges are sorted and stored with u < v.
    Instances are immutable; every transformation returns a new graph.
    """
    n: int
    edges: Tuple[Edge, ...] = ()
    name: Optional[str] = None
    labels: Tuple[str, ...] = ()
    weighted: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError("node count must be non-negative")
        if self.labels and len(self.labels) != self.n:
            raise GraphValidationError("label table must have one entry per node")

        seen = set()
        previous = None
        for edge in self.edges:
            if edge.u == edge.v:
                raise GraphValidationError(f"self-loop on node {edge.u}")
            if not (0 <= edge.u < edge.v < self.n):
                raise GraphValidationError(f"edge ({edge.u}, {edge.v}) is not canonical for n={self.n}")
            if edge.pair in seen:
                raise GraphValidationError(f"duplicate edge ({edge.u}, {edge.v})")
            if edge.sign not in (-1, 1):
                raise GraphValidationError(f"sign of ({edge.u}, {edge.v}) must be -1 or +1")
            if edge.weight == 0 or not -1.0 <= edge.weight <= 1.0:
                raise GraphValidationError(f"weight of ({edge.u}, {edge.v}) must lie in [-1, 1] \\ {{0}}")
            if (edge.weight > 0) != (edge.sign > 0):
                raise GraphValidationError(f"sign and weight of ({edge.u}, {edge.v}) disagree")
            if previous is not None and edge.pair < previous:
                raise GraphValidationError("edges must be sorted lexicographically")
            seen.add(edge.pair)
            previous = edge.pair

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Sequence],
        name: Optional[str] = None,
        labels: Sequence[str] = (),
        weighted: Optional[bool] = None,
    ) -> "SignedGraph":
        """
        Build a canonical graph from (u, v, sign) or (u, v, sign, weight) records.
        Endpoints may come in any order; they are stored with u < v.
        The weighted flag is inferred from non-unit weights unless given.
        """
        records: List[Edge] = []
        inferred = False
        for record in edges:
            u, v, sign = int(record[0]), int(record[1]), int(record[2])
            if len(record) > 3 and record[3] is not None:
                weight = float(record[3])
                inferred = inferred or abs(weight) != 1.0
            else:
                weight = float(sign)
            if u > v:
                u, v = v, u
            records.append(Edge(u, v, sign, weight))
        records.sort(key=lambda e: e.pair)
        return cls(
            n=n,
            edges=tuple(records),
            name=name,
            labels=tuple(str(label) for label in labels),
            weighted=inferred if weighted is None else weighted,
        )

    # Derived counts

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def m_neg(self) -> int:
        return sum(1 for e in self.edges if e.sign < 0)

    @property
    def m_pos(self) -> int:
        return self.m - self.m_neg

    @property
    def density(self) -> float:
        if self.n < 2:
            return 0.0
        return 2.0 * self.m / (self.n * (self.n - 1))

    @property
    def fingerprint(self) -> Tuple[int, int, int]:
        return (self.n, self.m, self.m_neg)

    @cached_property
    def index(self) -> Dict[Pair, int]:
        """Position of each (u, v) pair in the edge sequence."""
        return {e.pair: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbours(self) -> Tuple[Tuple[Tuple[int, int, float], ...], ...]:
        """Per node, the (neighbour, sign, weight) triples sorted by neighbour."""
        table: List[List[Tuple[int, int, float]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            table[e.u].append((e.v, e.sign, e.weight))
            table[e.v].append((e.u, e.sign, e.weight))
        return tuple(tuple(sorted(row)) for row in table)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.neighbours)

    def sign_of(self, u: int, v: int) -> int:
        """Sign of the edge between u and v (0 when absent)."""
        if u > v:
            u, v = v, u
        position = self.index.get((u, v))
        return 0 if position is None else self.edges[position].sign

    # Matrices

    def adjacency(self, weighted: bool = False) -> np.ndarray:
        """Signed adjacency matrix A with a_uv = sigma(u, v)."""
        matrix = np.zeros((self.n, self.n))
        for e in self.edges:
            value = e.weight if weighted else float(e.sign)
            matrix[e.u, e.v] = value
            matrix[e.v, e.u] = value
        return matrix

    def abs_adjacency(self) -> np.ndarray:
        return np.abs(self.adjacency())

    def laplacian(self) -> np.ndarray:
        """Signed Laplacian D - A."""
        adjacency = self.adjacency()
        return np.diag(np.abs(adjacency).sum(axis=1)) - adjacency

    # Structure

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for e in self.edges:
            graph.add_edge(e.u, e.v, sign=e.sign, weight=e.weight)
        return graph

    def components(self) -> List[List[int]]:
        """Connected components as sorted node lists, ordered by smallest node."""
        return sorted(sorted(component) for component in nx.connected_components(self.to_networkx()))

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def subgraph(self, nodes: Sequence[int]) -> "SignedGraph":
        """Induced subgraph relabelled in the order of `nodes`."""
        local = {node: i for i, node in enumerate(nodes)}
        records = [
            (local[e.u], local[e.v], e.sign, e.weight)
            for e in self.edges
            if e.u in local and e.v in local
        ]
        labels = [self.label(node) for node in nodes]
        return SignedGraph.from_edges(
            len(nodes), records, name=self.name, labels=labels, weighted=self.weighted
        )

    def giant_component(self) -> "SignedGraph":
        """Largest connected component (ties broken by smallest node)."""
        if self.n == 0:
            return self
        largest = max(self.components(), key=len)
        return self.subgraph(largest)

    def without_edges(self, pairs: Iterable[Pair]) -> "SignedGraph":
        """Same node set with the given edges removed."""
        dropped = {(min(u, v), max(u, v)) for u, v in pairs}
        kept = tuple(e for e in self.edges if e.pair not in dropped)
        return SignedGraph(self.n, kept, self.name, self.labels, self.weighted)

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        """Same topology with a new sign per edge (weights follow the sign)."""
        if len(signs) != self.m:
            raise GraphValidationError("one sign per edge is required")
        edges = tuple(
            Edge(e.u, e.v, int(s), abs(e.weight) * int(s))
            for e, s in zip(self.edges, signs)
        )
        return SignedGraph(self.n, edges, self.name, self.labels, self.weighted)

    def disjoint_union(self, other: "SignedGraph") -> "SignedGraph":
        """G ⊕ H with H's nodes shifted by G.n."""
        shift = self.n
        records = [(e.u, e.v, e.sign, e.weight) for e in self.edges]
        records += [(e.u + shift, e.v + shift, e.sign, e.weight) for e in other.edges]
        labels = [self.label(i) for i in range(self.n)] + [
            f"{other.label(i)}'" for i in range(other.n)
        ]
        return SignedGraph.from_edges(
            self.n + other.n, records, labels=labels, weighted=self.weighted or other.weighted
        )

    def label(self, node: int) -> str:
        return self.labels[node] if self.labels else str(node)


@dataclass(frozen=True)
class Colouring:
    """
    Two-colour node assignment; bits[i] is True when node i is black (in X).
    """
    bits: Tuple[bool, ...]

    @classmethod
    def uniform(cls, n: int, black: bool = False) -> "Colouring":
        return cls(tuple([black] * n))

    @classmethod
    def from_bits(cls, bits: Iterable) -> "Colouring":
        return cls(tuple(bool(b) for b in bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, node: int) -> bool:
        return self.bits[node]

    def complement(self) -> "Colouring":
        return Colouring(tuple(not b for b in self.bits))

    def flipped(self, node: int) -> "Colouring":
        bits = list(self.bits)
        bits[node] = not bits[node]
        return Colouring(tuple(bits))

    def black(self) -> List[int]:
        return [i for i, b in enumerate(self.bits) if b]

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def check(self, graph: SignedGraph) -> None:
        if len(self.bits) != graph.n:
            raise GraphValidationError(
                f"colouring has {len(self.bits)} entries for a graph with {graph.n} nodes"
            )


@dataclass(frozen=True)
class DegreeProfile:
    """Per-node positive and negative degrees."""
    positive: Tuple[int, ...] = field(default_factory=tuple)
    negative: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def total(self) -> Tuple[int, ...]:
        return tuple(p + q for p, q in zip(self.positive, self.negative))

    @property
    def net(self) -> Tuple[int, ...]:
        return tuple(p - q for p, q in zip(self.positive, self.negative))


@dataclass(frozen=True)
class Piece:
    """A biconnected piece of a graph plus the map from local to global node ids."""
    graph: SignedGraph
    nodes: Tuple[int, ...]
