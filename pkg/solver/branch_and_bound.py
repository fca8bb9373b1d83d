"""
Exact frustration index by depth-first branch and bound over node colours.
Following Template Method - one search engine serves the unweighted and the
weighted objective; only the edge costs and the bounds differ.
"""
import itertools
import logging
import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from core.balance import edge_cost, frustrated_edges, frustration_count, local_search_upper_bound, weighted_frustration
from core.decomposition import decompose, lift_colouring
from core.entities import Colouring, Piece, SignedGraph

from .bounds import packing_by_depth, triangle_packing_lower_bound, weighted_local_search
from .models import BUDGET_TERMINATED, GAP_TERMINATED, OPTIMAL, BoundEvent, FrustrationResult, Number, SolverConfig

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9


class SearchBudget:
    """Node and wall-clock budget shared by every piece and worker."""

    def __init__(self, node_budget: Optional[int], time_limit: Optional[float]):
        self._node_budget = node_budget
        self._deadline = time.monotonic() + time_limit if time_limit is not None else None
        self._lock = threading.Lock()
        self.spent = 0
        self.exhausted = False

    def spend(self) -> bool:
        """Account for one node expansion; False once the budget is gone."""
        with self._lock:
            if self.exhausted:
                return False
            if self._node_budget is not None and self.spent >= self._node_budget:
                self.exhausted = True
            elif self._deadline is not None and time.monotonic() > self._deadline:
                self.exhausted = True
            else:
                self.spent += 1
            return not self.exhausted


class SharedIncumbent:
    """Best objective of a piece; only ever improves."""

    def __init__(self, value: Number, bits: Tuple[bool, ...]):
        self._lock = threading.Lock()
        self.value = value
        self.bits = bits

    def offer(self, value: Number, bits: Tuple[bool, ...]) -> bool:
        with self._lock:
            if value < self.value - (TOLERANCE if isinstance(value, float) else 0):
                self.value = value
                self.bits = bits
                return True
            return False


class BoundTrail:
    """Global (nodes, upper, lower) history built from per-piece bounds."""

    def __init__(self, constant: Number, upper: List[Number], lower: List[Number], budget: SearchBudget):
        self._constant = constant
        self._upper = upper
        self._lower = lower
        self._budget = budget
        self._lock = threading.Lock()
        self.events: List[BoundEvent] = []
        self._record()

    def improve_upper(self, piece: int, value: Number) -> None:
        with self._lock:
            self._upper[piece] = value
            self._record()

    def close_piece(self, piece: int, upper: Number, lower: Number) -> None:
        with self._lock:
            self._upper[piece] = upper
            self._lower[piece] = lower
            self._record()

    def _record(self) -> None:
        event = BoundEvent(
            nodes=self._budget.spent,
            upper=self._constant + sum(self._upper),
            lower=self._constant + sum(self._lower),
        )
        if not self.events or (event.upper, event.lower) != (self.events[-1].upper, self.events[-1].lower):
            self.events.append(event)


class _SearchState:
    """Partial colouring with incrementally maintained costs."""

    def __init__(self, adjacency: Sequence[Sequence[Tuple[int, Number, Number]]], zero: Number):
        n = len(adjacency)
        self._adjacency = adjacency
        self.colour: List[Optional[bool]] = [None] * n
        # cost_if[u][c]: cost of edges from u to coloured nodes if u takes colour c
        self.cost_if = [[zero, zero] for _ in range(n)]
        self.fixed = zero
        self.slack = zero

    def assign(self, node: int, colour: bool) -> None:
        own = self.cost_if[node]
        self.slack -= min(own)
        self.fixed += own[colour]
        self.colour[node] = colour
        for other, same, diff in self._adjacency[node]:
            if self.colour[other] is not None:
                continue
            costs = self.cost_if[other]
            before = min(costs)
            costs[colour] += same
            costs[not colour] += diff
            self.slack += min(costs) - before

    def undo(self, node: int) -> None:
        colour = self.colour[node]
        self.colour[node] = None
        for other, same, diff in self._adjacency[node]:
            if self.colour[other] is not None:
                continue
            costs = self.cost_if[other]
            before = min(costs)
            costs[colour] -= same
            costs[not colour] -= diff
            self.slack += min(costs) - before
        own = self.cost_if[node]
        self.fixed -= own[colour]
        self.slack += min(own)

    def bits(self) -> Tuple[bool, ...]:
        return tuple(bool(c) for c in self.colour)


class PieceSearch:
    """Branch and bound over the colourings of one biconnected piece."""

    def __init__(
        self,
        graph: SignedGraph,
        config: SolverConfig,
        weighted: bool,
        budget: SearchBudget,
    ):
        self._graph = graph
        self._config = config
        self._weighted = weighted
        self._budget = budget
        self._zero: Number = 0.0 if weighted else 0

        self._adjacency = [
            [(other, *self._edge_costs(sign, weight)) for other, sign, weight in graph.neighbours[node]]
            for node in range(graph.n)
        ]
        self._order, self._fixed_node = self._branching_order()

        use_packing = config.use_triangle_lower_bound and not weighted
        self._packing = packing_by_depth(graph, self._order) if use_packing else [0] * (graph.n + 1)
        self.root_bound: Number = self._zero if weighted else triangle_packing_lower_bound(graph)

        seed_bits, seed_value = self._seed()
        self.incumbent = SharedIncumbent(seed_value, seed_bits)
        self.seed_value = seed_value
        self._low = math.inf
        self._low_lock = threading.Lock()
        self.terminated = False
        self.on_improve = None

    def _edge_costs(self, sign: int, weight: float) -> Tuple[Number, Number]:
        """(cost when endpoints share a colour, cost when they differ)."""
        if self._weighted:
            return edge_cost(weight, True), edge_cost(weight, False)
        return (0, 1) if sign > 0 else (1, 0)

    def _branching_order(self) -> Tuple[List[int], Optional[int]]:
        nodes = list(range(self._graph.n))
        degrees = self._graph.degrees
        if self._config.use_degree_branching:
            nodes.sort(key=lambda node: (-degrees[node], node))
        fixed = None
        if self._config.use_colour_fixing and nodes:
            fixed = max(nodes, key=lambda node: (degrees[node], -node))
            nodes.remove(fixed)
            nodes.insert(0, fixed)
        return nodes, fixed

    def _seed(self) -> Tuple[Tuple[bool, ...], Number]:
        graph = self._graph
        if self._weighted:
            start = Colouring.uniform(graph.n)
            if self._config.use_local_search_seed:
                colouring, value = weighted_local_search(graph)
            else:
                colouring, value = start, weighted_frustration(graph, start)
        elif self._config.use_local_search_seed:
            colouring, value = local_search_upper_bound(graph)
        else:
            colouring, value = Colouring.uniform(graph.n), graph.m_neg
        return colouring.bits, value

    def _bound(self, state: _SearchState, depth: int) -> Number:
        bound = state.fixed + self._packing[depth]
        if self._config.use_neighbour_bound:
            bound += state.slack
        return bound

    def _children(self, state: _SearchState, node: int) -> List[bool]:
        """Cheaper colour against the coloured neighbours first."""
        costs = state.cost_if[node]
        return [False, True] if costs[False] <= costs[True] else [True, False]

    def _note_low(self, value: Number) -> None:
        with self._low_lock:
            self._low = min(self._low, value)

    def _offer(self, state: _SearchState) -> None:
        if self.incumbent.offer(state.fixed, state.bits()):
            logger.debug(f"Incumbent improved to {state.fixed} after {self._budget.spent} nodes")
            if self.on_improve is not None:
                self.on_improve(state.fixed)

    def run(self, gap: Number) -> None:
        """Search the whole piece; the outcome is left on the instance."""
        n = self._graph.n
        start = 1 if self._fixed_node is not None else 0
        prefixes: List[Tuple[bool, ...]] = [()]

        workers = self._config.workers
        if workers > 1:
            width = min(max(n - start - 1, 0), math.ceil(math.log2(4 * workers)))
            prefixes = list(itertools.product((False, True), repeat=width))

        if workers > 1 and len(prefixes) > 1:
            with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="subtree") as pool:
                list(pool.map(lambda prefix: self._explore(prefix, start, gap), prefixes))
        else:
            for prefix in prefixes:
                self._explore(prefix, start, gap)

    def _explore(self, prefix: Tuple[bool, ...], start: int, gap: Number) -> None:
        """Depth-first search below the given prefix of the branching order."""
        order = self._order
        n = len(order)
        state = _SearchState(self._adjacency, self._zero)
        if self._fixed_node is not None:
            state.assign(self._fixed_node, True)
        for offset, colour in enumerate(prefix):
            state.assign(order[start + offset], colour)
        depth = start + len(prefix)

        if depth == n:
            if self._budget.spend():
                self._offer(state)
            else:
                self.terminated = True
                self._note_low(state.fixed)
            return

        bound = self._bound(state, depth)
        if bound >= self.incumbent.value - gap:
            if bound < self.incumbent.value:
                self._note_low(bound)
            return

        # frame: [depth, bound, children, next child]
        frames = [[depth, bound, self._children(state, order[depth]), 0]]
        while frames:
            frame = frames[-1]
            level, _, children, cursor = frame
            if cursor == len(children):
                frames.pop()
                if frames:
                    state.undo(order[level - 1])
                continue

            if not self._budget.spend():
                self.terminated = True
                open_bounds = [f[1] for f in frames if f[3] < len(f[2])]
                if open_bounds:
                    self._note_low(min(open_bounds))
                return

            frame[3] += 1
            node = order[level]
            state.assign(node, children[cursor])

            if level + 1 == n:
                self._offer(state)
                state.undo(node)
                continue

            child_bound = self._bound(state, level + 1)
            if child_bound >= self.incumbent.value - gap:
                if child_bound < self.incumbent.value:
                    self._note_low(child_bound)
                state.undo(node)
                continue

            frames.append([level + 1, child_bound, self._children(state, order[level + 1]), 0])

    @property
    def value(self) -> Number:
        return self.incumbent.value

    @property
    def colouring(self) -> Colouring:
        return Colouring(self.incumbent.bits)

    @property
    def lower_bound(self) -> Number:
        return max(self.root_bound, min(self.incumbent.value, self._low))


class FrustrationSolver:
    """
    Pipeline: decompose, seed every piece by local search, then branch and
    bound piece by piece while sharing the gap tolerance and the budget.
    """

    def __init__(self, config: Optional[SolverConfig] = None):
        self._config = config or SolverConfig()

    def solve(self, graph: SignedGraph) -> FrustrationResult:
        return self._run(graph, weighted=False)

    def solve_weighted(self, graph: SignedGraph) -> FrustrationResult:
        return self._run(graph, weighted=True)

    def _pieces(self, graph: SignedGraph) -> List[Piece]:
        if self._config.use_preprocessing:
            return decompose(graph)
        if graph.m == 0:
            return []
        return [Piece(graph=graph, nodes=tuple(range(graph.n)))]

    def _outside_cost(self, graph: SignedGraph, pieces: List[Piece], weighted: bool) -> Number:
        """Cost of the edges no piece covers, each coloured to its cheaper state."""
        if not weighted:
            return 0
        inside = set()
        for piece in pieces:
            for e in piece.graph.edges:
                inside.add((piece.nodes[e.u], piece.nodes[e.v]))
        return sum((1.0 - abs(e.weight)) / 2.0 for e in graph.edges if e.pair not in inside)

    def _run(self, graph: SignedGraph, weighted: bool) -> FrustrationResult:
        started = time.monotonic()
        config = self._config
        budget = SearchBudget(config.node_budget, config.time_limit)
        pieces = self._pieces(graph)
        constant = self._outside_cost(graph, pieces, weighted)

        searches = [PieceSearch(piece.graph, config, weighted, budget) for piece in pieces]
        trail = BoundTrail(
            constant,
            [search.seed_value for search in searches],
            [search.root_bound for search in searches],
            budget,
        )
        logger.info(
            f"Solving n={graph.n} m={graph.m} m_neg={graph.m_neg} "
            f"({len(pieces)} pieces, weighted={weighted}, workers={config.workers})"
        )

        used_gap: Number = 0
        for index, search in enumerate(searches):
            search.on_improve = lambda value, index=index: trail.improve_upper(index, value)
            search.run(max(config.gap - used_gap, 0))
            used_gap += search.value - search.lower_bound
            trail.close_piece(index, search.value, search.lower_bound)

        colouring = self._assemble(graph, pieces, searches)
        if weighted:
            L: Number = weighted_frustration(graph, colouring)
        else:
            L = frustration_count(graph, colouring)
        lower = min(constant + sum(search.lower_bound for search in searches), L)

        if any(search.terminated for search in searches) or budget.exhausted:
            status = BUDGET_TERMINATED
            logger.warning(f"Search budget exhausted: best {L}, proven lower bound {lower}")
        elif L - lower > (TOLERANCE if weighted else 0):
            status = GAP_TERMINATED
        else:
            status = OPTIMAL
            lower = L

        result = FrustrationResult(
            L=L,
            colouring=colouring,
            partition=tuple(int(bit) for bit in colouring.bits),
            status=status,
            lower_bound=lower,
            nodes=budget.spent,
            wall_time=time.monotonic() - started,
            frustrated_edges=frustrated_edges(graph, colouring),
            weighted=weighted,
            trail=trail.events,
        )
        logger.info(f"L = {L} ({status}), lower bound {lower}, {budget.spent} nodes")
        return result

    def _assemble(self, graph: SignedGraph, pieces: List[Piece], searches: List[PieceSearch]) -> Colouring:
        if not self._config.use_preprocessing:
            return searches[0].colouring if searches else Colouring.uniform(graph.n)
        return lift_colouring(graph, pieces, [search.colouring for search in searches])


def solve(graph: SignedGraph, config: Optional[SolverConfig] = None) -> FrustrationResult:
    """Frustration index L(G) with a certificate colouring."""
    return FrustrationSolver(config).solve(graph)


def solve_weighted(graph: SignedGraph, config: Optional[SolverConfig] = None) -> FrustrationResult:
    """Minimum weighted frustration over all two-colourings."""
    return FrustrationSolver(config).solve_weighted(graph)
