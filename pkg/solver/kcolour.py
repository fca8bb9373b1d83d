"""
Branch and bound over k-colourings (k-balance, correlation clustering).
Positive edges are frustrated across classes, negative edges inside a class.
"""
import logging
import math
import time
from typing import List, Optional, Sequence, Tuple

from core.balance import local_search_upper_bound
from core.entities import Colouring, Pair, SignedGraph

from .branch_and_bound import SearchBudget, SharedIncumbent
from .models import BUDGET_TERMINATED, GAP_TERMINATED, OPTIMAL, BoundEvent, FrustrationResult, SolverConfig

logger = logging.getLogger(__name__)


def partition_cost(graph: SignedGraph, partition: Sequence[int]) -> int:
    return len(partition_frustrated_edges(graph, partition))


def partition_frustrated_edges(graph: SignedGraph, partition: Sequence[int]) -> List[Pair]:
    return [
        e.pair for e in graph.edges
        if (partition[e.u] != partition[e.v]) == (e.sign > 0)
    ]


class _KState:
    def __init__(self, graph: SignedGraph, colours: int):
        self._graph = graph
        self._colours = colours
        self.colour: List[int] = [-1] * graph.n
        self.cost = [[0] * colours for _ in range(graph.n)]
        self.fixed = 0
        self.used = 0
        self._history: List[int] = []

    def assign(self, node: int, colour: int) -> None:
        self.fixed += self.cost[node][colour]
        self.colour[node] = colour
        self._history.append(self.used)
        self.used = max(self.used, colour + 1)
        self._spread(node, colour, 1)

    def undo(self, node: int) -> None:
        colour = self.colour[node]
        self._spread(node, colour, -1)
        self.colour[node] = -1
        self.used = self._history.pop()
        self.fixed -= self.cost[node][colour]

    def _spread(self, node: int, colour: int, step: int) -> None:
        for other, sign, _ in self._graph.neighbours[node]:
            if self.colour[other] != -1:
                continue
            row = self.cost[other]
            if sign > 0:
                for c in range(self._colours):
                    if c != colour:
                        row[c] += step
            else:
                row[colour] += step

    def allowed(self) -> int:
        """Colours 0..allowed-1 may be used next; c only after c - 1."""
        return min(self.used + 1, self._colours)

    def bound(self, uncoloured: Sequence[int]) -> int:
        width = self.allowed()
        return self.fixed + sum(min(self.cost[node][:width]) for node in uncoloured)


class KColourSolver:
    """Depth-first search with symmetry breaking on colour labels."""

    def __init__(self, config: Optional[SolverConfig] = None):
        self._config = config or SolverConfig()

    def solve(self, graph: SignedGraph, k: int) -> FrustrationResult:
        if k < 1:
            raise ValueError("at least one colour is required")
        started = time.monotonic()
        config = self._config
        colours = min(k, max(graph.n, 1))
        budget = SearchBudget(config.node_budget, config.time_limit)

        seed = self._seed(graph, colours)
        incumbent = SharedIncumbent(partition_cost(graph, seed), seed)
        trail = [BoundEvent(nodes=0, upper=incumbent.value, lower=0)]

        order = list(range(graph.n))
        if config.use_degree_branching:
            order.sort(key=lambda node: (-graph.degrees[node], node))

        low = math.inf
        terminated = False
        if colours > 1 and graph.n > 0:
            low, terminated = self._search(graph, colours, order, incumbent, budget, trail)

        partition = tuple(incumbent.bits)
        L = partition_cost(graph, partition)
        lower = max(0, min(L, low))
        if terminated:
            status = BUDGET_TERMINATED
            logger.warning(f"k-colour search budget exhausted: best {L}, proven lower bound {lower}")
        elif lower < L:
            status = GAP_TERMINATED
        else:
            status = OPTIMAL
        trail.append(BoundEvent(nodes=budget.spent, upper=L, lower=lower))

        colouring = None
        if max(partition, default=0) <= 1:
            colouring = Colouring(tuple(c == 1 for c in partition))

        logger.info(f"k={k}: L = {L} ({status}), {budget.spent} nodes")
        return FrustrationResult(
            L=L,
            colouring=colouring,
            partition=partition,
            status=status,
            lower_bound=lower,
            nodes=budget.spent,
            wall_time=time.monotonic() - started,
            frustrated_edges=partition_frustrated_edges(graph, partition),
            colours=k,
            trail=trail,
        )

    def _seed(self, graph: SignedGraph, colours: int) -> Tuple[int, ...]:
        """One class for everybody, or the two-colour local search when cheaper."""
        single = tuple([0] * graph.n)
        if colours < 2 or not self._config.use_local_search_seed:
            return single
        colouring, count = local_search_upper_bound(graph)
        two = tuple(int(bit) for bit in colouring.bits)
        # relabel so the first node sits in class 0
        if two and two[0] == 1:
            two = tuple(1 - c for c in two)
        return two if count < graph.m_neg else single

    def _search(
        self,
        graph: SignedGraph,
        colours: int,
        order: List[int],
        incumbent: SharedIncumbent,
        budget: SearchBudget,
        trail: List[BoundEvent],
    ) -> Tuple[float, bool]:
        gap = self._config.gap
        state = _KState(graph, colours)
        n = len(order)
        low = math.inf

        def children(depth: int) -> List[int]:
            node = order[depth]
            options = range(state.allowed())
            return sorted(options, key=lambda c: (state.cost[node][c], c))

        frames = [[0, 0, children(0), 0]]
        while frames:
            frame = frames[-1]
            level, _, options, cursor = frame
            if cursor == len(options):
                frames.pop()
                if frames:
                    state.undo(order[level - 1])
                continue

            if not budget.spend():
                open_bounds = [f[1] for f in frames if f[3] < len(f[2])]
                return min([low] + open_bounds), True

            frame[3] += 1
            node = order[level]
            state.assign(node, options[cursor])

            if level + 1 == n:
                if incumbent.offer(state.fixed, tuple(state.colour)):
                    logger.debug(f"k-colour incumbent improved to {state.fixed}")
                    trail.append(BoundEvent(nodes=budget.spent, upper=state.fixed, lower=0))
                state.undo(node)
                continue

            bound = state.bound(order[level + 1:])
            if bound >= incumbent.value - gap:
                if bound < incumbent.value:
                    low = min(low, bound)
                state.undo(node)
                continue

            frames.append([level + 1, bound, children(level + 1), 0])

        return low, False


def solve_kcolour(graph: SignedGraph, k: int, config: Optional[SolverConfig] = None) -> FrustrationResult:
    """Minimum number of frustrated edges over partitions into at most k classes."""
    return KColourSolver(config).solve(graph, k)
