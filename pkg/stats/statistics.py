"""
Named graph statistics usable in significance tests.
Following Strategy pattern - each name maps to one evaluation routine.
"""
import logging
import re
from typing import Callable, Dict, List, NamedTuple, Optional

from core.entities import SignedGraph
from core.exceptions import ConfigurationError, MeasureRefusedError
from measures.cycles import DEFAULT_CYCLE_LIMIT, Weighting, cycle_census, degree_of_balance, triangle_index
from measures.frustration import frustration_measures, trivial_measures
from measures.spectral import EigenOptions, algebraic_conflict, spectral_bipartivity, walk_balance
from solver.branch_and_bound import solve
from solver.models import OPTIMAL, SolverConfig

logger = logging.getLogger(__name__)

CYCLE_STATISTICS = ("D", "C_inv_k", "C_inv_fact")
FRUSTRATION_STATISTICS = ("L", "F", "F_prime", "X")
SINGLE_K = re.compile(r"^D_(\d+)$")


class Evaluation(NamedTuple):
    """Statistic value (None when refused) and the replica status label."""
    value: Optional[float]
    status: str


class StatisticEvaluator:
    """Evaluates one named statistic on any graph with fixed options."""

    def __init__(
        self,
        name: str,
        solver_config: Optional[SolverConfig] = None,
        lower_bound_stand_in: bool = False,
        cycle_cap: Optional[int] = None,
        cycle_limit: int = DEFAULT_CYCLE_LIMIT,
        eigen: Optional[EigenOptions] = None,
    ):
        self._name = name
        self._solver_config = solver_config or SolverConfig()
        self._stand_in = lower_bound_stand_in
        self._cycle_cap = cycle_cap
        self._cycle_limit = cycle_limit
        self._eigen = eigen or EigenOptions()
        self._routine = self._resolve(name)

    @staticmethod
    def names() -> List[str]:
        return list(FRUSTRATION_STATISTICS) + list(CYCLE_STATISTICS) + [
            "D_<k>", "T", "K", "W", "lambda", "A", "Y", "Z", "beta", "b_s",
        ]

    @property
    def label(self) -> str:
        """Name carried by the summary; stand-in bounds are marked as such."""
        if self._stand_in and self._name in FRUSTRATION_STATISTICS:
            return f"{self._name}(lower-bound)"
        return self._name

    def __call__(self, graph: SignedGraph) -> Evaluation:
        try:
            return self._routine(graph)
        except MeasureRefusedError as e:
            logger.debug(f"{self._name} refused: {e.reason}")
            return Evaluation(None, "refused")

    def _resolve(self, name: str) -> Callable[[SignedGraph], Evaluation]:
        if name in FRUSTRATION_STATISTICS:
            return self._frustration
        single = SINGLE_K.match(name)
        if single and int(single.group(1)) < 3:
            raise ConfigurationError(f"{name}: cycle length must be at least 3")
        if name in CYCLE_STATISTICS or single:
            return self._cycles
        table: Dict[str, Callable[[SignedGraph], Evaluation]] = {
            "T": lambda g: Evaluation(triangle_index(g), "computed"),
            "K": lambda g: Evaluation(walk_balance(g, self._eigen).K, "computed"),
            "W": lambda g: Evaluation(walk_balance(g, self._eigen).W, "computed"),
            "lambda": lambda g: Evaluation(algebraic_conflict(g, self._eigen).lam, "computed"),
            "A": lambda g: Evaluation(algebraic_conflict(g, self._eigen).A, "computed"),
            "Y": lambda g: Evaluation(trivial_measures(g).Y, "computed"),
            "Z": lambda g: Evaluation(trivial_measures(g).Z, "computed"),
            "beta": lambda g: Evaluation(spectral_bipartivity(g, self._eigen).beta, "computed"),
            "b_s": lambda g: Evaluation(spectral_bipartivity(g, self._eigen).b_s, "computed"),
        }
        if name not in table:
            raise ConfigurationError(f"unknown statistic {name!r}; choose from {', '.join(self.names())}")
        return table[name]

    def _frustration(self, graph: SignedGraph) -> Evaluation:
        result = solve(graph, self._solver_config)
        L = result.lower_bound if self._stand_in else result.L
        if result.status != OPTIMAL and not self._stand_in:
            logger.debug(f"Replica solve ended {result.status}; using the incumbent")
        if self._name == "L":
            return Evaluation(float(L), result.status)
        measures = frustration_measures(L, graph)
        value = getattr(measures, self._name)
        if value is None:
            raise MeasureRefusedError(measures.skipped.get(self._name, "undefined"))
        return Evaluation(value, result.status)

    def _cycles(self, graph: SignedGraph) -> Evaluation:
        match = SINGLE_K.match(self._name)
        cap = self._cycle_cap or max(graph.n, 3)
        if match:
            k = int(match.group(1))
            cap = k
            weighting = Weighting.single(k)
        else:
            weighting = Weighting({"D": "uniform", "C_inv_k": "inverse", "C_inv_fact": "inverse-factorial"}[self._name])
        census = cycle_census(graph, cap=cap, limit=self._cycle_limit)
        return Evaluation(degree_of_balance(census, weighting), "computed")
