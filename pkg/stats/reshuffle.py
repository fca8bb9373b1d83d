"""
Sign-reshuffling significance test: Z-scores of a statistic against
replicas with the same topology and the same number of negative edges.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from core.balance import reshuffle
from core.entities import SignedGraph
from core.exceptions import ConfigurationError, GraphValidationError, MeasureRefusedError
from solver.models import SolverConfig

from .statistics import Evaluation, StatisticEvaluator

logger = logging.getLogger(__name__)


class ReshuffleSummary(BaseModel):
    """Observed statistic against its reshuffled distribution."""
    statistic: str
    observed: float
    observed_status: str = "computed"
    trials: int
    completed: int
    mean: Optional[float] = None
    sd: Optional[float] = None
    z: Optional[float] = None
    seed: int
    skipped: int = 0
    status_counts: Dict[str, int] = Field(default_factory=dict)
    values: List[float] = Field(default_factory=list, exclude=True)

    @property
    def z_defined(self) -> bool:
        return self.z is not None

    def text_lines(self) -> List[str]:
        def show(value: Optional[float]) -> str:
            return "undefined" if value is None else f"{value:.12g}"

        lines = [
            f"statistic = {self.statistic}",
            f"observed = {show(self.observed)}",
            f"trials = {self.trials}",
            f"completed = {self.completed}",
            f"skipped = {self.skipped}",
            f"mean = {show(self.mean)}",
            f"sd = {show(self.sd)}",
            f"z = {show(self.z)}",
            f"seed = {self.seed}",
        ]
        lines += [f"replicas[{status}] = {count}" for status, count in sorted(self.status_counts.items())]
        return lines


def replica_seeds(seed: int, trials: int) -> List[int]:
    """Independent sub-seeds derived from one master seed."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(child.generate_state(1)[0]) for child in children]


def reshuffle_experiment(
    graph: SignedGraph,
    statistic: str,
    trials: int,
    seed: int = 0,
    solver_config: Optional[SolverConfig] = None,
    lower_bound_stand_in: bool = False,
    workers: int = 1,
    **measure_options,
) -> ReshuffleSummary:
    """
    Statistic on G and on `trials` reshuffles of its signs. Sample SD uses the
    trials - 1 divisor; Z is undefined when the SD vanishes. Refused replicas
    are skipped and counted.
    """
    if trials < 2:
        raise ConfigurationError("a reshuffle experiment needs at least 2 trials")
    if workers < 1:
        raise ConfigurationError("worker count must be at least 1")

    evaluate = StatisticEvaluator(
        statistic,
        solver_config=solver_config,
        lower_bound_stand_in=lower_bound_stand_in,
        **measure_options,
    )
    observed = evaluate(graph)
    if observed.value is None:
        raise MeasureRefusedError(f"{statistic} cannot be computed on the input graph")

    def replica(sub_seed: int) -> Evaluation:
        shuffled = reshuffle(graph, sub_seed)
        if shuffled.fingerprint != graph.fingerprint:
            raise GraphValidationError("reshuffle changed (n, m, m-)")
        return evaluate(shuffled)

    seeds = replica_seeds(seed, trials)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="replica") as pool:
            outcomes = list(pool.map(replica, seeds))
    else:
        outcomes = [replica(sub_seed) for sub_seed in seeds]

    status_counts: Dict[str, int] = {}
    values: List[float] = []
    for outcome in outcomes:
        status_counts[outcome.status] = status_counts.get(outcome.status, 0) + 1
        if outcome.value is not None:
            values.append(float(outcome.value))

    mean = sd = z = None
    if values:
        mean = float(np.mean(values))
    if len(values) >= 2:
        sd = float(np.std(values, ddof=1))
        if sd > 0:
            z = (float(observed.value) - mean) / sd

    summary = ReshuffleSummary(
        statistic=evaluate.label,
        observed=float(observed.value),
        observed_status=observed.status,
        trials=trials,
        completed=len(values),
        mean=mean,
        sd=sd,
        z=z,
        seed=seed,
        skipped=trials - len(values),
        status_counts=status_counts,
        values=values,
    )
    logger.info(
        f"Reshuffle {summary.statistic}: observed {summary.observed:.6g}, "
        f"mean {mean}, sd {sd}, z {z} ({summary.completed}/{trials} replicas)"
    )
    return summary
