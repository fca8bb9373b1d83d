"""
Monte-Carlo check of E[D_k] under independent negative signs.
"""
import logging
import math
from typing import Tuple

import numpy as np

from core.entities import SignedGraph
from core.exceptions import ConfigurationError, MeasureRefusedError
from measures.cycles import Weighting, cycle_census, degree_of_balance

logger = logging.getLogger(__name__)

MIN_TRIALS = 100


def monte_carlo_expected_dk(
    graph: SignedGraph,
    q: float,
    k: int,
    trials: int,
    seed: int = 0,
) -> Tuple[float, float]:
    """
    Mean and standard error of D_k over `trials` sign draws, each edge
    negative with probability q. Compare with (1 + (1 - 2q)^k) / 2.
    """
    if not 0.0 <= q <= 1.0:
        raise ConfigurationError(f"probability must lie in [0, 1], got {q}")
    if k < 3:
        raise ConfigurationError("cycle length must be at least 3")
    if trials < MIN_TRIALS:
        raise ConfigurationError(f"at least {MIN_TRIALS} trials are required")
    if cycle_census(graph, cap=k).total(k) == 0:
        raise MeasureRefusedError(f"graph has no cycle of length {k}")

    rng = np.random.default_rng(seed)
    weighting = Weighting.single(k)
    samples = np.empty(trials)
    for trial in range(trials):
        signs = np.where(rng.random(graph.m) < q, -1, 1)
        draw = graph.with_signs(signs.tolist())
        samples[trial] = degree_of_balance(cycle_census(draw, cap=k), weighting)

    mean = float(samples.mean())
    se = float(samples.std(ddof=1) / math.sqrt(trials))
    logger.info(f"Monte-Carlo D_{k} at q={q:g}: {mean:.6f} +/- {se:.6f} over {trials} draws")
    return mean, se
