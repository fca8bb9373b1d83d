"""
Reshuffle significance tests and Monte-Carlo validation.
"""
from .montecarlo import monte_carlo_expected_dk
from .reshuffle import ReshuffleSummary, replica_seeds, reshuffle_experiment
from .statistics import StatisticEvaluator

__all__ = [
    "ReshuffleSummary",
    "StatisticEvaluator",
    "monte_carlo_expected_dk",
    "replica_seeds",
    "reshuffle_experiment",
]
