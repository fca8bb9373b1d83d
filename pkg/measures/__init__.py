"""
Partial-balance measures for signed graphs.
"""
from .base import MeasureCalculator, MeasureContext, measure_report
from .cycles import CycleCensus, Weighting, cycle_census, degree_of_balance, triangle_index
from .expectations import expected_degree_of_balance, expected_relative_k_balance
from .frustration import frustration_measures, tight_frustration_bound, trivial_measures
from .oracle import family_oracle
from .report import GraphFingerprint, MeasureReport, MeasureValue, Provenance
from .spectral import EigenOptions, algebraic_conflict, spectral_bipartivity, walk_balance

__all__ = [
    "CycleCensus",
    "EigenOptions",
    "GraphFingerprint",
    "MeasureCalculator",
    "MeasureContext",
    "MeasureReport",
    "MeasureValue",
    "Provenance",
    "Weighting",
    "algebraic_conflict",
    "cycle_census",
    "degree_of_balance",
    "expected_degree_of_balance",
    "expected_relative_k_balance",
    "family_oracle",
    "frustration_measures",
    "measure_report",
    "spectral_bipartivity",
    "tight_frustration_bound",
    "triangle_index",
    "trivial_measures",
    "walk_balance",
]
