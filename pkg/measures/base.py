"""
Base classes for partial-balance measure families.
Following DRY principle - refusal handling and report assembly live here.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Union

from core.balance import is_balanced
from core.entities import SignedGraph
from core.exceptions import MeasureRefusedError

from .cycles import DEFAULT_CYCLE_LIMIT, CycleCensus, Weighting, cycle_census, degree_of_balance, triangle_index
from .frustration import frustration_measures, trivial_measures
from .report import GraphFingerprint, MeasureReport, MeasureValue
from .spectral import EigenOptions, algebraic_conflict, spectral_bipartivity, walk_balance

logger = logging.getLogger(__name__)

Number = Union[int, float]


@dataclass
class MeasureContext:
    """Inputs shared by every measure family for one graph."""
    graph: SignedGraph
    frustration_index: Optional[Number] = None
    frustration_reason: str = "frustration index not computed"
    cycle_cap: Optional[int] = None
    cycle_limit: int = DEFAULT_CYCLE_LIMIT
    ks: Sequence[int] = (3,)
    eigen: EigenOptions = field(default_factory=EigenOptions)

    @property
    def effective_cap(self) -> int:
        return self.cycle_cap if self.cycle_cap is not None else max(self.graph.n, 3)

    @cached_property
    def census(self) -> CycleCensus:
        return cycle_census(self.graph, cap=self.effective_cap, limit=self.cycle_limit)


class BaseMeasure(ABC):
    """Template Method: subclasses compute values, the base records refusals."""

    @property
    @abstractmethod
    def names(self) -> List[str]:
        """Report keys produced by this family."""
        pass

    @abstractmethod
    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        """Return values keyed by report name (None marks a skip)."""
        pass

    def skip_reasons(self, context: MeasureContext) -> Dict[str, str]:
        return {}

    def evaluate(self, context: MeasureContext) -> Dict[str, MeasureValue]:
        try:
            values = self.compute(context)
        except MeasureRefusedError as e:
            logger.info(f"{type(self).__name__} skipped: {e.reason}")
            return {name: MeasureValue.skipped(e.reason) for name in self.names}

        reasons = self.skip_reasons(context)
        result = {}
        for name in self.names:
            value = values.get(name)
            if value is None:
                result[name] = MeasureValue.skipped(reasons.get(name, "undefined"))
            else:
                result[name] = MeasureValue.computed(value)
        return result


class CycleMeasures(BaseMeasure):
    """D, C with 1/k and 1/k! weights, and D_k for the requested lengths."""

    def __init__(self, ks: Sequence[int] = (3,)):
        self._ks = [k for k in ks if k >= 3]

    @property
    def names(self) -> List[str]:
        return ["D", "C_inv_k", "C_inv_fact"] + [f"D_{k}" for k in self._ks]

    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        census = context.census
        values = {
            "D": degree_of_balance(census, Weighting("uniform")),
            "C_inv_k": degree_of_balance(census, Weighting("inverse")),
            "C_inv_fact": degree_of_balance(census, Weighting("inverse-factorial")),
        }
        for k in self._ks:
            values[f"D_{k}"] = degree_of_balance(census, Weighting.single(k))
        return values


class TriangleMeasure(BaseMeasure):
    """Triangle index from the trace formula."""

    @property
    def names(self) -> List[str]:
        return ["T"]

    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        return {"T": triangle_index(context.graph)}


class WalkMeasure(BaseMeasure):
    """Walk-based balance K and W."""

    @property
    def names(self) -> List[str]:
        return ["K", "W"]

    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        result = walk_balance(context.graph, context.eigen)
        return {"K": result.K, "W": result.W}


class ConflictMeasure(BaseMeasure):
    """Algebraic conflict and its normalisation."""

    @property
    def names(self) -> List[str]:
        return ["lambda", "A"]

    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        result = algebraic_conflict(context.graph, context.eigen)
        return {"lambda": result.lam, "A": result.A}


class FrustrationMeasure(BaseMeasure):
    """L and the normalised frustration measures derived from it."""

    @property
    def names(self) -> List[str]:
        return ["L", "F", "F_prime", "X"]

    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        if context.frustration_index is None:
            raise MeasureRefusedError(context.frustration_reason)
        result = frustration_measures(context.frustration_index, context.graph)
        return {
            "L": context.frustration_index,
            "F": result.F,
            "F_prime": result.F_prime,
            "X": result.X,
        }

    def skip_reasons(self, context: MeasureContext) -> Dict[str, str]:
        return frustration_measures(context.frustration_index, context.graph).skipped


class TrivialMeasure(BaseMeasure):
    """Y is refused on edgeless graphs while Z is always defined."""

    @property
    def names(self) -> List[str]:
        return ["Y", "Z"]

    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        try:
            result = trivial_measures(context.graph)
        except MeasureRefusedError:
            return {"Y": None, "Z": int(is_balanced(context.graph).balanced)}
        return {"Y": result.Y, "Z": result.Z}

    def skip_reasons(self, context: MeasureContext) -> Dict[str, str]:
        return {"Y": "Y needs at least one edge"}


class BipartivityMeasure(BaseMeasure):
    """Spectral bipartivity of the underlying unsigned graph."""

    @property
    def names(self) -> List[str]:
        return ["beta", "b_s"]

    def compute(self, context: MeasureContext) -> Dict[str, Optional[float]]:
        result = spectral_bipartivity(context.graph, context.eigen)
        return {"beta": result.beta, "b_s": result.b_s}


class MeasureCalculator:
    """Runs every measure family against one context and assembles the report."""

    def __init__(self, families: Optional[List[BaseMeasure]] = None, ks: Sequence[int] = (3,)):
        self._families = families or [
            CycleMeasures(ks),
            TriangleMeasure(),
            WalkMeasure(),
            ConflictMeasure(),
            FrustrationMeasure(),
            TrivialMeasure(),
            BipartivityMeasure(),
        ]

    def report(self, context: MeasureContext) -> MeasureReport:
        measures: Dict[str, MeasureValue] = {}
        for family in self._families:
            measures.update(family.evaluate(context))
        return MeasureReport(
            graph=GraphFingerprint.of(context.graph),
            measures=measures,
            cycle_cap=context.effective_cap,
            cycle_limit=context.cycle_limit,
            eigen_tolerance=context.eigen.tolerance,
            eigen_method=context.eigen.method,
        )


def measure_report(graph: SignedGraph, frustration_index: Optional[Number] = None, **options) -> MeasureReport:
    """Compute the full measure report for a graph in one call."""
    ks = options.pop("ks", (3,))
    context = MeasureContext(graph=graph, frustration_index=frustration_index, ks=ks, **options)
    return MeasureCalculator(ks=ks).report(context)
