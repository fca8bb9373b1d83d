"""
Report models shared by the measures and stats modules.
Field names are the stable contract of the structured output.
"""
import math
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from core.entities import SignedGraph

COMPUTED = "computed"
SKIPPED = "skipped"


class MeasureValue(BaseModel):
    """A measure value or the reason it was skipped."""
    value: Optional[float] = None
    status: str = COMPUTED
    reason: Optional[str] = None

    @classmethod
    def computed(cls, value: float) -> "MeasureValue":
        return cls(value=float(value))

    @classmethod
    def skipped(cls, reason: str) -> "MeasureValue":
        return cls(status=SKIPPED, reason=reason)

    def render(self) -> str:
        if self.status == SKIPPED:
            return f"skipped({self.reason})"
        return _format_number(self.value)


class GraphFingerprint(BaseModel):
    name: Optional[str] = None
    n: int
    m: int
    m_neg: int
    density: float

    @classmethod
    def of(cls, graph: SignedGraph) -> "GraphFingerprint":
        return cls(name=graph.name, n=graph.n, m=graph.m, m_neg=graph.m_neg, density=graph.density)


class Provenance(BaseModel):
    """Tool version, seed and every effective option of a run."""
    tool: str = "signed-balance"
    version: str
    command: str
    seed: int
    options: Dict[str, Any] = Field(default_factory=dict)


class MeasureReport(BaseModel):
    """Values of every partial-balance measure plus computation metadata."""
    graph: GraphFingerprint
    measures: Dict[str, MeasureValue] = Field(default_factory=dict)
    cycle_cap: Optional[int] = None
    cycle_limit: Optional[int] = None
    eigen_tolerance: Optional[float] = None
    eigen_method: Optional[str] = None
    notes: List[str] = Field(default_factory=list)

    def value(self, name: str) -> Optional[float]:
        entry = self.measures.get(name)
        return entry.value if entry is not None else None

    def text_lines(self) -> List[str]:
        lines = [
            f"n = {self.graph.n}",
            f"m = {self.graph.m}",
            f"m_neg = {self.graph.m_neg}",
            f"density = {_format_number(self.graph.density)}",
        ]
        lines += [f"{name} = {entry.render()}" for name, entry in self.measures.items()]
        if self.cycle_cap is not None:
            lines.append(f"cycle_cap = {self.cycle_cap}")
        if self.eigen_tolerance is not None:
            lines.append(f"eigen_tolerance = {self.eigen_tolerance:g}")
        return lines


def _format_number(value: Optional[float]) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, float) and math.isfinite(value) and value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.12g}"
