"""
Solver configuration and result models.
Following Clean Architecture - these models cross the CLI/report boundary.
"""
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_serializer, field_validator

from core.config import Settings
from core.entities import Colouring, Pair

OPTIMAL = "optimal"
GAP_TERMINATED = "gap-terminated"
BUDGET_TERMINATED = "budget-terminated"
STATUSES = (OPTIMAL, GAP_TERMINATED, BUDGET_TERMINATED)

Number = Union[int, float]


class SolverConfig(BaseModel):
    """Limits and speed-up toggles of the branch and bound."""
    time_limit: Optional[float] = None
    gap: float = 0
    node_budget: Optional[int] = None
    workers: int = 1

    use_preprocessing: bool = True
    use_colour_fixing: bool = True
    use_degree_branching: bool = True
    use_triangle_lower_bound: bool = True
    use_local_search_seed: bool = True
    use_neighbour_bound: bool = True

    @field_validator("gap")
    @classmethod
    def _gap_non_negative(cls, value: float) -> float:
        if value < 0:
            raise ValueError("gap tolerance must be non-negative")
        return value

    @field_validator("workers")
    @classmethod
    def _at_least_one_worker(cls, value: int) -> int:
        if value < 1:
            raise ValueError("worker count must be at least 1")
        return value

    @field_validator("time_limit")
    @classmethod
    def _positive_time_limit(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and value <= 0:
            raise ValueError("time limit must be positive")
        return value

    @classmethod
    def from_settings(cls, settings: Settings, **toggles) -> "SolverConfig":
        return cls(
            time_limit=settings.time_limit,
            gap=settings.gap,
            node_budget=settings.node_budget,
            workers=settings.workers,
            **toggles,
        )


class BoundEvent(BaseModel):
    """One entry of the bound trail."""
    nodes: int
    upper: Number
    lower: Number


class FrustrationResult(BaseModel):
    """
    Best colouring found, its objective and the proven lower bound.
    For k-colour solves `partition` holds the class of every node and
    `colouring` is only set when at most two classes are used.
    """
    L: Number
    colouring: Optional[Colouring] = None
    partition: Optional[Tuple[int, ...]] = None
    status: str = OPTIMAL
    lower_bound: Number = 0
    nodes: int = 0
    wall_time: float = Field(default=0.0, exclude=True)
    frustrated_edges: List[Pair] = Field(default_factory=list)
    colours: int = 2
    weighted: bool = False
    trail: List[BoundEvent] = Field(default_factory=list)

    @field_validator("status")
    @classmethod
    def _known_status(cls, value: str) -> str:
        if value not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")
        return value

    @field_serializer("colouring")
    def _colouring_as_bits(self, colouring: Optional[Colouring]) -> Optional[str]:
        return colouring.to_string() if colouring is not None else None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    @property
    def gap(self) -> Number:
        return self.L - self.lower_bound

    def text_lines(self) -> List[str]:
        lines = [
            f"L = {self.L}",
            f"status = {self.status}",
            f"lower_bound = {self.lower_bound}",
            f"nodes = {self.nodes}",
            f"wall_time = {self.wall_time:.3f}",
        ]
        if self.colouring is not None:
            lines.append(f"colouring = {self.colouring.to_string()}")
        if self.partition is not None and self.colours != 2:
            lines.append(f"partition = {' '.join(str(c) for c in self.partition)}")
        lines.append(f"frustrated_edges = {len(self.frustrated_edges)}")
        lines += [f"  {u} {v}" for u, v in self.frustrated_edges]
        return lines
