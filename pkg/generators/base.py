"""
Base class and spec model for signed-graph families.
Following DRY principle - validation, seeding and sign placement are shared.
"""
import logging
import math
from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, Field

from core.entities import Pair, SignedGraph
from core.exceptions import InfeasibleSpecError

logger = logging.getLogger(__name__)


class FamilySpec(BaseModel):
    """Family tag, its parameters and the seed of every random draw."""
    family: str
    n: Optional[int] = None
    m: Optional[int] = None
    p: Optional[float] = None
    attachment: Optional[int] = None
    degree: Optional[int] = None
    dimensions: List[int] = Field(default_factory=list)
    dimension: Optional[int] = None
    negative_fraction: Optional[float] = None
    negative_probability: Optional[float] = None
    seed: int = 0


class BaseFamily(ABC):
    """Template Method: validate, draw the topology, then place the signs."""

    #: parameters the family cannot do without
    required: Tuple[str, ...] = ()

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        """Node count and undirected node pairs."""
        pass

    def validate(self, spec: FamilySpec) -> None:
        missing = [field for field in self.required if getattr(spec, field) in (None, [])]
        if missing:
            raise InfeasibleSpecError(f"{self.name} needs {', '.join(missing)}")
        if spec.n is not None and spec.n < 0:
            raise InfeasibleSpecError("node count must be non-negative")
        for label, value in (("negative fraction", spec.negative_fraction),
                             ("negative probability", spec.negative_probability)):
            if value is not None and not 0.0 <= value <= 1.0:
                raise InfeasibleSpecError(f"{label} must lie in [0, 1], got {value}")
        if spec.negative_fraction is not None and spec.negative_probability is not None:
            raise InfeasibleSpecError("give either a negative fraction or a negative probability")

    def signs(self, pairs: List[Pair], spec: FamilySpec, rng: np.random.Generator) -> List[int]:
        """Exactly floor(fraction * m) negatives, or each negative with probability q."""
        m = len(pairs)
        if spec.negative_probability is not None:
            draws = rng.random(m)
            return [-1 if draw < spec.negative_probability else 1 for draw in draws]

        negatives = math.floor((spec.negative_fraction or 0.0) * m)
        signs = np.ones(m, dtype=int)
        if negatives:
            signs[rng.choice(m, size=negatives, replace=False)] = -1
        return signs.tolist()

    def label(self, spec: FamilySpec) -> str:
        return f"{self.name}(seed={spec.seed})"

    def build(self, spec: FamilySpec) -> SignedGraph:
        self.validate(spec)
        rng = np.random.default_rng(spec.seed)
        n, pairs = self.topology(spec, rng)
        pairs = sorted((min(u, v), max(u, v)) for u, v in pairs)
        signs = self.signs(pairs, spec, rng)
        graph = SignedGraph.from_edges(
            n,
            [(u, v, sign) for (u, v), sign in zip(pairs, signs)],
            name=self.label(spec),
        )
        logger.info(f"Generated {graph.name}: n={graph.n} m={graph.m} m_neg={graph.m_neg}")
        return graph


def networkx_seed(rng: np.random.Generator) -> int:
    """Integer seed for networkx drawn from the family's generator."""
    return int(rng.integers(2**32))


def integer_pairs(graph: nx.Graph) -> Tuple[int, List[Pair]]:
    """Relabel a networkx graph to 0..n-1 in sorted node order."""
    relabelled = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    return relabelled.number_of_nodes(), [(int(u), int(v)) for u, v in relabelled.edges()]
