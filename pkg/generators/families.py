"""
Concrete signed-graph families.
"""
import math
from typing import List, Tuple

import networkx as nx
import numpy as np

from core.entities import Pair
from core.exceptions import InfeasibleSpecError

from .base import BaseFamily, FamilySpec, integer_pairs, networkx_seed


class GnmFamily(BaseFamily):
    """Uniform graph with exactly m edges."""

    required = ("n", "m")

    @property
    def name(self) -> str:
        return "gnm"

    def validate(self, spec: FamilySpec) -> None:
        super().validate(spec)
        if not 0 <= spec.m <= spec.n * (spec.n - 1) // 2:
            raise InfeasibleSpecError(f"gnm needs 0 <= m <= n(n-1)/2, got m={spec.m} for n={spec.n}")

    def label(self, spec: FamilySpec) -> str:
        return f"gnm(n={spec.n},m={spec.m},seed={spec.seed})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        graph = nx.gnm_random_graph(spec.n, spec.m, seed=networkx_seed(rng))
        return spec.n, list(graph.edges())


class GnpFamily(BaseFamily):
    """Every pair independently with probability p."""

    required = ("n", "p")

    @property
    def name(self) -> str:
        return "gnp"

    def validate(self, spec: FamilySpec) -> None:
        super().validate(spec)
        if not 0.0 <= spec.p <= 1.0:
            raise InfeasibleSpecError(f"gnp needs 0 <= p <= 1, got {spec.p}")

    def label(self, spec: FamilySpec) -> str:
        return f"gnp(n={spec.n},p={spec.p:g},seed={spec.seed})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        graph = nx.gnp_random_graph(spec.n, spec.p, seed=networkx_seed(rng))
        return spec.n, list(graph.edges())


class BarabasiAlbertFamily(BaseFamily):
    """Preferential attachment grown from a star on attachment + 1 nodes."""

    required = ("n", "attachment")

    @property
    def name(self) -> str:
        return "barabasi-albert"

    def validate(self, spec: FamilySpec) -> None:
        super().validate(spec)
        if not 1 <= spec.attachment < spec.n:
            raise InfeasibleSpecError(
                f"barabasi-albert needs 1 <= attachment < n, got {spec.attachment} for n={spec.n}"
            )

    def label(self, spec: FamilySpec) -> str:
        return f"barabasi-albert(n={spec.n},a={spec.attachment},seed={spec.seed})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        graph = nx.barabasi_albert_graph(
            spec.n,
            spec.attachment,
            seed=networkx_seed(rng),
            initial_graph=nx.star_graph(spec.attachment),
        )
        return spec.n, list(graph.edges())


class RandomRegularFamily(BaseFamily):
    """Uniform simple d-regular graph drawn by networkx."""

    required = ("n", "degree")

    @property
    def name(self) -> str:
        return "random-regular"

    def validate(self, spec: FamilySpec) -> None:
        super().validate(spec)
        if not 0 <= spec.degree < max(spec.n, 1):
            raise InfeasibleSpecError(f"random-regular needs 0 <= d < n, got d={spec.degree} for n={spec.n}")
        if (spec.n * spec.degree) % 2:
            raise InfeasibleSpecError(f"n*d must be even, got n={spec.n}, d={spec.degree}")

    def label(self, spec: FamilySpec) -> str:
        return f"random-regular(n={spec.n},d={spec.degree},seed={spec.seed})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        try:
            graph = nx.random_regular_graph(spec.degree, spec.n, seed=networkx_seed(rng))
        except nx.NetworkXError as e:
            raise InfeasibleSpecError(f"no simple {spec.degree}-regular graph on {spec.n} nodes: {e}")
        return spec.n, list(graph.edges())


class CompleteSingleNegativeFamily(BaseFamily):
    """K_n with the single negative edge (0, 1)."""

    required = ("n",)

    @property
    def name(self) -> str:
        return "complete-single-negative"

    def validate(self, spec: FamilySpec) -> None:
        super().validate(spec)
        if spec.n < 2:
            raise InfeasibleSpecError("complete-single-negative needs n >= 2")

    def label(self, spec: FamilySpec) -> str:
        return f"complete-single-negative(n={spec.n})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        return integer_pairs(nx.complete_graph(spec.n))

    def signs(self, pairs: List[Pair], spec: FamilySpec, rng: np.random.Generator) -> List[int]:
        return [-1 if pair == (0, 1) else 1 for pair in pairs]


class CompleteAllNegativeFamily(BaseFamily):
    """K_n with every edge negative."""

    required = ("n",)

    @property
    def name(self) -> str:
        return "complete-all-negative"

    def label(self, spec: FamilySpec) -> str:
        return f"complete-all-negative(n={spec.n})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        return integer_pairs(nx.complete_graph(spec.n))

    def signs(self, pairs: List[Pair], spec: FamilySpec, rng: np.random.Generator) -> List[int]:
        return [-1] * len(pairs)


class IsingLatticeFamily(BaseFamily):
    """Open-boundary grid with nearest-neighbour edges."""

    required = ("dimensions",)

    @property
    def name(self) -> str:
        return "ising-lattice"

    def validate(self, spec: FamilySpec) -> None:
        super().validate(spec)
        if any(size < 1 for size in spec.dimensions):
            raise InfeasibleSpecError(f"lattice sides must be positive, got {spec.dimensions}")

    def label(self, spec: FamilySpec) -> str:
        sides = "x".join(str(size) for size in spec.dimensions)
        return f"ising-lattice({sides},seed={spec.seed})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        return integer_pairs(nx.grid_graph(dim=list(spec.dimensions)))


class HypercubeFamily(BaseFamily):
    """The d-dimensional cube on 2^d nodes."""

    required = ("dimension",)

    @property
    def name(self) -> str:
        return "hypercube"

    def validate(self, spec: FamilySpec) -> None:
        super().validate(spec)
        if spec.dimension < 0:
            raise InfeasibleSpecError("hypercube dimension must be non-negative")

    def label(self, spec: FamilySpec) -> str:
        return f"hypercube(d={spec.dimension},seed={spec.seed})"

    def topology(self, spec: FamilySpec, rng: np.random.Generator) -> Tuple[int, List[Pair]]:
        if spec.dimension == 0:
            return 1, []
        return integer_pairs(nx.hypercube_graph(spec.dimension))


def lattice_edge_count(dimensions: List[int]) -> int:
    """sum over axes of prod(dims) * (d_a - 1) / d_a."""
    total = math.prod(dimensions)
    return sum(total // size * (size - 1) for size in dimensions)
