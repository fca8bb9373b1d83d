"""
Factory for signed-graph families.
Following Factory pattern - family classes are looked up by tag.
"""
from typing import Dict, List, Type

from core.entities import SignedGraph
from core.exceptions import InfeasibleSpecError

from .base import BaseFamily, FamilySpec
from .families import (
    BarabasiAlbertFamily,
    CompleteAllNegativeFamily,
    CompleteSingleNegativeFamily,
    GnmFamily,
    GnpFamily,
    HypercubeFamily,
    IsingLatticeFamily,
    RandomRegularFamily,
)


class FamilyFactory:
    """Creates the family object behind a family tag."""

    _FAMILIES: Dict[str, Type[BaseFamily]] = {
        "gnm": GnmFamily,
        "gnp": GnpFamily,
        "barabasi-albert": BarabasiAlbertFamily,
        "random-regular": RandomRegularFamily,
        "complete-single-negative": CompleteSingleNegativeFamily,
        "complete-all-negative": CompleteAllNegativeFamily,
        "ising-lattice": IsingLatticeFamily,
        "hypercube": HypercubeFamily,
    }

    @classmethod
    def names(cls) -> List[str]:
        return list(cls._FAMILIES)

    @classmethod
    def create(cls, family: str) -> BaseFamily:
        try:
            return cls._FAMILIES[family.lower()]()
        except KeyError:
            raise InfeasibleSpecError(
                f"unknown family {family!r}; choose from {', '.join(cls._FAMILIES)}"
            )


def generate(spec: FamilySpec) -> SignedGraph:
    """Draw one signed graph from the family named by the spec."""
    return FamilyFactory.create(spec.family).build(spec)
