"""
Random and structured signed-graph families.
"""
from .base import BaseFamily, FamilySpec
from .factory import FamilyFactory, generate
from .families import lattice_edge_count

__all__ = ["BaseFamily", "FamilyFactory", "FamilySpec", "generate", "lattice_edge_count"]
