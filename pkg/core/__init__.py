"""
Core package - signed-graph entities, balance algebra, configuration and orchestration.
"""
__version__ = "1.0.0"

from .config import Settings, load_settings, setup_logging
from .entities import Colouring, DegreeProfile, Edge, Piece, SignedGraph
from .exceptions import (
    BalanceError,
    ConfigurationError,
    ConvergenceError,
    GraphValidationError,
    InfeasibleSpecError,
    MeasureRefusedError,
    ParsingError,
    SolverError,
)
from .parsers import EdgeListParser, dump_graph, load_graph

__all__ = [
    "__version__",
    "Settings",
    "load_settings",
    "setup_logging",
    "Colouring",
    "DegreeProfile",
    "Edge",
    "Piece",
    "SignedGraph",
    "BalanceError",
    "ConfigurationError",
    "ConvergenceError",
    "GraphValidationError",
    "InfeasibleSpecError",
    "MeasureRefusedError",
    "ParsingError",
    "SolverError",
    "EdgeListParser",
    "dump_graph",
    "load_graph",
]
