"""
Centralized configuration management.
Following Clean Architecture principles - configuration is an infrastructure concern.
"""
import logging
import sys
from dataclasses import dataclass, replace
from typing import Optional

from decouple import config

from .exceptions import ConfigurationError

EIGEN_METHODS = ("jacobi", "lapack")


def _optional_float(value: str) -> Optional[float]:
    return float(value) if value not in ("", None) else None


def _optional_int(value: str) -> Optional[int]:
    return int(value) if value not in ("", None) else None


@dataclass(frozen=True)
class Settings:
    """Application settings - immutable configuration object."""

    # Randomness and parallelism
    seed: int = 0
    workers: int = 1

    # Solver limits
    time_limit: Optional[float] = None
    node_budget: Optional[int] = None
    gap: float = 0.0

    # Measures
    cycle_limit: int = 10_000_000
    eigen_tolerance: float = 1e-10
    eigen_sweeps: int = 100
    eigen_method: str = "jacobi"

    # General settings
    log_level: str = "INFO"

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigurationError("workers must be at least 1")
        if self.gap < 0:
            raise ConfigurationError("gap tolerance must be non-negative")
        if self.eigen_method not in EIGEN_METHODS:
            raise ConfigurationError(
                f"eigen_method must be one of {EIGEN_METHODS}, got {self.eigen_method!r}"
            )

    def override(self, **changes) -> "Settings":
        """Return a copy with the non-None changes applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_settings() -> Settings:
    """Load settings from environment variables."""
    return Settings(
        seed=config("BALANCE_SEED", default=0, cast=int),
        workers=config("BALANCE_WORKERS", default=1, cast=int),
        time_limit=config("BALANCE_TIME_LIMIT", default="", cast=_optional_float),
        node_budget=config("BALANCE_NODE_BUDGET", default="", cast=_optional_int),
        gap=config("BALANCE_GAP", default=0.0, cast=float),
        cycle_limit=config("BALANCE_CYCLE_LIMIT", default=10_000_000, cast=int),
        eigen_tolerance=config("BALANCE_EIGEN_TOLERANCE", default=1e-10, cast=float),
        eigen_sweeps=config("BALANCE_EIGEN_SWEEPS", default=100, cast=int),
        eigen_method=config("BALANCE_EIGEN_METHOD", default="jacobi"),
        log_level=config("LOG_LEVEL", default="INFO"),
    )


LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(threadName)s | %(name)s | %(message)s"


def setup_logging(level: str = "INFO") -> logging.Logger:
    """
    Configure logging on stderr; stdout carries the report. Thread names
    mark solver subtrees and reshuffle replicas.
    """
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        datefmt="%H:%M:%S",
        stream=sys.stderr,
    )

    logging.getLogger("networkx").setLevel(logging.WARNING)

    return logging.getLogger("balance")
