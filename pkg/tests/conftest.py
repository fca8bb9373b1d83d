import os
from pathlib import Path

import pytest

from core.config import Settings
from core.entities import SignedGraph


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def kbalance_example() -> SignedGraph:
    """k = 1, 2, 3 colours leave 4, 1 and 0 frustrated edges."""
    return SignedGraph.from_edges(4, [(0, 1, 1), (0, 2, -1), (1, 2, -1), (2, 3, -1), (0, 3, -1)])


@pytest.fixture
def single_inconsistency() -> SignedGraph:
    """Two negative triangles sharing the edge (1, 2), so L = 1."""
    return SignedGraph.from_edges(4, [(0, 1, 1), (0, 2, -1), (1, 2, 1), (2, 3, 1), (1, 3, -1)])


@pytest.fixture
def data_file():
    """Resolve a published dataset under BALANCE_DATA_DIR or skip the test."""
    root = os.environ.get("BALANCE_DATA_DIR")

    def resolve(name: str) -> Path:
        if not root or not (Path(root) / name).exists():
            pytest.skip(f"{name} not found; set BALANCE_DATA_DIR")
        return Path(root) / name

    return resolve
