"""
Published signed networks. Each test is skipped unless the file exists
under BALANCE_DATA_DIR.
"""
import pytest

from core.balance import is_balanced
from core.parsers import load_graph
from measures.spectral import spectral_bipartivity
from solver import OPTIMAL, solve
from stats import reshuffle_experiment


def _load(path):
    return load_graph(path.read_text(encoding="utf-8"), name=path.stem)


class TestSmallNetworks:
    @pytest.mark.parametrize(
        "name, fingerprint, expected",
        [
            ("highland_tribes.sg", (16, 58, 29), 7),
            ("monastery.sg", (18, 49, 12), 5),
            ("fraternity.sg", (17, 40, 17), 4),
            ("college.sg", (17, 36, 16), 6),
        ],
    )
    def test_frustration_index(self, data_file, name, fingerprint, expected):
        graph = _load(data_file(name))
        assert graph.fingerprint == fingerprint
        result = solve(graph)
        assert result.status == OPTIMAL
        assert result.L == expected
        assert is_balanced(graph.without_edges(result.frustrated_edges)).balanced

    def test_tribes_reshuffle(self, data_file):
        graph = _load(data_file("highland_tribes.sg"))
        summary = reshuffle_experiment(graph, "L", trials=500, seed=1)
        assert 14.0 <= summary.mean <= 15.3
        assert 1.1 <= summary.sd <= 1.7
        assert -6.5 <= summary.z <= -4.7


class TestFullerene:
    def test_spectral_bipartivity(self, data_file):
        graph = _load(data_file("c180.sg"))
        assert graph.n == 180
        result = spectral_bipartivity(graph)
        assert result.beta == pytest.approx(0.99765, abs=5e-5)
        assert result.b_s == pytest.approx(0.99529, abs=5e-5)


class TestBiologicalNetworks:
    @pytest.mark.parametrize(
        "name, expected",
        [("yeast.sg", 41), ("ecoli.sg", 371), ("egfr.sg", 193), ("macrophage.sg", 332)],
    )
    def test_frustration_index(self, data_file, name, expected):
        result = solve(_load(data_file(name)))
        assert result.status == OPTIMAL
        assert result.L == expected
