import numpy as np
import pytest

from core.entities import Colouring, SignedGraph
from core.exceptions import GraphValidationError


class TestSignedGraph:
    def test_edges_are_canonical_and_sorted(self):
        graph = SignedGraph.from_edges(3, [(2, 1, -1), (1, 0, 1), (0, 2, 1)])
        assert [e.pair for e in graph.edges] == [(0, 1), (0, 2), (1, 2)]
        assert graph.sign_of(2, 1) == -1
        assert graph.sign_of(1, 1) == 0

    def test_fingerprint_and_density(self):
        graph = SignedGraph.from_edges(4, [(0, 1, 1), (1, 2, -1), (2, 3, -1)])
        assert graph.fingerprint == (4, 3, 2)
        assert graph.m_pos == 1
        assert graph.density == pytest.approx(0.5)

    @pytest.mark.parametrize(
        "records",
        [
            [(0, 0, 1)],
            [(0, 1, 1), (1, 0, -1)],
            [(0, 5, 1)],
            [(0, 1, 2)],
        ],
    )
    def test_invalid_edges_rejected(self, records):
        with pytest.raises(GraphValidationError):
            SignedGraph.from_edges(3, records)

    def test_weight_must_agree_with_sign(self):
        with pytest.raises(GraphValidationError):
            SignedGraph.from_edges(2, [(0, 1, 1, -0.5)])

    def test_weighted_flag_inferred(self):
        assert SignedGraph.from_edges(2, [(0, 1, -1, -0.5)]).weighted
        assert not SignedGraph.from_edges(2, [(0, 1, -1, -1.0)]).weighted

    def test_adjacency_and_laplacian(self):
        graph = SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, -1)])
        adjacency = graph.adjacency()
        assert np.array_equal(adjacency, adjacency.T)
        assert adjacency[1, 2] == -1
        assert np.allclose(graph.laplacian().sum(axis=1), [0, 2, 2])

    def test_components_and_giant_component(self):
        graph = SignedGraph.from_edges(6, [(0, 1, 1), (2, 3, -1), (3, 4, 1), (2, 4, 1)])
        assert graph.components() == [[0, 1], [2, 3, 4], [5]]
        giant = graph.giant_component()
        assert giant.fingerprint == (3, 3, 1)
        assert giant.labels == ("2", "3", "4")

    def test_components_follow_smallest_member(self):
        graph = SignedGraph.from_edges(5, [(0, 3, 1), (1, 4, -1)])
        assert graph.components() == [[0, 3], [1, 4], [2]]
        assert not graph.is_connected()
        assert SignedGraph(0).components() == []

    def test_disjoint_union_shifts_nodes(self):
        left = SignedGraph.from_edges(2, [(0, 1, -1)])
        right = SignedGraph.from_edges(3, [(0, 2, 1)])
        union = left.disjoint_union(right)
        assert union.fingerprint == (5, 2, 1)
        assert union.sign_of(2, 4) == 1

    def test_with_signs_requires_one_sign_per_edge(self):
        graph = SignedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
        assert graph.with_signs([-1, 1]).m_neg == 1
        with pytest.raises(GraphValidationError):
            graph.with_signs([1])


class TestColouring:
    def test_bits_and_complement(self):
        colouring = Colouring.from_bits([1, 0, 1])
        assert colouring.to_string() == "101"
        assert colouring.complement().to_string() == "010"
        assert colouring.flipped(1).black() == [0, 1, 2]

    def test_size_is_checked(self):
        graph = SignedGraph.from_edges(3, [(0, 1, 1)])
        with pytest.raises(GraphValidationError):
            Colouring.uniform(2).check(graph)
