import itertools

import networkx as nx
import numpy as np
import pytest

from core.balance import (
    degree_profile,
    edge_cost,
    frustrated_edges,
    frustration_count,
    is_balanced,
    is_frustrated,
    local_search_upper_bound,
    reshuffle,
    switch,
    weighted_frustration,
)
from core.entities import Colouring, SignedGraph

from .oracles import random_suite


def _is_negative_cycle(graph: SignedGraph, cycle) -> bool:
    product = 1
    for u, v in zip(cycle, cycle[1:] + cycle[:1]):
        sign = graph.sign_of(u, v)
        assert sign != 0, f"{u}-{v} is not an edge"
        product *= sign
    return product < 0


class TestFrustration:
    @pytest.mark.parametrize(
        "sign, cu, cv, expected",
        [(1, False, False, False), (1, False, True, True), (-1, True, True, True), (-1, True, False, False)],
    )
    def test_frustration_rule(self, sign, cu, cv, expected):
        assert is_frustrated(sign, cu, cv) is expected

    def test_count_matches_listed_edges(self, single_inconsistency):
        colouring = Colouring.from_bits([0, 0, 1, 1])
        assert frustrated_edges(single_inconsistency, colouring) == [(1, 2)]
        assert frustration_count(single_inconsistency, colouring) == 1

    def test_weighted_count_reduces_to_unweighted(self):
        for graph in random_suite(seed=3, count=20, max_n=7):
            colouring = Colouring.from_bits(np.arange(graph.n) % 2)
            assert weighted_frustration(graph, colouring) == pytest.approx(frustration_count(graph, colouring))

    def test_edge_cost(self):
        assert edge_cost(0.5, True) == pytest.approx(0.25)
        assert edge_cost(0.5, False) == pytest.approx(0.75)
        assert edge_cost(-1.0, True) == pytest.approx(1.0)

    def test_complement_leaves_the_count_unchanged(self):
        rng = np.random.default_rng(11)
        for graph in random_suite(seed=11, count=40, max_n=8):
            colouring = Colouring.from_bits(rng.integers(0, 2, graph.n))
            assert frustration_count(graph, colouring.complement()) == frustration_count(graph, colouring)
            assert frustrated_edges(graph, colouring.complement()) == frustrated_edges(graph, colouring)


class TestSwitching:
    def test_switching_shifts_the_colouring(self):
        for graph in random_suite(seed=5, count=30, max_n=7):
            rng = np.random.default_rng(graph.m)
            x = Colouring.from_bits(rng.integers(0, 2, graph.n))
            y = Colouring.from_bits(rng.integers(0, 2, graph.n))
            shifted = Colouring(tuple(a != b for a, b in zip(x.bits, y.bits)))
            assert frustration_count(switch(graph, x), y) == frustration_count(graph, shifted)

    def test_switching_preserves_every_cycle_sign(self):
        rng = np.random.default_rng(13)
        for graph in random_suite(seed=13, count=40, max_n=8, min_n=3):
            switched = switch(graph, Colouring.from_bits(rng.integers(0, 2, graph.n)))
            for cycle in nx.cycle_basis(graph.to_networkx()):
                assert _is_negative_cycle(switched, cycle) == _is_negative_cycle(graph, cycle)
            for cycle in itertools.combinations(range(graph.n), 3):
                if all(graph.sign_of(u, v) for u, v in itertools.combinations(cycle, 2)):
                    assert _is_negative_cycle(switched, list(cycle)) == _is_negative_cycle(graph, list(cycle))

    def test_switching_twice_is_identity(self, single_inconsistency):
        x = Colouring.from_bits([1, 0, 1, 0])
        assert switch(switch(single_inconsistency, x), x) == single_inconsistency


class TestIsBalanced:
    def test_balanced_graph_gets_a_perfect_bipartition(self):
        graph = SignedGraph.from_edges(5, [(0, 1, 1), (1, 2, -1), (0, 2, -1), (2, 3, 1), (3, 4, -1)])
        balanced, bipartition, witness = is_balanced(graph)
        assert balanced
        assert witness is None
        assert frustration_count(graph, bipartition) == 0

    def test_unbalanced_graph_gets_a_negative_cycle(self, single_inconsistency):
        check = is_balanced(single_inconsistency)
        assert not check.balanced
        assert _is_negative_cycle(single_inconsistency, list(check.witness))

    def test_exhaustive_small_corpus(self):
        pairs = list(itertools.combinations(range(4), 2))
        for mask in range(1, 2 ** len(pairs)):
            chosen = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
            for signs in itertools.product((1, -1), repeat=len(chosen)):
                graph = SignedGraph.from_edges(4, [(u, v, s) for (u, v), s in zip(chosen, signs)])
                check = is_balanced(graph)
                exhaustive = any(
                    frustration_count(graph, Colouring.from_bits(bits)) == 0
                    for bits in itertools.product((0, 1), repeat=4)
                )
                assert check.balanced == exhaustive
                if not check.balanced:
                    assert _is_negative_cycle(graph, list(check.witness))


class TestReshuffle:
    def test_preserves_topology_and_negative_count(self):
        graph = SignedGraph.from_edges(5, [(0, 1, -1), (1, 2, 1), (2, 3, 1), (3, 4, -1), (0, 4, 1)])
        shuffled = reshuffle(graph, seed=11)
        assert shuffled.fingerprint == graph.fingerprint
        assert [e.pair for e in shuffled.edges] == [e.pair for e in graph.edges]

    def test_same_seed_same_signs(self):
        graph = SignedGraph.from_edges(6, [(i, j, -1 if (i + j) % 3 == 0 else 1) for i, j in itertools.combinations(range(6), 2)])
        assert reshuffle(graph, seed=4) == reshuffle(graph, seed=4)


class TestLocalSearch:
    def test_result_is_a_local_optimum(self):
        for graph in random_suite(seed=9, count=40, max_n=9):
            colouring, count = local_search_upper_bound(graph)
            assert count == frustration_count(graph, colouring)
            assert count <= graph.m_neg
            for node in range(graph.n):
                assert frustration_count(graph, colouring.flipped(node)) >= count


def test_degree_profile():
    graph = SignedGraph.from_edges(3, [(0, 1, 1), (0, 2, -1), (1, 2, -1)])
    profile = degree_profile(graph)
    assert profile.positive == (1, 1, 0)
    assert profile.negative == (1, 1, 2)
    assert profile.total == graph.degrees
    assert profile.net == (0, 0, -2)
