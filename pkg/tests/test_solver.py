import statistics

import numpy as np
import pytest

from core.balance import frustration_count, is_balanced, local_search_upper_bound, switch
from core.entities import Colouring, SignedGraph
from solver import (
    BUDGET_TERMINATED,
    OPTIMAL,
    FrustrationSolver,
    SolverConfig,
    solve,
    solve_weighted,
    triangle_packing_lower_bound,
    upper_bounds,
)
from solver.bounds import greedy_packing, packing_by_depth, triangles, unbalanced_triangles

from .oracles import (
    brute_force_frustration,
    brute_force_weighted,
    complete_all_negative,
    complete_single_negative,
    random_graph,
    random_suite,
)

TOGGLES = (
    "use_preprocessing",
    "use_colour_fixing",
    "use_degree_branching",
    "use_triangle_lower_bound",
    "use_local_search_seed",
    "use_neighbour_bound",
)


def _all_off() -> SolverConfig:
    return SolverConfig(**{toggle: False for toggle in TOGGLES})


class TestBounds:
    def test_triangles_are_lexicographic(self):
        k4 = SignedGraph.from_edges(4, [(0, 1, 1), (0, 2, 1), (0, 3, -1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])
        assert triangles(k4) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
        assert unbalanced_triangles(k4) == [(0, 1, 3), (0, 2, 3)]

    def test_greedy_packing_skips_shared_edges(self):
        assert greedy_packing([(0, 1, 2), (0, 1, 3), (2, 3, 4)]) == 2

    def test_packing_table_shrinks_with_depth(self):
        graph = complete_all_negative(6)
        table = packing_by_depth(graph, list(range(6)))
        assert table[0] == triangle_packing_lower_bound(graph)
        assert all(a >= b for a, b in zip(table, table[1:]))

    def test_upper_bounds(self):
        bounds = upper_bounds(complete_all_negative(5))
        assert bounds == {"negative_edges": 10, "half_edges": 5, "circuit_rank": 6, "dense": 4}


class TestExactness:
    def test_matches_brute_force(self):
        for graph in random_suite(seed=61, count=200, max_n=12):
            result = solve(graph)
            assert result.status == OPTIMAL
            assert result.L == brute_force_frustration(graph)

    @pytest.mark.parametrize("n", range(3, 21))
    def test_single_negative_complete(self, n):
        assert solve(complete_single_negative(n)).L == 1

    @pytest.mark.parametrize("n", range(3, 19))
    def test_all_negative_complete(self, n):
        expected = (n * n - 2 * n) // 4 if n % 2 == 0 else (n * n - 2 * n + 1) // 4
        assert solve(complete_all_negative(n)).L == expected

    def test_nine_node_all_negative(self):
        assert solve(complete_all_negative(9)).L == 16

    def test_empty_and_trivial_graphs(self):
        assert solve(SignedGraph(0)).L == 0
        result = solve(SignedGraph(3))
        assert result.L == 0
        assert result.status == OPTIMAL
        assert len(result.colouring) == 3


class TestCertificate:
    def test_bound_sandwich(self):
        for graph in random_suite(seed=67, count=100, max_n=11):
            result = solve(graph)
            _, local = local_search_upper_bound(graph)
            bounds = upper_bounds(graph)
            assert triangle_packing_lower_bound(graph) <= result.lower_bound <= result.L
            assert result.L <= local <= graph.m_neg
            assert result.L <= min(bounds["half_edges"], bounds["circuit_rank"], bounds["dense"])

    def test_deleting_frustrated_edges_balances(self):
        for graph in random_suite(seed=71, count=100, max_n=11):
            result = solve(graph)
            assert frustration_count(graph, result.colouring) == result.L
            assert len(result.frustrated_edges) == result.L
            assert is_balanced(graph.without_edges(result.frustrated_edges)).balanced

    def test_switching_preserves_the_index(self):
        rng = np.random.default_rng(73)
        for graph in random_suite(seed=73, count=50, max_n=10):
            colouring = Colouring.from_bits(rng.integers(0, 2, graph.n))
            assert solve(switch(graph, colouring)).L == solve(graph).L

    def test_trail_is_monotone(self):
        result = solve(complete_all_negative(10))
        uppers = [event.upper for event in result.trail]
        lowers = [event.lower for event in result.trail]
        assert uppers == sorted(uppers, reverse=True)
        assert lowers == sorted(lowers)
        assert uppers[-1] == result.L


class TestSpeedUps:
    @pytest.mark.parametrize("toggle", TOGGLES)
    def test_each_toggle_preserves_the_index(self, toggle):
        config = SolverConfig(**{toggle: False})
        for graph in random_suite(seed=79, count=40, max_n=10):
            assert FrustrationSolver(config).solve(graph).L == brute_force_frustration(graph)

    def test_all_toggles_off_is_still_exact(self):
        for graph in random_suite(seed=83, count=40, max_n=9):
            assert FrustrationSolver(_all_off()).solve(graph).L == brute_force_frustration(graph)

    def test_speed_ups_do_not_increase_median_nodes(self):
        fast, slow = [], []
        for graph in random_suite(seed=89, count=40, max_n=10, min_n=6):
            fast.append(solve(graph).nodes)
            slow.append(FrustrationSolver(_all_off()).solve(graph).nodes)
        assert statistics.median(fast) <= statistics.median(slow)


class TestLimits:
    def test_node_budget_terminates(self):
        graph = complete_all_negative(12)
        result = solve(graph, SolverConfig(node_budget=5))
        assert result.status == BUDGET_TERMINATED
        assert result.lower_bound <= 30 <= result.L
        assert frustration_count(graph, result.colouring) == result.L

    def test_gap_tolerance(self):
        graph = complete_all_negative(12)
        result = solve(graph, SolverConfig(gap=3))
        assert result.L - result.lower_bound <= 3
        assert result.L <= 30 + 3

    def test_parallel_workers_agree(self):
        config = SolverConfig(workers=4)
        for graph in random_suite(seed=97, count=30, max_n=11, min_n=5):
            assert solve(graph, config).L == brute_force_frustration(graph)

    @pytest.mark.parametrize("field, value", [("gap", -1), ("workers", 0), ("time_limit", 0)])
    def test_invalid_config(self, field, value):
        with pytest.raises(ValueError):
            SolverConfig(**{field: value})


class TestWeighted:
    def test_matches_brute_force(self):
        rng = np.random.default_rng(101)
        for _ in range(60):
            graph = random_graph(rng, int(rng.integers(2, 9)), 0.6, 0.5, weighted=True)
            result = solve_weighted(graph)
            assert result.status == OPTIMAL
            assert result.L == pytest.approx(brute_force_weighted(graph), abs=1e-9)

    def test_unit_weights_reduce_to_the_index(self):
        for graph in random_suite(seed=103, count=30, max_n=9):
            assert solve_weighted(graph).L == pytest.approx(solve(graph).L)

    def test_two_nodes(self):
        graph = SignedGraph.from_edges(2, [(0, 1, 1, 0.5)])
        result = solve_weighted(graph)
        assert result.L == pytest.approx(0.25)
        assert result.weighted
