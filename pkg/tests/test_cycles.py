import pytest

from core.entities import SignedGraph
from core.exceptions import MeasureRefusedError
from measures.cycles import CycleCensus, Weighting, cycle_census, degree_of_balance, triangle_index
from measures.oracle import complete_cycle_count, family_oracle

from .oracles import complete_single_negative, direct_triangle_index, random_suite


class TestCycleCensus:
    @classmethod
    def setup_class(cls):
        cls.k4 = SignedGraph.from_edges(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)])

    def test_complete_graph_counts(self):
        census = cycle_census(self.k4)
        assert census.counts == {3: (4, 0), 4: (3, 0)}
        assert census.cycle_count == 7

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_counts_match_closed_form(self, n):
        census = cycle_census(complete_single_negative(n))
        for k in range(3, n + 1):
            assert census.total(k) == complete_cycle_count(n, k)

    def test_signs_are_tracked(self):
        graph = self.k4.with_signs([-1, 1, 1, 1, 1, 1])
        census = cycle_census(graph)
        assert census.unbalanced(3) == 2
        assert census.balanced(3) == 2
        assert census.unbalanced(4) == 2

    def test_cap_limits_the_length(self):
        census = cycle_census(self.k4, cap=3)
        assert census.counts == {3: (4, 0)}
        with pytest.raises(ValueError):
            cycle_census(self.k4, cap=2)

    def test_limit_truncates_and_refuses(self):
        census = cycle_census(self.k4, limit=2)
        assert census.truncated
        with pytest.raises(MeasureRefusedError):
            degree_of_balance(census)


class TestDegreeOfBalance:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_relative_k_balance_of_single_negative_complete(self, n):
        census = cycle_census(complete_single_negative(n))
        for k in range(3, n + 1):
            expected = 1.0 - 2.0 * k / (n * (n - 1))
            assert degree_of_balance(census, Weighting.single(k)) == pytest.approx(expected, abs=1e-9)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_weighted_forms_match_closed_form(self, n):
        census = cycle_census(complete_single_negative(n))
        oracle = family_oracle(n, "a")
        assert degree_of_balance(census) == pytest.approx(oracle["D"], abs=1e-12)
        assert degree_of_balance(census, Weighting("inverse-factorial")) == pytest.approx(oracle["C_inv_fact"], abs=1e-12)

    def test_acyclic_graph_is_balanced_by_convention(self):
        assert degree_of_balance(CycleCensus()) == 1.0

    def test_invalid_weightings(self):
        with pytest.raises(ValueError):
            Weighting("harmonic")
        with pytest.raises(ValueError):
            Weighting.single(2)


class TestTriangleIndex:
    def test_trace_formula_matches_enumeration(self):
        for graph in random_suite(seed=31, count=200, max_n=12, min_n=3):
            assert triangle_index(graph) == pytest.approx(direct_triangle_index(graph), abs=1e-12)

    def test_no_triangle_gives_one(self):
        square = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
        assert triangle_index(square) == 1.0
