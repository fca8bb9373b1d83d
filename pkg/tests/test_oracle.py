import pytest

from measures import measure_report
from measures.oracle import complete_cycle_count, cycles_through_edge, family_oracle
from solver import solve

from .oracles import complete_all_negative, complete_single_negative

COMPARED = ("D", "C_inv_fact", "T", "K", "W", "lambda", "A", "F", "F_prime", "X", "Y", "Z")


def _assert_matches(report, table, n):
    for name in COMPARED:
        assert report.value(name) == pytest.approx(table[name], abs=1e-9), name
    for k in range(3, n + 1):
        assert report.value(f"D_{k}") == pytest.approx(table[f"D_{k}"], abs=1e-9), f"D_{k}"


class TestFamilyOracle:
    @pytest.mark.parametrize("n", range(3, 8))
    def test_single_negative_complete_matches_computation(self, n):
        graph = complete_single_negative(n)
        table = family_oracle(n, "a")
        result = solve(graph)
        assert result.L == table["L"] == 1
        report = measure_report(graph, result.L, ks=range(3, n + 1))
        _assert_matches(report, table, n)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_all_negative_complete_matches_computation(self, n):
        graph = complete_all_negative(n)
        table = family_oracle(n, "c")
        result = solve(graph)
        assert result.L == table["L"]
        report = measure_report(graph, result.L, ks=range(3, n + 1))
        _assert_matches(report, table, n)

    def test_nine_node_all_negative(self):
        assert family_oracle(9, "c")["L"] == 16

    def test_cycle_counts(self):
        assert complete_cycle_count(5, 5) == 12
        assert complete_cycle_count(4, 3) == 4
        assert cycles_through_edge(5, 3) == 3

    @pytest.mark.parametrize("n, family", [(2, "a"), (5, "b")])
    def test_rejects_bad_requests(self, n, family):
        with pytest.raises(ValueError):
            family_oracle(n, family)
