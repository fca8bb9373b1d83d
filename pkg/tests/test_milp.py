import numpy as np
import pytest

from core.entities import SignedGraph
from core.exceptions import SolverError
from solver import export_milp, render_lp, solve, solve_kcolour, solve_weighted
from solver.milp import FormulationFactory

from .oracles import enumerate_by_edge, enumerate_model, random_graph, random_suite


TRIANGLE = SignedGraph.from_edges(3, [(0, 1, 1), (0, 2, 1), (1, 2, -1)], name="triangle")
K4_MIXED = SignedGraph.from_edges(4, [(0, 1, -1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, -1), (2, 3, -1)])


class TestModelSizes:
    def test_and_counts(self):
        for graph in random_suite(seed=131, count=20, max_n=8):
            model = export_milp(graph, "and")
            assert model.variable_count == graph.n + graph.m
            assert model.constraint_count == 2 * graph.m_pos + graph.m_neg

    def test_xor_counts(self):
        for graph in random_suite(seed=137, count=20, max_n=8):
            model = export_milp(graph, "xor")
            assert model.variable_count == graph.n + graph.m
            assert model.constraint_count == 2 * graph.m

    def test_abs_counts(self):
        for graph in random_suite(seed=139, count=20, max_n=8):
            model = export_milp(graph, "abs")
            assert model.variable_count == graph.n + 2 * graph.m
            assert model.constraint_count == graph.m

    def test_xor_triangle(self):
        model = export_milp(TRIANGLE, "xor")
        assert model.variable_count == 6
        assert model.constraint_count == 6

    def test_ubqp_is_unconstrained(self):
        model = export_milp(TRIANGLE, "ubqp")
        assert model.variable_count == 3
        assert model.constraint_count == 0
        assert model.is_quadratic

    def test_cut_blocks_are_labelled(self):
        model = export_milp(K4_MIXED, "and", cuts=["triangle", "four", "fix"])
        sizes = model.block_sizes()
        assert sizes["triangle"] == 2
        assert sizes["four"] == 16
        assert sizes["fix"] == 1


class TestModelOptimum:
    @pytest.mark.parametrize("formulation", ["and", "xor", "abs"])
    def test_enumeration_optimum_is_the_index(self, formulation):
        for graph in random_suite(seed=149, count=50, max_n=7):
            model = export_milp(graph, formulation)
            optimum = enumerate_by_edge(model, FormulationFactory.create(formulation), graph)
            assert optimum == pytest.approx(solve(graph).L)

    @pytest.mark.parametrize(
        "formulation, cuts",
        [
            ("and", ["triangle", "degree", "four", "fix"]),
            ("xor", ["triangle", "degree", "fix"]),
            ("abs", ["triangle", "degree", "fix"]),
        ],
    )
    def test_valid_inequalities_keep_the_optimum(self, formulation, cuts):
        for graph in (TRIANGLE, K4_MIXED.without_edges([(2, 3)])):
            model = export_milp(graph, formulation, cuts)
            assert enumerate_model(model) == pytest.approx(solve(graph).L)

    def test_ubqp_objective(self):
        model = export_milp(K4_MIXED, "ubqp", cuts=["fix"])
        assert enumerate_model(model) == pytest.approx(solve(K4_MIXED).L)

    def test_weighted_model(self):
        rng = np.random.default_rng(151)
        for _ in range(15):
            graph = random_graph(rng, int(rng.integers(2, 6)), 0.7, 0.5, weighted=True)
            model = export_milp(graph, "weighted")
            optimum = enumerate_by_edge(model, FormulationFactory.create("weighted"), graph)
            assert optimum == pytest.approx(solve_weighted(graph).L, abs=1e-9)

    def test_kcolour_model(self):
        graph = SignedGraph.from_edges(4, [(0, 1, 1), (0, 2, -1), (1, 2, -1), (2, 3, -1)])
        for k in (1, 2, 3):
            model = export_milp(graph, "kcolour", colours=k)
            assert enumerate_model(model) == pytest.approx(solve_kcolour(graph, k).L)


class TestRefusals:
    def test_unknown_formulation(self):
        with pytest.raises(SolverError):
            export_milp(TRIANGLE, "qubo")

    def test_unknown_block(self):
        with pytest.raises(SolverError):
            export_milp(TRIANGLE, "xor", cuts=["clique"])

    @pytest.mark.parametrize("formulation, cut", [("ubqp", "triangle"), ("xor", "four"), ("weighted", "triangle")])
    def test_unsupported_block(self, formulation, cut):
        with pytest.raises(SolverError):
            export_milp(TRIANGLE, formulation, cuts=[cut])

    def test_kcolour_needs_a_colour_count(self):
        with pytest.raises(SolverError):
            export_milp(TRIANGLE, "kcolour")


class TestRenderLp:
    def test_sections_and_header(self):
        text = render_lp(export_milp(TRIANGLE, "xor", cuts=["fix"]))
        lines = text.splitlines()
        assert lines[0] == "\\ frustration model, formulation XOR"
        assert lines[1] == "\\ graph triangle: n = 3, m = 3, m_neg = 1"
        assert lines[2:4] == ["Minimize", " obj: + 1 f_0_1 + 1 f_0_2 + 1 f_1_2"]
        assert " c1: - 1 x_0 + 1 x_1 + 1 f_0_1 >= 0" in lines
        assert " c7: + 1 x_0 = 1" in lines
        assert lines[-1] == "End"
        assert " 0 <= x_2 <= 1" in lines
        assert lines.index("Binary") > lines.index("Bounds")

    def test_and_objective_constant(self):
        text = render_lp(export_milp(TRIANGLE, "and"))
        objective = [line for line in text.splitlines() if line.startswith(" obj:")][0]
        assert objective.endswith("+ 1")

    def test_quadratic_objective(self):
        text = render_lp(export_milp(TRIANGLE, "ubqp"))
        assert "[ - 4 x_0 * x_1 - 4 x_0 * x_2 + 4 x_1 * x_2 ] / 2" in text

    def test_linear_only_refuses_quadratic(self):
        with pytest.raises(SolverError):
            render_lp(export_milp(TRIANGLE, "ubqp"), linear_only=True)
