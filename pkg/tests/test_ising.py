import statistics

import pytest

from core.exceptions import SolverError
from generators import FamilySpec, generate
from solver import BUDGET_TERMINATED, SolverConfig, ising_hamiltonian, solve, solve_weighted

from .oracles import complete_all_negative


def _spin_energy(graph, colouring) -> int:
    spins = [-1 if colouring[i] else 1 for i in range(graph.n)]
    return -sum(e.sign * spins[e.u] * spins[e.v] for e in graph.edges)


class TestIsingHamiltonian:
    def test_hypercube_ground_states(self):
        frustration = []
        for seed in range(10):
            graph = generate(FamilySpec(family="hypercube", dimension=4, negative_fraction=0.5, seed=seed))
            result = solve(graph)
            energy = ising_hamiltonian(result, graph.m)
            assert energy == 2 * result.L - 32
            assert energy == _spin_energy(graph, result.colouring)
            frustration.append(result.L)
        assert 3.3 <= statistics.mean(frustration) <= 6.3

    def test_small_lattice(self):
        graph = generate(FamilySpec(family="ising-lattice", dimensions=[4, 4], negative_probability=0.5, seed=9))
        result = solve(graph)
        assert ising_hamiltonian(result, graph.m) == _spin_energy(graph, result.colouring)

    def test_balanced_graph_reaches_minus_m(self):
        graph = generate(FamilySpec(family="ising-lattice", dimensions=[3, 3]))
        assert ising_hamiltonian(solve(graph), graph.m) == -graph.m

    def test_refuses_non_optimal_result(self):
        graph = complete_all_negative(12)
        result = solve(graph, SolverConfig(node_budget=5))
        assert result.status == BUDGET_TERMINATED
        with pytest.raises(SolverError):
            ising_hamiltonian(result, graph.m)

    def test_refuses_weighted_result(self):
        graph = complete_all_negative(4)
        weighted = solve_weighted(graph)
        assert weighted.weighted
        with pytest.raises(SolverError):
            ising_hamiltonian(weighted, graph.m)

    def test_refuses_inconsistent_edge_count(self):
        graph = complete_all_negative(5)
        with pytest.raises(SolverError):
            ising_hamiltonian(solve(graph), 1)
