import pytest

from core.balance import degree_profile
from core.exceptions import InfeasibleSpecError
from generators import FamilyFactory, FamilySpec, generate, lattice_edge_count


class TestDeterministicFamilies:
    def test_square_lattice(self):
        graph = generate(FamilySpec(family="ising-lattice", dimensions=[50, 50], negative_fraction=0.5, seed=1))
        assert graph.n == 2500
        assert graph.m == 4900 == lattice_edge_count([50, 50])
        assert graph.m_neg == 2450

    def test_cubic_lattice_edge_count(self):
        graph = generate(FamilySpec(family="ising-lattice", dimensions=[3, 4, 5]))
        assert graph.m == lattice_edge_count([3, 4, 5]) == 133

    def test_hypercube(self):
        graph = generate(FamilySpec(family="hypercube", dimension=4))
        assert (graph.n, graph.m) == (16, 32)
        assert set(graph.degrees) == {4}

    def test_complete_all_negative(self):
        graph = generate(FamilySpec(family="complete-all-negative", n=6))
        assert graph.m == graph.m_neg == 15

    def test_complete_single_negative(self):
        graph = generate(FamilySpec(family="complete-single-negative", n=6))
        assert graph.m_neg == 1
        assert graph.sign_of(0, 1) == -1


class TestRandomFamilies:
    def test_gnm_has_exact_edge_count(self):
        graph = generate(FamilySpec(family="gnm", n=30, m=100, negative_fraction=0.3, seed=5))
        assert graph.m == 100
        assert graph.m_neg == 30

    @pytest.mark.parametrize("fraction, expected", [(0.0, 0), (0.25, 11), (0.99, 44), (1.0, 45)])
    def test_negative_fraction_is_floored(self, fraction, expected):
        graph = generate(FamilySpec(family="gnm", n=10, m=45, negative_fraction=fraction, seed=3))
        assert graph.m_neg == expected

    def test_negative_probability_extremes(self):
        none = generate(FamilySpec(family="gnp", n=12, p=0.5, negative_probability=0.0, seed=2))
        every = generate(FamilySpec(family="gnp", n=12, p=0.5, negative_probability=1.0, seed=2))
        assert none.m_neg == 0
        assert every.m_neg == every.m

    def test_same_seed_same_graph(self):
        spec = FamilySpec(family="gnp", n=25, p=0.3, negative_probability=0.4, seed=11)
        first, second = generate(spec), generate(spec)
        assert first.edges == second.edges

    def test_different_seeds_differ(self):
        first = generate(FamilySpec(family="gnm", n=25, m=60, negative_fraction=0.5, seed=1))
        second = generate(FamilySpec(family="gnm", n=25, m=60, negative_fraction=0.5, seed=2))
        assert first.edges != second.edges

    @pytest.mark.parametrize("n, attachment", [(10, 1), (20, 3), (50, 2)])
    def test_barabasi_albert_edge_count(self, n, attachment):
        graph = generate(FamilySpec(family="barabasi-albert", n=n, attachment=attachment, seed=7))
        assert graph.n == n
        assert graph.m == attachment + (n - attachment - 1) * attachment

    @pytest.mark.parametrize("n, degree", [(10, 3), (12, 5), (20, 4), (50, 8), (100, 12)])
    def test_random_regular_degrees(self, n, degree):
        graph = generate(FamilySpec(family="random-regular", n=n, degree=degree, negative_fraction=0.5, seed=4))
        assert set(graph.degrees) == {degree}
        assert sum(degree_profile(graph).total) == 2 * graph.m


class TestInfeasibleSpecs:
    def test_degree_not_below_n(self):
        with pytest.raises(InfeasibleSpecError):
            generate(FamilySpec(family="random-regular", n=6, degree=6))

    def test_odd_regular_product(self):
        with pytest.raises(InfeasibleSpecError):
            generate(FamilySpec(family="random-regular", n=7, degree=3))

    def test_too_many_edges(self):
        with pytest.raises(InfeasibleSpecError):
            generate(FamilySpec(family="gnm", n=5, m=11))

    def test_unknown_family(self):
        with pytest.raises(InfeasibleSpecError):
            FamilyFactory.create("watts-strogatz")

    def test_missing_parameter(self):
        with pytest.raises(InfeasibleSpecError):
            generate(FamilySpec(family="gnp", n=10))

    def test_fraction_and_probability_together(self):
        with pytest.raises(InfeasibleSpecError):
            generate(FamilySpec(family="gnm", n=10, m=5, negative_fraction=0.5, negative_probability=0.5))

    def test_fraction_out_of_range(self):
        with pytest.raises(InfeasibleSpecError):
            generate(FamilySpec(family="gnm", n=10, m=5, negative_fraction=1.5))

    def test_attachment_not_below_n(self):
        with pytest.raises(InfeasibleSpecError):
            generate(FamilySpec(family="barabasi-albert", n=3, attachment=3))
