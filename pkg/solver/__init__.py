"""
Exact frustration index, its weighted and k-colour extensions, and model export.
"""
from .bounds import triangle_packing_lower_bound, upper_bounds
from .branch_and_bound import FrustrationSolver, solve, solve_weighted
from .ising import ising_hamiltonian
from .kcolour import KColourSolver, solve_kcolour
from .milp import MilpModel, export_milp, render_lp
from .models import BUDGET_TERMINATED, GAP_TERMINATED, OPTIMAL, FrustrationResult, SolverConfig

__all__ = [
    "BUDGET_TERMINATED",
    "FrustrationResult",
    "FrustrationSolver",
    "GAP_TERMINATED",
    "KColourSolver",
    "MilpModel",
    "OPTIMAL",
    "SolverConfig",
    "export_milp",
    "ising_hamiltonian",
    "render_lp",
    "solve",
    "solve_kcolour",
    "solve_weighted",
    "triangle_packing_lower_bound",
    "upper_bounds",
]
