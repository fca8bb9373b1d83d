"""
Eigenvalue-based measures: walk-based balance, algebraic conflict and
spectral bipartivity, on top of a cyclic Jacobi eigensolver.
"""
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from core.balance import is_balanced
from core.entities import SignedGraph
from core.exceptions import ConvergenceError, MeasureRefusedError

logger = logging.getLogger(__name__)

EPSILON = np.finfo(float).eps


@dataclass(frozen=True)
class EigenOptions:
    """Symmetric eigensolver settings."""
    tolerance: float = 1e-10
    max_sweeps: int = 100
    method: str = "jacobi"


class WalkBalance(NamedTuple):
    K: float
    W: float


class AlgebraicConflict(NamedTuple):
    lam: float
    A: float


class SpectralBipartivity(NamedTuple):
    beta: float
    b_s: float


def jacobi_eigenvalues(
    matrix: np.ndarray,
    tolerance: float = 1e-10,
    max_sweeps: int = 100,
    name: str = "matrix",
) -> np.ndarray:
    """
    Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, stopping when
    the off-diagonal Frobenius norm drops below `tolerance`.
    Works on a private copy; returns the eigenvalues in ascending order.
    """
    a = np.array(matrix, dtype=float, copy=True)
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)

    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))
        if off < tolerance:
            logger.debug(f"Jacobi converged on {name} after {sweep} sweeps")
            return np.sort(np.diag(a))
        if sweep == max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= EPSILON * (abs(a[p, p]) + abs(a[q, q])):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

    raise ConvergenceError(f"Jacobi eigensolver did not converge on {name} within {max_sweeps} sweeps")


def eigenvalues(matrix: np.ndarray, options: EigenOptions = EigenOptions(), name: str = "matrix") -> np.ndarray:
    """Ascending eigenvalues with the configured method."""
    if options.method == "lapack":
        return np.linalg.eigvalsh(matrix)
    return jacobi_eigenvalues(matrix, options.tolerance, options.max_sweeps, name)


def _shifted_ratio(top: np.ndarray, bottom: np.ndarray) -> float:
    """Sum exp(top) / sum exp(bottom), shifted by the largest exponent."""
    shift = max(float(np.max(top)), float(np.max(bottom)))
    return float(np.sum(np.exp(top - shift)) / np.sum(np.exp(bottom - shift)))


def walk_balance(graph: SignedGraph, options: EigenOptions = EigenOptions()) -> WalkBalance:
    """K = Tr(e^A) / Tr(e^|A|) and W = (K + 1) / 2."""
    if graph.n < 1:
        raise MeasureRefusedError("walk balance needs at least one node")
    signed = eigenvalues(graph.adjacency(), options, name="A")
    unsigned = eigenvalues(graph.abs_adjacency(), options, name="|A|")
    k = _shifted_ratio(signed, unsigned)
    return WalkBalance(K=k, W=(k + 1.0) / 2.0)


def max_average_endpoint_degree(graph: SignedGraph) -> float:
    """max over edges of (d_u + d_v) / 2."""
    degrees = graph.degrees
    return max((degrees[e.u] + degrees[e.v]) / 2.0 for e in graph.edges)


def algebraic_conflict(graph: SignedGraph, options: EigenOptions = EigenOptions()) -> AlgebraicConflict:
    """
    Smallest eigenvalue of the signed Laplacian D - A and its normalisation
    A = 1 - lambda / (d_max - 1). Only defined for connected cyclic graphs.
    """
    if not graph.is_connected():
        raise MeasureRefusedError(
            "graph is disconnected; extract a component (e.g. --giant-component)"
        )
    if graph.m < graph.n:
        raise MeasureRefusedError("graph is acyclic; lambda is 0 and A is undefined")

    spectrum = eigenvalues(graph.laplacian(), options, name="signed Laplacian")
    lam = max(float(spectrum[0]), 0.0)
    if lam < options.tolerance * 10 and is_balanced(graph).balanced:
        lam = 0.0
    bound = max_average_endpoint_degree(graph) - 1.0
    normalised = min(max(1.0 - lam / bound, 0.0), 1.0)
    return AlgebraicConflict(lam=lam, A=normalised)


def spectral_bipartivity(graph: SignedGraph, options: EigenOptions = EigenOptions()) -> SpectralBipartivity:
    """
    On the spectrum of |A|: beta = sum cosh / sum exp (share of even closed
    walks) and b_s = Tr(e^-A) / Tr(e^A).
    """
    if graph.n < 1:
        raise MeasureRefusedError("spectral bipartivity needs at least one node")
    spectrum = eigenvalues(graph.abs_adjacency(), options, name="|A|")
    b_s = _shifted_ratio(-spectrum, spectrum)
    beta = (1.0 + b_s) / 2.0
    return SpectralBipartivity(beta=beta, b_s=b_s)
