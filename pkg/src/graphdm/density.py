"""Density matrices built from graphs.

A graph with at least one non-loop edge yields the unit-trace positive
matrix (degree matrix minus adjacency) / (2 * edge count).  The loop-aware
variant adds the loop-multiplicity diagonal and renormalizes.  All of these
are exact-rational; numerics only appear once a spectrum is requested.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, GraphError, degree_matrix, laplacian, tensor_product
from .linalg import HermitianMatrix, LinalgError, exact_projector, is_psd, kron

TRACE_TOL = 1e-12


class DensityError(ValueError):
    """Invalid density-matrix construction."""


@dataclass(frozen=True)
class DensityMatrix:
    """Unit-trace positive semidefinite matrix, possibly tied to a graph.

    normalization records the divisor applied to the integer matrix when the
    state came from a graph; it is None for channel outputs and the like.
    """

    mat: HermitianMatrix
    origin: Graph | None = None
    normalization: Fraction | None = None

    def __post_init__(self):
        tr = self.mat.trace()
        if self.mat.exact_real:
            if tr != 1:
                raise DensityError(f"trace is {tr}, not 1")
        elif abs(complex(tr) - 1) > TRACE_TOL:
            raise DensityError(f"trace is {tr}, not 1")
        ok, low = is_psd(self.mat)
        if not ok:
            raise DensityError(f"matrix is not PSD (eigenvalue {low:g})")

    @property
    def dim(self) -> int:
        return self.mat.dim

    def to_complex(self) -> np.ndarray:
        return self.mat.to_complex()


def density_of_graph(g: Graph) -> DensityMatrix:
    """Normalized combinatorial Laplacian of g.  Loops are ignored entirely."""
    if g.m == 0:
        raise DensityError("graph has no non-loop edge")
    denom = Fraction(2 * g.m)
    mat = HermitianMatrix(laplacian(g)).scale(1 / denom)
    return DensityMatrix(mat, origin=g, normalization=denom)


def density_with_loops(g: Graph) -> DensityMatrix:
    """Loop-aware state: (Laplacian + loop-multiplicity diagonal) / (2m + loops)."""
    denom = Fraction(2 * g.m + g.loop_total)
    if denom == 0:
        raise DensityError("graph has neither edges nor loops")
    data = laplacian(g).copy()
    for v, count in enumerate(g.loops):
        data[v, v] += count
    mat = HermitianMatrix(data).scale(1 / denom)
    return DensityMatrix(mat, origin=g, normalization=denom)


def purity(rho: DensityMatrix):
    """tr(rho^2); exact Fraction when the matrix is exact."""
    d = rho.mat.data
    if rho.mat.exact_real:
        return np.dot(d, d).trace()
    return float((np.asarray(d) @ np.asarray(d)).trace().real)


def is_pure(rho: DensityMatrix, tol: float = 1e-9) -> bool:
    p = purity(rho)
    if isinstance(p, Fraction):
        return p == 1
    return abs(p - 1) <= tol


def edge_state_vector(g: Graph, edge, sign: int = -1) -> list[Fraction]:
    """Unnormalized e_u +/- e_v for an edge of g (exact integer entries)."""
    u, v = edge
    vec = [Fraction(0)] * g.n
    vec[u] = Fraction(1)
    vec[v] = Fraction(sign)
    return vec


def pure_mixture_decomposition(g: Graph) -> list[tuple[Fraction, DensityMatrix]]:
    """Write the graph state as the uniform mixture of its edge states.

    Each non-loop edge (u, v) contributes weight 1/m on the projector onto
    (e_u - e_v)/sqrt(2).  The weighted sum reproduces the state exactly.
    """
    if g.m == 0:
        raise DensityError("graph has no non-loop edge")
    w = Fraction(1, g.m)
    parts = []
    total = HermitianMatrix.zeros(g.n)
    for edge in g.edges:
        proj = exact_projector(edge_state_vector(g, edge, -1))
        total = total + proj.scale(w)
        factor = Graph(g.n, (edge,), (0,) * g.n)
        parts.append((w, DensityMatrix(proj, origin=factor)))
    if not total.exact_equal(density_of_graph(g).mat):
        raise DensityError("edge mixture failed to reconstruct the state")
    return parts


def sigma_plus_edge(factor: Graph) -> DensityMatrix:
    """Plus-sign edge state P[(e_u + e_v)/sqrt(2)] of a single-edge graph."""
    if factor.m != 1:
        raise DensityError("factor must have exactly one non-loop edge")
    proj = exact_projector(edge_state_vector(factor, factor.edges[0], +1))
    return DensityMatrix(proj, origin=factor)


def sigma_plus(g: Graph) -> DensityMatrix:
    """Uniform mixture of plus-sign edge states: (degrees + adjacency) / 2m."""
    if g.m == 0:
        raise DensityError("graph has no non-loop edge")
    data = degree_matrix(g)
    for (u, v) in g.edges:
        data[u, v] += 1
        data[v, u] += 1
    mat = HermitianMatrix(data).scale(Fraction(1, 2 * g.m))
    return DensityMatrix(mat, origin=g)


def tensor_separable_decomposition(g: Graph, h: Graph):
    """Split the state of the tensor-product graph across the two factors.

    Returns [(1/2, state_a, state_b), (1/2, ...)] whose Kronecker mixture
    equals the product graph's state exactly: minus-sign states on one
    factor pair with plus-sign mixtures on the other.
    """
    if g.m == 0 or h.m == 0:
        raise DensityError("both factors need at least one non-loop edge")
    if any(g.loops) or any(h.loops):
        raise DensityError("tensor split requires loop-free factors")
    half = Fraction(1, 2)
    parts = [
        (half, density_of_graph(g), sigma_plus(h)),
        (half, sigma_plus(g), density_of_graph(h)),
    ]
    mix = HermitianMatrix.zeros(g.n * h.n)
    for (w, a, b) in parts:
        mix = mix + kron(a.mat, b.mat).scale(w)
    target = density_of_graph(tensor_product(g, h)).mat
    if not mix.exact_equal(target):
        raise DensityError("tensor split failed to reconstruct the product state")
    return parts
