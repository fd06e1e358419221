"""Von Neumann and q-entropies of graph states, with closed forms.

Regular graphs admit an entropy formula in terms of adjacency eigenvalues,
and circulants have a fully analytic sine spectrum; both are implemented
independently of the generic eigensolver path so they can cross-validate it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .density import DensityMatrix
from .graphs import Graph, GraphError
from .linalg import HermitianMatrix, SpectrumResult, eigensystem

ZERO_EIGENVALUE_CUTOFF = 1e-12

# constant in the large-n cycle approximation
APPROX_C = 1.0 - math.log2(math.e) / 2.0


class EntropyError(ValueError):
    """Invalid entropy computation."""


@dataclass(frozen=True)
class EntropyReport:
    entropy: float
    spectrum: SpectrumResult
    bound_max: float


def _entropy_of_values(values) -> float:
    s = 0.0
    for lam in values:
        if lam > ZERO_EIGENVALUE_CUTOFF:
            s -= lam * math.log2(lam)
    return s


def von_neumann_entropy(rho: DensityMatrix) -> EntropyReport:
    """-sum lambda log2 lambda, with eigenvalues below 1e-12 treated as 0."""
    spec = eigensystem(rho.mat)
    ent = _entropy_of_values(spec.eigenvalues)
    bound = math.log2(rho.dim - 1) if rho.dim > 1 else 0.0
    return EntropyReport(ent, spec, bound)


def q_entropy(rho: DensityMatrix, q: float) -> float:
    """(sum lambda^q)^(1/q); tends to the largest eigenvalue as q grows."""
    if q <= 1:
        raise EntropyError("q must exceed 1")
    spec = eigensystem(rho.mat)
    total = sum(lam ** q for lam in spec.eigenvalues if lam > 0)
    return total ** (1.0 / q)


def regular_graph_entropy(g: Graph, d: int | None = None) -> float:
    """Entropy of the state of a d-regular graph from adjacency eigenvalues.

    Uses -(1/(dn)) sum m_i (d - mu_i) log2(d - mu_i) + log2(dn) over the
    distinct adjacency eigenvalues mu_i with multiplicities m_i.
    """
    degs = set(g.degrees())
    if len(degs) != 1:
        raise EntropyError("graph is not regular")
    actual = degs.pop()
    if d is None:
        d = actual
    elif d != actual:
        raise EntropyError(f"graph is {actual}-regular, not {d}-regular")
    if d == 0:
        raise EntropyError("regular graph of degree 0 has no state")
    if any(g.loops):
        raise EntropyError("closed form assumes a loop-free graph")
    adj = np.zeros((g.n, g.n))
    for (u, v) in g.edges:
        adj[u, v] = adj[v, u] = 1.0
    spec = eigensystem(HermitianMatrix(adj, exact=False))
    dn = d * g.n
    total = 0.0
    for (mu, mult) in spec.multiplicities:
        gap = d - mu
        if gap > ZERO_EIGENVALUE_CUTOFF:
            total -= mult * gap * math.log2(gap)
    return total / dn + math.log2(dn)


def circulant_entropy_exact(n: int, k: int) -> float:
    """Entropy of the circulant on Z_n with jumps {k, n-k}, analytically.

    The graph is gcd(n, k) disjoint cycles through p = n/gcd(n, k) vertices,
    so the state's eigenvalues are 2 sin^2(pi j / p) / n for j = 1..p, each
    with multiplicity gcd(n, k).  No eigensolver involved.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise EntropyError("need n >= 2 and 1 <= k <= n-1")
    g = math.gcd(n, k)
    p = n // g
    values = [2.0 * math.sin(math.pi * j / p) ** 2 / n for j in range(1, p + 1)]
    return g * _entropy_of_values(values)


def circulant_entropy_approx(n: int, k: int) -> float:
    """Large-n approximation log2 n - 1 + 2C/k with C = 1 - log2(e)/2."""
    if k < 1 or n < 2:
        raise EntropyError("need n >= 2 and k >= 1")
    if n / k < 3:
        raise EntropyError("approximation requires n/k >= 3")
    return math.log2(n) - 1.0 + 2.0 * APPROX_C / k
