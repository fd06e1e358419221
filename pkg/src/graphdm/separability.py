"""Bipartite structure of graph states: partial transpose, PPT verdicts,
entangled edges, matching canonicalization, and explicit separable
decompositions.

A labeling identifies the n = p*q vertices with the product basis
|row s>|column t>.  The default map sends vertex v (0-based) to
(v // q, v % q); explicit overrides reproduce bases that interleave rows.
"""

from __future__ import annotations

import cmath
import itertools
import math
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .density import DensityMatrix, density_of_graph
from .graphs import Graph, GraphError, VertexPermutation, automorphisms, build_graph, complete_graph
from .linalg import HermitianMatrix, eigensystem, exact_projector

SEPARABLE = "SEPARABLE"
ENTANGLED_NPT = "ENTANGLED_NPT"
PPT_INCONCLUSIVE = "PPT_INCONCLUSIVE"

NPT_TOL = 1e-9
RECONSTRUCTION_TOL = 1e-10

# dimensions at which a positive partial transpose certifies separability
_PPT_EXACT_DIMS = {(2, 2), (2, 3), (3, 2)}

DEFAULT_SEARCH_SEED = 20060111


class SeparabilityError(ValueError):
    """Invalid separability computation."""


@dataclass(frozen=True)
class BipartiteLabeling:
    """Assignment of each vertex to a cell (s, t), 0 <= s < p, 0 <= t < q."""

    p: int
    q: int
    cells: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = self.p * self.q
        if len(self.cells) != n:
            raise SeparabilityError("labeling must cover exactly p*q vertices")
        flats = sorted(self.flat(v) for v in range(n))
        if flats != list(range(n)):
            raise SeparabilityError("labeling is not a bijection onto the cells")

    @classmethod
    def default(cls, p: int, q: int) -> "BipartiteLabeling":
        """Vertex v sits at (v // q, v % q): rows are consecutive blocks."""
        return cls(p, q, tuple(divmod(v, q) for v in range(p * q)))

    @classmethod
    def from_assignment(cls, p: int, q: int, assign) -> "BipartiteLabeling":
        """Build from flat cell indices: vertex v sits at cell assign[v]."""
        return cls(p, q, tuple(divmod(int(a), q) for a in assign))

    @property
    def n(self) -> int:
        return self.p * self.q

    def flat(self, v: int) -> int:
        s, t = self.cells[v]
        return s * self.q + t

    def vertex_order(self) -> list[int]:
        """vertex_order()[c] is the vertex sitting at flat cell c."""
        pos = [0] * self.n
        for v in range(self.n):
            pos[self.flat(v)] = v
        return pos

    def is_default(self) -> bool:
        return all(self.flat(v) == v for v in range(self.n))


@dataclass(frozen=True)
class SeparabilityVerdict:
    status: str
    min_pt_eigenvalue: float
    dims: tuple[int, int]


@dataclass(frozen=True)
class ProductState:
    """Weighted product vector left (x) right with unit-norm factors."""

    left: np.ndarray
    right: np.ndarray
    weight: float

    def __post_init__(self):
        for vec in (self.left, self.right):
            if abs(np.linalg.norm(vec) - 1.0) > 1e-10:
                raise SeparabilityError("product-state factor is not unit norm")
        if self.weight < 0:
            raise SeparabilityError("product-state weight must be nonnegative")

    def vector(self) -> np.ndarray:
        return np.kron(np.asarray(self.left, dtype=complex),
                       np.asarray(self.right, dtype=complex))


# ---------------------------------------------------------------------------
# partial transpose and PPT testing


def _pt_indexed(mat: np.ndarray, lab: BipartiteLabeling) -> np.ndarray:
    """Partial transpose in the vertex basis of the input matrix."""
    n, p, q = lab.n, lab.p, lab.q
    pos = lab.vertex_order()
    cell_mat = mat[np.ix_(pos, pos)]
    pt_cell = cell_mat.reshape(p, q, p, q).transpose(0, 3, 2, 1).reshape(n, n)
    fl = [lab.flat(v) for v in range(n)]
    return pt_cell[np.ix_(fl, fl)]


def partial_transpose(rho: DensityMatrix, lab: BipartiteLabeling) -> HermitianMatrix:
    """Transpose the second tensor factor only; exact when the input is.

    The result is expressed in the same vertex basis as the input, so
    printed matrices line up with the labeled examples.
    """
    if rho.dim != lab.n:
        raise SeparabilityError(f"state dim {rho.dim} != p*q = {lab.n}")
    out = _pt_indexed(rho.mat.data, lab)
    if rho.mat.exact_real:
        return HermitianMatrix(out)
    return HermitianMatrix(out, exact=False)


def min_pt_eigenvalue(rho: DensityMatrix, lab: BipartiteLabeling) -> float:
    pt = _pt_indexed(rho.mat.to_complex().real, lab)
    return float(np.linalg.eigvalsh(pt)[0])


def ppt_test(rho: DensityMatrix, lab: BipartiteLabeling, tol: float = NPT_TOL) -> SeparabilityVerdict:
    """Peres-Horodecki test: NPT certifies entanglement at any dimension,
    while a positive partial transpose certifies separability only at
    2x2 and 2x3."""
    low = min_pt_eigenvalue(rho, lab)
    if low < -tol:
        status = ENTANGLED_NPT
    elif (lab.p, lab.q) in _PPT_EXACT_DIMS:
        status = SEPARABLE
    else:
        status = PPT_INCONCLUSIVE
    return SeparabilityVerdict(status, low, (lab.p, lab.q))


# ---------------------------------------------------------------------------
# entangled edges and matchings


def entangled_edges(g: Graph, lab: BipartiteLabeling) -> list[tuple[int, int]]:
    """Edges whose endpoints differ in both the row and the column label."""
    if g.n != lab.n:
        raise SeparabilityError("labeling size does not match the graph")
    out = []
    for (u, v) in g.edges:
        (s, t), (s2, t2) = lab.cells[u], lab.cells[v]
        if s != s2 and t != t2:
            out.append((u, v))
    return out


def classify_matching(g: Graph, lab: BipartiteLabeling) -> str:
    """Strongest of: pe-matching > e-matching > matching > not-matching.

    A matching is a set of vertex-disjoint non-loop edges; an e-matching has
    every edge entangled; a pe-matching additionally spans every vertex.
    """
    if any(g.loops):
        return "not-matching"
    used = set()
    for (u, v) in g.edges:
        if u in used or v in used:
            return "not-matching"
        used.update((u, v))
    if g.m == 0 or len(entangled_edges(g, lab)) < g.m:
        return "matching"
    if len(used) == g.n:
        return "pe-matching"
    return "e-matching"


def _row_derangement(g: Graph, lab: BipartiteLabeling) -> dict[int, int]:
    """For a p = 2 pe-matching: column map t -> t' along row 0 -> row 1."""
    pi = {}
    for (u, v) in g.edges:
        (su, tu), (sv, tv) = lab.cells[u], lab.cells[v]
        if su == sv:
            raise SeparabilityError("matching edge joins two cells in the same row")
        if su == 1:
            tu, tv = tv, tu
        pi[tu] = tv
    return pi


@dataclass(frozen=True)
class TallyMark:
    """A cyclic chain of entangled edges between two rows, recorded by the
    ascending column set it occupies (chains of length 2 are criss-crosses)."""

    columns: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.columns) - 1


def canonicalize_pe_matching(g: Graph, lab: BipartiteLabeling):
    """Relabel columns so a two-row pe-matching becomes stacked tally-marks.

    Columns are processed in ascending order; whenever the chain through
    column c continues to some later column j, the transposition (j, c+1)
    is applied to the column labels, so every chain closes on a consecutive
    block.  Returns (column permutation, canonical graph, tally-marks); the
    canonical graph uses the default labeling.
    """
    if lab.p != 2:
        raise SeparabilityError("canonical form is defined for two rows")
    if classify_matching(g, lab) != "pe-matching":
        raise SeparabilityError("graph is not a pe-matching under this labeling")
    q = lab.q
    pi = _row_derangement(g, lab)

    relab = list(range(q))  # cumulative column relabeling, col -> new col

    def apply_transposition(a: int, b: int):
        swap = {a: b, b: a}
        nonlocal pi
        pi = {swap.get(x, x): swap.get(y, y) for x, y in pi.items()}
        for col in range(q):
            if relab[col] == a:
                relab[col] = b
            elif relab[col] == b:
                relab[col] = a

    marks = []
    start = 0
    for c in range(q):
        img = pi[c]
        if img == start:
            marks.append(TallyMark(tuple(range(start, c + 1))))
            start = c + 1
        elif img != c + 1:
            apply_transposition(img, c + 1)
    column_perm = VertexPermutation(tuple(relab))
    canonical = build_graph(2 * q, [(c, q + pi[c]) for c in range(q)])
    return column_perm, canonical, marks


def _tally_states(cycle_columns, q: int, weight: float) -> list[ProductState]:
    """Product states whose uniform mixture is the state of one tally-mark.

    cycle_columns lists the columns in traversal order along the chain;
    the left factors run through (|0> - e^{-2 pi i m/(k+1)} |1>)/sqrt(2) and
    the right factors are the matching discrete-Fourier vectors.
    """
    size = len(cycle_columns)
    states = []
    for m in range(size):
        phase = cmath.exp(-2j * cmath.pi * m / size)
        left = np.array([1.0, -phase]) / math.sqrt(2)
        right = np.zeros(q, dtype=complex)
        for s, col in enumerate(cycle_columns):
            right[col] = cmath.exp(2j * cmath.pi * s * m / size)
        right /= math.sqrt(size)
        states.append(ProductState(left, right, weight))
    return states


def tally_mark_decomposition(g: Graph, lab: BipartiteLabeling | None = None) -> list[ProductState]:
    """Separable decomposition of a single tally-mark spanning its graph.

    The graph must be a two-row pe-matching whose column map is one cycle
    visiting its columns in increasing order.  Returns k+1 product states
    with uniform weights whose mixture reconstructs the state.
    """
    if lab is None:
        if g.n % 2:
            raise SeparabilityError("tally-mark graph needs an even vertex count")
        lab = BipartiteLabeling.default(2, g.n // 2)
    if classify_matching(g, lab) != "pe-matching":
        raise SeparabilityError("graph is not a pe-matching under this labeling")
    q = lab.q
    pi = _row_derangement(g, lab)
    if any(pi[c] != (c + 1) % q for c in range(q)):
        raise SeparabilityError("pe-matching is not a single increasing chain")
    states = _tally_states(list(range(q)), q, 1.0 / q)
    rho = density_of_graph(g)
    if not verify_separable_decomposition(rho, states, RECONSTRUCTION_TOL, lab):
        raise SeparabilityError("tally-mark decomposition failed to reconstruct")
    return states


# ---------------------------------------------------------------------------
# decompositions and their verification


def verify_separable_decomposition(rho: DensityMatrix, states, tol: float = RECONSTRUCTION_TOL,
                                   lab: BipartiteLabeling | None = None) -> bool:
    """True iff the weighted product mixture matches rho entrywise within tol.

    Product vectors live on cells; `lab` translates them to the vertex basis
    (omit it for the default labeling).
    """
    if not states:
        return False
    total = sum(s.weight for s in states)
    if abs(total - 1.0) > 1e-10:
        raise SeparabilityError(f"weights sum to {total}, not 1")
    n = rho.dim
    mix = np.zeros((n, n), dtype=complex)
    for s in states:
        vec = s.vector()
        mix += s.weight * np.outer(vec, vec.conj())
    if lab is not None and not lab.is_default():
        pos = lab.vertex_order()
        # cell-basis mixture -> vertex basis
        fl = [lab.flat(v) for v in range(n)]
        mix = mix[np.ix_(fl, fl)]
    return bool(np.abs(mix - rho.mat.to_complex()).max() <= tol)


def complete_graph_decomposition(n: int, p: int, q: int) -> list[ProductState]:
    """Explicit product-state mixture for the complete graph's state.

    Separable edges keep their own projectors; each criss-crossing pair of
    entangled edges is rewritten as two product projectors on (|u_s> +/-
    |u_s'>)/sqrt(2) tensor (|w_t> -/+ |w_t'>)/sqrt(2).
    """
    if p * q != n:
        raise SeparabilityError("n must equal p*q")
    if n < 2:
        raise SeparabilityError("complete graph needs n >= 2")
    m = n * (n - 1) // 2
    w = 1.0 / m
    states = []

    def basis(dim, i, sign_j=None, j=None):
        vec = np.zeros(dim)
        vec[i] = 1.0
        if j is not None:
            vec[j] = sign_j
            vec /= math.sqrt(2)
        return vec

    # separable edges: same row (column pair) or same column (row pair)
    for s in range(p):
        for t in range(q):
            for t2 in range(t + 1, q):
                states.append(ProductState(basis(p, s), basis(q, t, -1.0, t2), w))
    for t in range(q):
        for s in range(p):
            for s2 in range(s + 1, p):
                states.append(ProductState(basis(p, s, -1.0, s2), basis(q, t), w))
    # entangled edges, handled as criss-crossing pairs
    for s in range(p):
        for s2 in range(s + 1, p):
            for t in range(q):
                for t2 in range(t + 1, q):
                    states.append(ProductState(basis(p, s, 1.0, s2), basis(q, t, -1.0, t2), w))
                    states.append(ProductState(basis(p, s, -1.0, s2), basis(q, t, 1.0, t2), w))
    rho = density_of_graph(complete_graph(n))
    if not verify_separable_decomposition(rho, states, RECONSTRUCTION_TOL):
        raise SeparabilityError("complete-graph decomposition failed to reconstruct")
    return states


def pe_matching_separability(g: Graph, lab: BipartiteLabeling):
    """Separability by the matching theorem for two-row labelings.

    Requires every entangled edge of g to lie in one pe-matching H (so the
    entangled edges are vertex-disjoint and span the graph, or there are
    none at all).  The state splits as a mixture of H's tally-mark product
    states and the remaining separable edge states; the verified
    decomposition certifies SEPARABLE at any q.
    """
    if lab.p != 2:
        raise SeparabilityError("matching separability is stated for two rows")
    if g.n != lab.n:
        raise SeparabilityError("labeling size does not match the graph")
    if g.m == 0:
        raise SeparabilityError("graph has no edges")
    ent = entangled_edges(g, lab)
    states = []
    w = 1.0 / g.m
    if ent:
        h = Graph(g.n, tuple(sorted(ent)), (0,) * g.n)
        if classify_matching(h, lab) != "pe-matching":
            raise SeparabilityError("entangled edges do not form one pe-matching")
        column_perm, _, marks = canonicalize_pe_matching(h, lab)
        # pull each canonical tally-mark back through the column relabeling
        for mark in marks:
            for st in _tally_states(mark.columns, lab.q, w):
                right = np.array([st.right[column_perm(t)] for t in range(lab.q)])
                states.append(ProductState(st.left, right, w))
    for (u, v) in g.edges:
        (s, t), (s2, t2) = lab.cells[u], lab.cells[v]
        if s != s2 and t != t2:
            continue
        if s == s2:
            left = np.zeros(2)
            left[s] = 1.0
            right = np.zeros(lab.q)
            right[t], right[t2] = 1.0, -1.0
            right /= math.sqrt(2)
        else:
            left = np.array([1.0, -1.0]) / math.sqrt(2)
            right = np.zeros(lab.q)
            right[t] = 1.0
        states.append(ProductState(left, right, w))
    rho = density_of_graph(g)
    if not verify_separable_decomposition(rho, states, RECONSTRUCTION_TOL, lab):
        raise SeparabilityError("matching decomposition failed to reconstruct")
    low = min_pt_eigenvalue(rho, lab)
    return SeparabilityVerdict(SEPARABLE, low, (lab.p, lab.q)), states


# ---------------------------------------------------------------------------
# star witness


@dataclass(frozen=True)
class StarWitness:
    """Local 2x2-corner compression of a star state and its partial transpose.

    The compressed matrix is not renormalized; its PT picks up a negative
    eigenvalue for every n = pq >= 4, witnessing the star's entanglement.
    """

    projected: HermitianMatrix
    pt: HermitianMatrix
    pt_eigenvalues: tuple[float, ...]
    formula_eigenvalues: tuple[float, ...]


def star_projection_witness(n: int, p: int, q: int) -> StarWitness:
    """Compress the star state onto rows {0,1} x columns {0,1} and PT it.

    The hub sits at cell (0,0) under the default labeling.  The four PT
    eigenvalues are {1/(2(n-1)), 1/(n-1), (1 +/- sqrt((n-1)^2+8)/(n-1))/4};
    the minus branch is negative whenever n >= 4.
    """
    if p * q != n or n < 4 or p < 2 or q < 2:
        raise SeparabilityError("witness needs n = p*q >= 4 with p, q >= 2")
    lab = BipartiteLabeling.default(p, q)
    # corner vertices at cells (0,0), (0,1), (1,0), (1,1)
    corner = [0, 1, q, q + 1]
    denom = Fraction(2 * (n - 1))
    data = np.full((4, 4), Fraction(0), dtype=object)
    for a, va in enumerate(corner):
        for b, vb in enumerate(corner):
            if va == vb:
                data[a, b] = (Fraction(n - 1) if va == 0 else Fraction(1)) / denom
            elif va == 0 or vb == 0:
                data[a, b] = Fraction(-1) / denom
    projected = HermitianMatrix(data)
    sub = BipartiteLabeling.default(2, 2)
    pt = HermitianMatrix(_pt_indexed(projected.data, sub))
    pt_eigs = tuple(float(v) for v in np.linalg.eigvalsh(pt.data.astype(float)))
    root = math.sqrt((n - 1) ** 2 + 8) / (n - 1)
    formula = tuple(sorted([1.0 / (2 * (n - 1)), 1.0 / (n - 1),
                            (1 + root) / 4, (1 - root) / 4]))
    return StarWitness(projected, pt, pt_eigs, formula)


# ---------------------------------------------------------------------------
# labeling search


@dataclass(frozen=True)
class LabelingCensus:
    p: int
    q: int
    mode: str  # "exhaustive" or "sampled"
    total: int
    counts: dict
    witnesses: dict  # status -> flat cell assignment tuple
    seed: int | None = None


def _verdict_status(low: float, p: int, q: int, tol: float) -> str:
    if low < -tol:
        return ENTANGLED_NPT
    if (p, q) in _PPT_EXACT_DIMS:
        return SEPARABLE
    return PPT_INCONCLUSIVE


def _min_eig_for_assignment(sigma: np.ndarray, assign, p: int, q: int) -> float:
    n = p * q
    pos = [0] * n
    for v, c in enumerate(assign):
        pos[c] = v
    cell = sigma[np.ix_(pos, pos)]
    pt = cell.reshape(p, q, p, q).transpose(0, 3, 2, 1).reshape(n, n)
    return float(np.linalg.eigvalsh(pt)[0])


def _search_chunk(args):
    g, p, q, tol, seed, count = args
    sigma = density_of_graph(g).mat.to_complex().real
    rng = np.random.default_rng(seed)
    counts = {SEPARABLE: 0, ENTANGLED_NPT: 0, PPT_INCONCLUSIVE: 0}
    witnesses = {}
    for _ in range(count):
        assign = tuple(int(x) for x in rng.permutation(g.n))
        low = _min_eig_for_assignment(sigma, assign, p, q)
        status = _verdict_status(low, p, q, tol)
        counts[status] += 1
        if status not in witnesses:
            witnesses[status] = (assign, low)
    return counts, witnesses


def labeling_search(g: Graph, p: int, q: int, *, tol: float = NPT_TOL,
                    sample: int | None = None, seed: int | None = None,
                    workers: int = 1) -> LabelingCensus:
    """Census of PPT verdicts over vertex labelings of g.

    Exhaustive mode (n <= 8) walks all n! cell assignments, pruned to one
    representative per orbit of Aut(g); counts still refer to all n!
    labelings.  For larger graphs pass `sample` to draw that many uniform
    labelings from a seeded generator.
    """
    n = g.n
    if p * q != n:
        raise SeparabilityError("n must equal p*q")
    if n > 12:
        raise SeparabilityError("labeling search is limited to n <= 12")
    counts = {SEPARABLE: 0, ENTANGLED_NPT: 0, PPT_INCONCLUSIVE: 0}
    witnesses = {}

    if sample is None:
        if n > 8:
            raise SeparabilityError("exhaustive search needs n <= 8; pass a sample budget")
        sigma = density_of_graph(g).mat.to_complex().real
        auts = [a.image for a in automorphisms(g)]
        seen = set()
        for perm in itertools.permutations(range(n)):
            if perm in seen:
                continue
            orbit = {tuple(perm[a[v]] for v in range(n)) for a in auts}
            seen.update(orbit)
            low = _min_eig_for_assignment(sigma, perm, p, q)
            status = _verdict_status(low, p, q, tol)
            counts[status] += len(orbit)
            if status not in witnesses:
                witnesses[status] = perm
        total = math.factorial(n)
        return LabelingCensus(p, q, "exhaustive", total, counts, witnesses)

    if sample < 1:
        raise SeparabilityError("sample budget must be positive")
    if seed is None:
        seed = DEFAULT_SEARCH_SEED
    workers = max(1, int(workers))
    if workers == 1:
        chunk_counts, chunk_wits = _search_chunk((g, p, q, tol, seed, sample))
        merged = [(chunk_counts, chunk_wits)]
    else:
        seeds = [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(workers)]
        base, extra = divmod(sample, workers)
        jobs = [(g, p, q, tol, seeds[i], base + (1 if i < extra else 0))
                for i in range(workers)]
        with multiprocessing.Pool(workers) as pool:
            merged = pool.map(_search_chunk, jobs)
    for chunk_counts, chunk_wits in merged:
        for k, v in chunk_counts.items():
            counts[k] += v
        for status, (assign, low) in chunk_wits.items():
            if status not in witnesses:
                witnesses[status] = assign
    return LabelingCensus(p, q, "sampled", sample, counts, witnesses, seed=seed)
