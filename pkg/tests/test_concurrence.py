"""Tests for the two-qubit concurrence and the exhaustive 4-vertex census."""

import math
from fractions import Fraction

import numpy as np
import pytest

from graphdm import (
    ConcurrenceError,
    DensityMatrix,
    HermitianMatrix,
    build_graph,
    concurrence,
    density_of_graph,
    four_vertex_census,
    path_graph,
    pure_state_concurrence,
    spin_flip,
)
from graphdm.concurrence import census_to_csv_rows, census_to_json_dict

F = Fraction


def test_single_entangled_edge_is_maximal():
    # the edge joins cells (0,1) and (1,0): a Bell state
    rho = density_of_graph(build_graph(4, [(1, 2)]))
    res = concurrence(rho)
    assert abs(res.value - 1.0) < 1e-12
    assert len(res.lambdas) == 4
    assert res.lambdas[0] >= res.lambdas[1] >= res.lambdas[2] >= res.lambdas[3]


def test_separable_edge_has_zero_concurrence():
    rho = density_of_graph(build_graph(4, [(0, 1)]))
    assert concurrence(rho).value == 0.0


def test_maximally_mixed_state():
    eye = HermitianMatrix.identity(4).scale(F(1, 4))
    assert concurrence(DensityMatrix(eye)).value == 0.0


def test_spin_flip_is_exact_involution():
    rho = density_of_graph(path_graph(4))
    flipped = spin_flip(rho)
    assert flipped.exact_real
    back = spin_flip(DensityMatrix(flipped))
    assert back.exact_equal(rho.mat)


def test_spin_flip_of_identity():
    eye = HermitianMatrix.identity(4).scale(F(1, 4))
    assert spin_flip(DensityMatrix(eye)).exact_equal(eye)


def test_concurrence_requires_two_qubits():
    with pytest.raises(ConcurrenceError):
        concurrence(density_of_graph(path_graph(3)))
    with pytest.raises(ConcurrenceError):
        spin_flip(density_of_graph(path_graph(2)))


def test_pure_state_concurrence_known_values():
    bell = np.array([1, 0, 0, -1]) / math.sqrt(2)
    assert abs(pure_state_concurrence(bell) - 1.0) < 1e-12
    product = np.array([1, 0, 0, 0], dtype=float)
    assert abs(pure_state_concurrence(product)) < 1e-12
    with pytest.raises(ConcurrenceError):
        pure_state_concurrence(np.array([1.0, 0, 0, 1.0]))  # not normalized


def test_pure_state_agrees_with_density_formula():
    rng = np.random.default_rng(42)
    for _ in range(100):
        psi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        psi /= np.linalg.norm(psi)
        rho = DensityMatrix(HermitianMatrix(np.outer(psi, psi.conj()), exact=False))
        a = pure_state_concurrence(psi)
        b = concurrence(rho).value
        assert abs(a - b) < 1e-8


def test_census_class_counts():
    rep = four_vertex_census()
    assert rep.class_count_total == 11
    assert rep.class_count_with_edges == 10
    assert len(rep.rows) == 10
    assert rep.ever_entangled_count == 7
    assert rep.always_entangled_count == 2
    # labeled-graph total: sum of 24/|Aut| over all classes plus the empty one
    assert sum(24 // r.aut_order for r in rep.rows) + 1 == 2 ** 6


def test_census_entangled_labelings_and_values():
    rep = four_vertex_census()
    # keyed by (edge count, entangled labeling count) -> single concurrence value
    facts = {}
    for row in rep.rows:
        assert row.labeling_count == 24
        assert 0 <= row.entangled_labelings <= 24
        assert row.ever_entangled == (row.entangled_labelings > 0)
        assert row.always_entangled == (row.entangled_labelings == 24)
        for v in row.concurrence_values:
            assert -1e-12 < v <= 1 + 1e-12
        if row.ever_entangled:
            assert len(row.concurrence_values) == 1
            deg = [0, 0, 0, 0]
            for (u, v) in row.edges:  # 1-based in the report
                deg[u - 1] += 1
                deg[v - 1] += 1
            key = (row.edge_count, row.entangled_labelings, max(deg))
            facts[key] = row.concurrence_values[0]
        else:
            assert row.concurrence_values == ()
    expected = {
        (1, 8, 1): 1.0,      # single edge
        (2, 16, 2): 0.5,     # path of three vertices plus an isolate
        (3, 24, 3): 1 / 3,   # three-point star
        (3, 24, 2): 1 / 3,   # triangle plus an isolated vertex
        (3, 8, 2): 1 / 3,    # path on four vertices
        (4, 16, 3): 0.25,    # triangle with a tail
        (5, 8, 3): 0.2,      # two triangles sharing an edge
    }
    assert set(facts) == set(expected)
    for key, want in expected.items():
        assert abs(facts[key] - want) < 1e-9, key


def test_census_never_entangled_classes():
    rep = four_vertex_census()
    quiet = [r for r in rep.rows if not r.ever_entangled]
    # perfect matching, 4-cycle and complete graph stay separable
    assert sorted(r.edge_count for r in quiet) == [2, 4, 6]


def test_census_exports():
    rep = four_vertex_census()
    blob = census_to_json_dict(rep)
    assert blob["always_entangled_count"] == 2
    assert len(blob["classes"]) == 10
    rows = census_to_csv_rows(rep)
    assert rows[0][0] == "class_id"
    assert len(rows) == 11  # header + 10 classes
    widths = {len(r) for r in rows}
    assert len(widths) == 1  # rectangular table
