"""Tests for the exact Hermitian matrix layer and the eigensolver wrapper."""

import math
from fractions import Fraction

import numpy as np
import pytest

from graphdm import (
    HermitianMatrix,
    LinalgError,
    eigensystem,
    exact_projector,
    is_psd,
    kron,
    psd_sqrt,
)

F = Fraction


def test_exact_construction_and_entries():
    h = HermitianMatrix([[F(1, 2), F(-1, 2)], [F(-1, 2), F(1, 2)]])
    assert h.exact_real
    assert h.dim == 2
    assert h.trace() == 1
    assert h.entry(0, 1) == F(-1, 2)
    assert isinstance(h.entry(0, 0), Fraction)
    # integer input promotes to exact fractions
    g = HermitianMatrix([[1, 0], [0, 2]])
    assert g.exact_real and g.entry(1, 1) == 2


def test_construction_rejects_bad_shapes_and_asymmetry():
    with pytest.raises(LinalgError):
        HermitianMatrix([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(LinalgError):
        HermitianMatrix([[F(0), F(1)], [F(2), F(0)]])
    with pytest.raises(LinalgError):
        HermitianMatrix(np.array([[0.0, 1.0], [0.5, 0.0]]), exact=False)
    with pytest.raises(LinalgError):
        HermitianMatrix([[0.5]], exact=True)  # floats are not exact-rational
    # without the flag, float input just takes the inexact path
    assert not HermitianMatrix([[0.5]]).exact_real


def test_complex_path_symmetrizes():
    h = HermitianMatrix(np.array([[1.0, 1j], [-1j, 2.0]]))
    assert not h.exact_real
    assert h.entry(0, 1) == 1j
    np.testing.assert_allclose(h.to_complex(), h.to_complex().conj().T)
    with pytest.raises(LinalgError):
        h.to_real()  # imaginary parts present
    with pytest.raises(LinalgError):
        h.exact_equal(h)


def test_arithmetic_stays_exact():
    a = HermitianMatrix([[F(1), F(2)], [F(2), F(0)]])
    b = HermitianMatrix([[F(0), F(1, 3)], [F(1, 3), F(1)]])
    s = a + b
    assert s.exact_real and s.entry(0, 1) == F(7, 3)
    d = a - b
    assert d.entry(1, 1) == -1
    scaled = a.scale(F(1, 4))
    assert scaled.entry(0, 1) == F(1, 2)
    assert (2 * a).entry(0, 0) == 2


def test_conjugate_by_exact_permutation():
    h = HermitianMatrix([[F(1), F(2)], [F(2), F(3)]])
    swap = np.empty((2, 2), dtype=object)
    swap[:] = [[F(0), F(1)], [F(1), F(0)]]
    g = h.conjugate_by(swap)
    assert g.exact_real
    assert g.entry(0, 0) == 3 and g.entry(1, 1) == 1


def test_exact_projector():
    p = exact_projector([F(1), F(-1)])
    expected = HermitianMatrix([[F(1, 2), F(-1, 2)], [F(-1, 2), F(1, 2)]])
    assert p.exact_equal(expected)
    # idempotent: P conjugated into itself through P equals P
    sq = p.conjugate_by(p.data)
    assert sq.exact_equal(p)
    with pytest.raises(LinalgError):
        exact_projector([F(0), F(0)])


def test_kron_block_structure():
    a = HermitianMatrix([[F(1), F(0)], [F(0), F(2)]])
    b = HermitianMatrix([[F(0), F(1)], [F(1), F(0)]])
    k = kron(a, b)
    assert k.dim == 4 and k.exact_real
    assert k.entry(0, 1) == 1 and k.entry(2, 3) == 2 and k.entry(0, 2) == 0


def test_eigensystem_matches_numpy_on_random_symmetric():
    rng = np.random.default_rng(7)
    for dim in [2, 3, 5, 8]:
        raw = rng.standard_normal((dim, dim))
        sym = (raw + raw.T) / 2
        h = HermitianMatrix(sym, exact=False)
        spec = eigensystem(h)
        np.testing.assert_allclose(
            spec.eigenvalues, np.linalg.eigvalsh(sym), atol=1e-10)
        vecs = spec.eigenvectors
        np.testing.assert_allclose(
            vecs.conj().T @ vecs, np.eye(dim), atol=1e-10)
        recon = (vecs * np.array(spec.eigenvalues)) @ vecs.conj().T
        np.testing.assert_allclose(recon, sym, atol=1e-10)


def test_eigensystem_groups_multiplicities():
    h = HermitianMatrix([[F(1), F(0), F(0)],
                         [F(0), F(1), F(0)],
                         [F(0), F(0), F(3)]])
    spec = eigensystem(h)
    assert spec.multiplicities == ((1.0, 2), (3.0, 1))
    assert spec.distinct() == (1.0, 3.0)


def test_is_psd_boundary():
    ok, low = is_psd(HermitianMatrix([[F(1), F(-1)], [F(-1), F(1)]]))
    assert ok and abs(low) < 1e-12
    ok, low = is_psd(HermitianMatrix([[F(1), F(2)], [F(2), F(1)]]))
    assert not ok and abs(low - (-1.0)) < 1e-12


def test_psd_sqrt_squares_back():
    rng = np.random.default_rng(11)
    for dim in [2, 4, 6]:
        raw = rng.standard_normal((dim, dim))
        psd = raw @ raw.T  # Gram matrix, PSD by construction
        h = HermitianMatrix(psd, exact=False)
        r = psd_sqrt(h)
        sq = r.to_complex() @ r.to_complex()
        np.testing.assert_allclose(sq, psd, atol=1e-9)
    with pytest.raises(LinalgError):
        psd_sqrt(HermitianMatrix([[F(-1)]]))


def test_identity_and_zeros():
    i3 = HermitianMatrix.identity(3)
    assert i3.exact_real and i3.trace() == 3
    z = HermitianMatrix.zeros(2)
    assert z.trace() == 0
    assert math.isclose(i3.max_abs_diff(i3), 0.0)
