"""Hermitian matrices with an exact-rational construction path.

Matrices built from graphs stay exact (Fraction entries in object arrays)
through sums, scalings, Kronecker products, and conjugations; floating
point enters only at the eigensolver boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

GROUP_TOL = 1e-8
PSD_TOL = 1e-9


class LinalgError(ValueError):
    """Invalid matrix construction or operation."""


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    raise LinalgError(f"entry {x!r} is not exact-rational")


class HermitianMatrix:
    """Square Hermitian matrix.

    Exact matrices hold Fraction entries in a dtype=object array and compare
    exactly; inexact ones hold complex128 and are symmetrized on input after
    a Hermiticity check.
    """

    __slots__ = ("data", "exact_real")

    def __init__(self, rows, exact: bool | None = None):
        arr = np.asarray(rows)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise LinalgError("matrix must be square")
        if exact is None:
            exact = arr.dtype == object or np.issubdtype(arr.dtype, np.integer)
        if exact:
            data = np.empty(arr.shape, dtype=object)
            for i in range(arr.shape[0]):
                for j in range(arr.shape[1]):
                    data[i, j] = _to_fraction(arr[i, j])
            if not (data == data.T).all():
                raise LinalgError("matrix is not symmetric")
        else:
            data = np.asarray(arr, dtype=complex)
            scale = max(1.0, np.abs(data).max()) if data.size else 1.0
            if np.abs(data - data.conj().T).max() > 1e-10 * scale:
                raise LinalgError("matrix is not Hermitian")
            data = (data + data.conj().T) / 2
        data.setflags(write=False)
        self.data = data
        self.exact_real = bool(exact)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @classmethod
    def zeros(cls, dim: int, exact: bool = True) -> "HermitianMatrix":
        if exact:
            return cls(np.full((dim, dim), Fraction(0), dtype=object))
        return cls(np.zeros((dim, dim), dtype=complex), exact=False)

    @classmethod
    def identity(cls, dim: int, exact: bool = True) -> "HermitianMatrix":
        if exact:
            data = np.full((dim, dim), Fraction(0), dtype=object)
            for i in range(dim):
                data[i, i] = Fraction(1)
            return cls(data)
        return cls(np.eye(dim, dtype=complex), exact=False)

    def entry(self, i: int, j: int):
        return self.data[i, j]

    def to_complex(self) -> np.ndarray:
        if self.exact_real:
            return np.array([[complex(x) for x in row] for row in self.data])
        return np.array(self.data)

    def to_real(self) -> np.ndarray:
        c = self.to_complex()
        if np.abs(c.imag).max() > 1e-12:
            raise LinalgError("matrix has non-real entries")
        return c.real.copy()

    def trace(self):
        return self.data.trace()

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        if self.exact_real and other.exact_real:
            return HermitianMatrix(self.data + other.data)
        return HermitianMatrix(self.to_complex() + other.to_complex(), exact=False)

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        if self.exact_real and other.exact_real:
            return HermitianMatrix(self.data - other.data)
        return HermitianMatrix(self.to_complex() - other.to_complex(), exact=False)

    def scale(self, s) -> "HermitianMatrix":
        if self.exact_real and isinstance(s, (int, Fraction, np.integer)):
            return HermitianMatrix(self.data * _to_fraction(s))
        s = complex(s)
        if abs(s.imag) > 0:
            raise LinalgError("scaling a Hermitian matrix needs a real factor")
        return HermitianMatrix(self.to_complex() * s.real, exact=False)

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    def conjugate_by(self, m) -> "HermitianMatrix":
        """m @ self @ m^dagger, exact when both operands are exact-rational."""
        m = np.asarray(m)
        if self.exact_real and m.dtype == object:
            return HermitianMatrix(np.dot(np.dot(m, self.data), m.T))
        mc = m.astype(complex)
        return HermitianMatrix(mc @ self.to_complex() @ mc.conj().T, exact=False)

    def exact_equal(self, other: "HermitianMatrix") -> bool:
        if not (self.exact_real and other.exact_real):
            raise LinalgError("exact comparison needs exact-rational matrices")
        return self.dim == other.dim and bool((self.data == other.data).all())

    def max_abs_diff(self, other: "HermitianMatrix") -> float:
        return float(np.abs(self.to_complex() - other.to_complex()).max())

    def __repr__(self):
        kind = "exact" if self.exact_real else "complex"
        return f"HermitianMatrix(dim={self.dim}, {kind})"


def exact_projector(vec) -> HermitianMatrix:
    """Projector v v^T / (v . v) for a rational (unnormalized) vector."""
    v = [_to_fraction(x) for x in vec]
    norm2 = sum(x * x for x in v)
    if norm2 == 0:
        raise LinalgError("zero vector has no projector")
    dim = len(v)
    data = np.empty((dim, dim), dtype=object)
    for i in range(dim):
        for j in range(dim):
            data[i, j] = v[i] * v[j] / norm2
    return HermitianMatrix(data)


def kron(a: HermitianMatrix, b: HermitianMatrix) -> HermitianMatrix:
    if a.exact_real and b.exact_real:
        return HermitianMatrix(np.kron(a.data, b.data))
    return HermitianMatrix(np.kron(a.to_complex(), b.to_complex()), exact=False)


@dataclass(frozen=True)
class SpectrumResult:
    """Eigenvalues in ascending order with tolerance-grouped multiplicities.

    eigenvectors holds orthonormal columns aligned with `eigenvalues`.
    """

    eigenvalues: tuple[float, ...]
    multiplicities: tuple[tuple[float, int], ...]
    eigenvectors: np.ndarray

    def distinct(self) -> tuple[float, ...]:
        return tuple(v for (v, _) in self.multiplicities)


def _group(values, tol: float):
    groups = []
    for v in values:
        if groups and v - groups[-1][-1] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple((float(np.mean(g)), len(g)) for g in groups)


def eigensystem(h: HermitianMatrix, group_tol: float = GROUP_TOL) -> SpectrumResult:
    """Full spectral decomposition via the symmetric/Hermitian eigensolver."""
    if h.exact_real:
        mat = h.data.astype(float)
    else:
        mat = np.asarray(h.data)
        if np.abs(mat.imag).max() < 1e-300:
            mat = mat.real
    vals, vecs = np.linalg.eigh(mat)
    recon = (vecs * vals) @ vecs.conj().T
    err = np.abs(recon - mat).max()
    if err > 1e-10 * h.dim:
        raise LinalgError(f"eigendecomposition failed to reconstruct (err={err:g})")
    return SpectrumResult(tuple(float(v) for v in vals), _group(vals, group_tol), vecs)


def is_psd(h: HermitianMatrix, tol: float = PSD_TOL) -> tuple[bool, float]:
    """(matrix is positive semidefinite within tol, smallest eigenvalue)."""
    if h.exact_real:
        mat = h.data.astype(float)
    else:
        mat = np.asarray(h.data)
    vals = np.linalg.eigvalsh(mat)
    low = float(vals[0])
    return low >= -tol, low


def psd_sqrt(h: HermitianMatrix) -> HermitianMatrix:
    """Principal square root of a positive semidefinite matrix."""
    spec = eigensystem(h)
    vals = np.array(spec.eigenvalues)
    if vals[0] < -1e-10:
        raise LinalgError(f"matrix is not PSD (eigenvalue {vals[0]:g})")
    root = np.sqrt(np.clip(vals, 0.0, None))
    vecs = spec.eigenvectors
    return HermitianMatrix((vecs * root) @ vecs.conj().T, exact=False)
