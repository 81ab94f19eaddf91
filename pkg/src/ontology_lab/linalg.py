"""Dense complex linear algebra shared by every model in the package.

Everything works on plain numpy arrays in complex double precision. The
eigensolver wraps LAPACK but enforces the package-wide contract: ascending
eigenvalues, orthonormal columns, deterministic eigenvector phases, and a
verified residual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Largest matrix dimension hermitian_eigensystem accepts. Dense LAPACK
# handles this comfortably in memory and time on ordinary hardware.
MAX_EIGEN_DIM = 8192

DEFAULT_TOL = 1e-12


class DimMismatchError(ValueError):
    """Operands are not square or their dimensions do not agree."""


class NotHermitianError(ValueError):
    """Matrix fails the Hermitian precondition at the requested tolerance."""


class NoConvergenceError(RuntimeError):
    """Eigensolver failed or its verified residual exceeds the contract."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


def as_square_matrix(a) -> np.ndarray:
    """Coerce to a square complex128 array, rejecting anything else."""
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimMismatchError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise DimMismatchError("matrix dimension must be at least 1")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    a = as_square_matrix(a)
    return float(np.max(np.abs(a - a.conj().T))) <= tol


def is_unitary(u, tol: float = DEFAULT_TOL) -> bool:
    u = as_square_matrix(u)
    gram = u.conj().T @ u
    return float(np.max(np.abs(gram - np.eye(u.shape[0])))) <= tol


def commutator(a, b) -> np.ndarray:
    """A @ B - B @ A for square matrices of equal dimension."""
    a = as_square_matrix(a)
    b = as_square_matrix(b)
    if a.shape != b.shape:
        raise DimMismatchError(
            f"commutator needs equal shapes, got {a.shape} and {b.shape}"
        )
    return a @ b - b @ a


@dataclass(frozen=True)
class Spectrum:
    """Eigendecomposition: ascending real eigenvalues, orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def fix_eigenvector_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its first nonzero component is real positive.

    Makes eigenvector output deterministic across runs and BLAS builds; the
    cutoff for "nonzero" is scaled to each column's largest magnitude.
    """
    v = np.array(vectors, dtype=np.complex128, copy=True)
    for j in range(v.shape[1]):
        col = v[:, j]
        mags = np.abs(col)
        top = mags.max()
        if top == 0.0:
            continue
        lead = int(np.argmax(mags > 1e-12 * top))
        pivot = col[lead]
        col *= np.conj(pivot) / abs(pivot)
    return v


def hermitian_eigensystem(a, tol: float = DEFAULT_TOL) -> Spectrum:
    """Full eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    a : array_like
        Square Hermitian matrix (checked against ``tol * ||a||_F``).
    tol : float
        Tolerance used both for the Hermiticity gate and, scaled by 10,
        for the verified decomposition residual.

    Returns
    -------
    Spectrum
        Ascending eigenvalues; eigenvector columns orthonormal with
        deterministic phases.
    """
    a = as_square_matrix(a)
    n = a.shape[0]
    if n > MAX_EIGEN_DIM:
        raise DimMismatchError(
            f"dimension {n} exceeds the supported maximum {MAX_EIGEN_DIM}"
        )
    scale = frobenius(a)
    if not is_hermitian(a, tol * max(scale, 1.0)):
        raise NotHermitianError(
            "matrix is not Hermitian within tol * ||A||_F"
        )
    # Symmetrize away representation roundoff so LAPACK sees an exactly
    # Hermitian operator; this cannot move eigenvalues more than the gate.
    h = 0.5 * (a + a.conj().T)
    try:
        eigenvalues, vectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver did not converge: {exc}") from exc
    vectors = fix_eigenvector_phases(vectors)

    budget = 10.0 * tol * max(scale, 1.0)
    residual = frobenius(a @ vectors - vectors * eigenvalues)
    ortho = frobenius(vectors.conj().T @ vectors - np.eye(n))
    if residual > budget or ortho > 10.0 * tol:
        raise NoConvergenceError(
            f"decomposition residual {residual:.3e} (orthonormality {ortho:.3e}) "
            f"exceeds budget {budget:.3e}",
            residual=residual,
        )
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=vectors)


def dft_matrix(n: int) -> np.ndarray:
    """Unitary Fourier matrix F[j, k] = exp(2 pi i j k / n) / sqrt(n)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    idx = np.arange(n)
    return np.exp(2j * np.pi * np.outer(idx, idx) / n) / np.sqrt(n)
