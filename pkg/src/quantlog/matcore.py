"""Dense complex linear algebra helpers.

Matrices are plain square ``complex128`` numpy arrays indexed ``(i, j)``
row-major; vectors are 1-d ``complex128`` arrays. :func:`as_matrix` and
:func:`as_vector` validate and coerce inputs at the module boundaries.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatch,
    EigOnNegativeRealAxis,
    IllConditionedEigenbasis,
    NotHermitian,
    SingularMatrix,
)

HERMITIAN_TOL = 1e-12
SINGULAR_RTOL = 1e-12
EIGENBASIS_COND_MAX = 1e6


def as_matrix(A) -> np.ndarray:
    """Return ``A`` as a square complex128 array, raising on bad shape."""
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {M.shape}")
    return M


def as_vector(b) -> np.ndarray:
    v = np.asarray(b, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] < 1:
        raise DimensionMismatch(f"expected a non-empty vector, got shape {v.shape}")
    return v


def is_hermitian(A, tol: float = HERMITIAN_TOL) -> bool:
    A = as_matrix(A)
    return bool(np.max(np.abs(A - A.conj().T)) <= tol)


def spectral_norm(A) -> float:
    """Largest singular value of ``A``."""
    A = as_matrix(A)
    return float(np.linalg.norm(A, 2))


def inverse(A) -> np.ndarray:
    """Inverse of ``A``.

    Raises :class:`SingularMatrix` when the smallest singular value is at or
    below ``1e-12 * ||A||``.
    """
    A = as_matrix(A)
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[-1] <= SINGULAR_RTOL * sv[0]:
        raise SingularMatrix(f"smallest singular value {sv[-1]:.3e} vs norm {sv[0]:.3e}")
    return np.linalg.inv(A)


def condition_number(A) -> float:
    A = as_matrix(A)
    sv = np.linalg.svd(A, compute_uv=False)
    return float(sv[0] / sv[-1])


def eigendecompose_hermitian(A) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, real) and a unitary eigenvector matrix."""
    A = as_matrix(A)
    if not is_hermitian(A):
        raise NotHermitian("matrix is not Hermitian within 1e-12")
    # symmetrize so eigh sees exactly the Hermitian part
    w, V = np.linalg.eigh(0.5 * (A + A.conj().T))
    return w, V


def hermitian_function(A, func) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum."""
    w, V = eigendecompose_hermitian(A)
    return (V * func(w)) @ V.conj().T


def reference_log(A) -> np.ndarray:
    """Principal matrix logarithm via eigendecomposition.

    Works for diagonalizable ``A`` with no eigenvalue on the closed negative
    real axis. This is the oracle every other logarithm in the package is
    checked against.
    """
    A = as_matrix(A)
    if is_hermitian(A):
        w, V = eigendecompose_hermitian(A)
        if np.any(w <= 0.0):
            raise EigOnNegativeRealAxis(f"eigenvalue {w.min():.3e} on the closed negative real axis")
        return (V * np.log(w)) @ V.conj().T

    lam, V = np.linalg.eig(A)
    scale = max(1.0, float(np.max(np.abs(lam))))
    on_axis = (np.abs(lam.imag) <= 1e-14 * scale) & (lam.real <= 0.0)
    if np.any(on_axis):
        raise EigOnNegativeRealAxis(f"eigenvalues on the closed negative real axis: {lam[on_axis]}")
    cond = np.linalg.cond(V)
    if not np.isfinite(cond) or cond >= EIGENBASIS_COND_MAX:
        raise IllConditionedEigenbasis(f"eigenvector condition number {cond:.3e}")
    return (V * np.log(lam)) @ np.linalg.inv(V)
