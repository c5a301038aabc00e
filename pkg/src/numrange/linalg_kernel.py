"""Dense complex linear algebra used by the rest of the package.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Vectors are
1-d arrays and are treated as column vectors. The inner product follows
``<z, w> = w^* z`` (linear in the first slot, conjugate-linear in the
second); use :func:`inner` instead of ``np.vdot`` to avoid swapping them.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    InvalidMatrixError,
    NotHermitianError,
    NotOrthonormalError,
)

DEFAULT_RANK_TOL = 1e-10

__all__ = [
    "DEFAULT_RANK_TOL",
    "OrthoSplit",
    "SvdResult",
    "as_matrix",
    "as_vector",
    "haar_unitary",
    "hermitian_eigmax",
    "inner",
    "matrix_power",
    "orthogonal_decompose",
    "orthonormal_complete",
    "orthonormality_error",
    "random_complex_matrix",
    "rayleigh",
    "spectral_norm",
    "svd",
]


class SvdResult(NamedTuple):
    """``A = U @ diag(s) @ V^*`` with ``s`` sorted descending.

    Note that ``V`` is stored, not ``V^*``: column ``i`` of ``V`` is the
    right singular vector paired with column ``i`` of ``U``.
    """

    U: np.ndarray
    s: np.ndarray
    V: np.ndarray


class OrthoSplit(NamedTuple):
    """``z = x + y`` with ``x`` in R(A^*) and ``y`` in N(A)."""

    x: np.ndarray
    y: np.ndarray
    degenerate: bool = False


def as_matrix(A, *, square: bool = True) -> np.ndarray:
    """Validate ``A`` and return it as a 2-d complex128 array (a copy)."""
    try:
        M = np.array(A, dtype=np.complex128)
    except (TypeError, ValueError) as exc:
        raise InvalidMatrixError(f"cannot interpret input as a complex matrix: {exc}")
    if M.ndim != 2 or M.shape[0] == 0 or M.shape[1] == 0:
        raise InvalidMatrixError(f"expected a non-empty 2-d matrix, got shape {M.shape}")
    if square and M.shape[0] != M.shape[1]:
        raise InvalidMatrixError(f"matrix must be square, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InvalidMatrixError("matrix has non-finite entries")
    return M


def as_vector(z, n: int | None = None) -> np.ndarray:
    v = np.array(z, dtype=np.complex128).reshape(-1)
    if n is not None and v.shape[0] != n:
        raise InvalidMatrixError(f"vector has length {v.shape[0]}, expected {n}")
    if not np.all(np.isfinite(v)):
        raise InvalidMatrixError("vector has non-finite entries")
    return v


def inner(z: np.ndarray, w: np.ndarray) -> complex:
    """``<z, w> = w^* z``."""
    return complex(np.vdot(w, z))


def rayleigh(A: np.ndarray, z: np.ndarray) -> complex:
    """``<Az, z>`` (no normalisation of ``z``)."""
    return inner(A @ z, z)


def svd(A) -> SvdResult:
    """Full SVD of a square matrix.

    No rank decisions are taken here; thresholding tiny singular values is
    left to the caller.
    """
    M = as_matrix(A)
    U, s, Vh = np.linalg.svd(M)
    return SvdResult(U, s, Vh.conj().T)


def spectral_norm(A) -> float:
    return float(svd(A).s[0])


def hermitian_eigmax(H, tol: float = 1e-10) -> tuple[float, np.ndarray]:
    """Largest eigenvalue of a Hermitian matrix and a unit eigenvector.

    The input is symmetrised before calling LAPACK, so small rounding
    asymmetries (below ``tol`` relative in Frobenius norm) are tolerated.
    """
    M = as_matrix(H)
    scale = np.linalg.norm(M)
    if np.linalg.norm(M - M.conj().T) > tol * scale:
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    w, Q = np.linalg.eigh((M + M.conj().T) / 2)
    return float(w[-1]), Q[:, -1]


def matrix_power(A, k: int) -> np.ndarray:
    """``A**k`` by repeated products; ``k = 0`` gives the identity."""
    M = as_matrix(A)
    if int(k) != k or k < 0:
        raise ValueError(f"power must be a non-negative integer, got {k!r}")
    return np.linalg.matrix_power(M, int(k))


def orthogonal_decompose(A, z, rank_tol: float = DEFAULT_RANK_TOL) -> OrthoSplit:
    """Split ``z`` into its components in R(A^*) and N(A).

    R(A^*) is taken as the span of right singular vectors whose singular
    value exceeds ``rank_tol * sigma_max``. For the zero matrix the split is
    ``x = 0, y = z`` and ``degenerate`` is set.
    """
    M = as_matrix(A)
    v = as_vector(z, M.shape[0])
    if not 0 < rank_tol < 1:
        raise ValueError("rank_tol must lie in (0, 1)")
    U, s, V = svd(M)
    if s[0] == 0.0:
        return OrthoSplit(np.zeros_like(v), v.copy(), True)
    Vr = V[:, s > rank_tol * s[0]]
    x = Vr @ (Vr.conj().T @ v)
    return OrthoSplit(x, v - x, False)


def orthonormal_complete(V, tol: float = 1e-8) -> np.ndarray:
    """Extend ``k`` orthonormal columns to an ``n x n`` unitary matrix.

    ``V`` may be an ``n x k`` array or a sequence of ``k`` vectors. The first
    ``k`` columns of the result are exactly the given ones. With ``k = 0``
    there is nothing to extend and the identity is returned, which needs ``n``:
    pass an ``n x 0`` array in that case.
    """
    if isinstance(V, np.ndarray) and V.ndim == 2:
        B = np.array(V, dtype=np.complex128)
    else:
        cols = [as_vector(v) for v in V]
        if not cols:
            raise ValueError("empty sequence: pass an (n, 0) array to fix n")
        B = np.column_stack(cols)
    n, k = B.shape
    if k == 0:
        return np.eye(n, dtype=np.complex128)
    if k > n:
        raise NotOrthonormalError(f"{k} columns cannot be orthonormal in C^{n}")
    if np.linalg.norm(B.conj().T @ B - np.eye(k)) > tol:
        raise NotOrthonormalError("input columns are not orthonormal within tolerance")
    # trailing left singular vectors of B span its orthogonal complement
    W = np.linalg.svd(B, full_matrices=True)[0]
    return np.hstack([B, W[:, k:]])


def haar_unitary(n: int, seed: int | np.random.Generator | None = None) -> np.ndarray:
    """Haar-distributed ``n x n`` unitary.

    QR of a complex Ginibre matrix, with the phases of ``diag(R)`` moved
    into ``Q`` so that the distribution is exactly Haar.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diag(R)
    ph = np.where(d == 0, 1.0, d / np.abs(d))
    return Q * ph[np.newaxis, :]


def random_complex_matrix(n: int, seed=None, scale: float = 1.0) -> np.ndarray:
    """Complex Ginibre matrix, handy for tests and demos."""
    rng = np.random.default_rng(seed)
    return scale * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))


def orthonormality_error(Q: np.ndarray) -> float:
    k = Q.shape[1]
    return float(np.linalg.norm(Q.conj().T @ Q - np.eye(k)))

