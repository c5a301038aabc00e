"""Brute-force references for r(A) and W(A).

These share nothing with :func:`numrange.fov.numerical_radius` beyond the
objective itself. The theta-grid oracle is the equality reference
(accurate to ``O(||A|| (2 pi / N)^2)``); the ascent oracle only ever
produces attained values and is therefore a lower bound.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .errors import DegenerateMatrixError
from .linalg_kernel import as_matrix


@dataclass(frozen=True)
class OracleResult:
    value: float
    method: str
    evaluations: int
    seed: int | None = None
    maximizer: np.ndarray | None = None


def _check_size(M):
    if M.shape[0] < 2:
        raise DegenerateMatrixError("oracles require n >= 2")


def radius_grid_oracle(A, N: int = 100_000, chunk: int = 4096) -> OracleResult:
    """``max_j lambda_max(H_{theta_j})`` over ``N`` equispaced angles.

    Each ``H_theta`` is fully diagonalised. Since ``H_{theta + pi} =
    -H_theta``, an even ``N`` only needs the first half of the angles: the
    top eigenvalue at ``theta + pi`` is minus the bottom one at ``theta``.
    """
    M = as_matrix(A)
    _check_size(M)
    if N < 10_000:
        raise ValueError("N must be at least 1e4")
    half = N // 2 if N % 2 == 0 else N
    thetas = 2 * np.pi * np.arange(half) / N
    best = -np.inf
    for i in range(0, half, chunk):
        e = np.exp(1j * thetas[i:i + chunk])[:, None, None]
        R = e * M
        H = (R + np.conj(np.swapaxes(R, 1, 2))) / 2
        w = np.linalg.eigvalsh(H)
        best = max(best, float(w[:, -1].max()))
        if half < N:
            best = max(best, float(-w[:, 0].min()))
    return OracleResult(max(best, 0.0), "theta_grid", N)


def radius_ascent_oracle(A, restarts: int = 32, iters: int = 2000, seed: int = 0,
                         tol: float = 1e-15) -> OracleResult:
    """Best ``|<Az, z>|`` found by rotated Rayleigh-quotient ascent.

    From random unit starts iterate ``z <- normalize(e^{-i phi} A z +
    e^{i phi} A^* z + 2 s z)`` with ``phi = arg <Az, z>``. The shift
    ``s = ||A||`` makes the iteration matrix positive semidefinite, so
    ``|<Az, z>|`` never decreases.
    """
    M = as_matrix(A)
    _check_size(M)
    if restarts < 8:
        raise ValueError("restarts must be at least 8")
    n = M.shape[0]
    Mh = M.conj().T
    shift = np.linalg.norm(M, 2)
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((n, restarts)) + 1j * rng.standard_normal((n, restarts))
    Z /= np.linalg.norm(Z, axis=0)
    evals = 0
    prev = np.zeros(restarts)
    for _ in range(iters):
        AZ = M @ Z
        rq = np.einsum("ij,ij->j", Z.conj(), AZ)
        val = np.abs(rq)
        evals += restarts
        if np.max(np.abs(val - prev)) <= tol * max(shift, 1.0):
            break
        prev = val
        ph = np.exp(1j * np.angle(rq))
        W = AZ / ph + (Mh @ Z) * ph + 2 * shift * Z
        Z = W / np.linalg.norm(W, axis=0)
    AZ = M @ Z
    rq = np.einsum("ij,ij->j", Z.conj(), AZ)
    j = int(np.argmax(np.abs(rq)))
    return OracleResult(float(np.abs(rq[j])), "sphere_ascent", evals + restarts, seed, Z[:, j])


def random_unit_vectors(n: int, count: int, seed=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    Z = rng.standard_normal((n, count)) + 1j * rng.standard_normal((n, count))
    return Z / np.linalg.norm(Z, axis=0)


def wa_sample_points(A, count: int, seed: int = 0, return_vectors: bool = False):
    """``<Az, z>`` for ``count`` random unit vectors; all lie in W(A)."""
    M = as_matrix(A)
    if count < 1:
        raise ValueError("count must be positive")
    Z = random_unit_vectors(M.shape[0], count, seed)
    pts = np.einsum("ij,ij->j", Z.conj(), M @ Z)
    return (pts, Z) if return_vectors else pts


def convexity_witness(A, z1, z2, t: float, restarts: int = 8, seed: int = 0):
    """Unit ``z`` with ``<Az, z>`` close to ``t zeta1 + (1-t) zeta2``.

    ``zeta_i = <A z_i, z_i>``. The search runs over unit vectors in
    ``span{z1, z2}``: the field of values of that 2-d compression is an
    ellipse containing both points, hence the whole segment. Returns
    ``(z, distance)``.
    """
    M = as_matrix(A)
    z1 = np.asarray(z1, dtype=complex) / np.linalg.norm(z1)
    z2 = np.asarray(z2, dtype=complex) / np.linalg.norm(z2)
    target = t * np.vdot(z1, M @ z1) + (1 - t) * np.vdot(z2, M @ z2)
    Q, _ = np.linalg.qr(np.column_stack([z1, z2]))
    C = Q.conj().T @ M @ Q

    def vec(p):
        c = np.array([p[0] + 1j * p[1], p[2] + 1j * p[3]])
        return c / np.linalg.norm(c)

    def obj(p):
        c = vec(p)
        return abs(np.vdot(c, C @ c) - target) ** 2

    rng = np.random.default_rng(seed)
    best_p, best_f = None, np.inf
    for _ in range(restarts):
        res = minimize(obj, rng.standard_normal(4), method="BFGS",
                       options={"gtol": 1e-14})
        if res.fun < best_f:
            best_p, best_f = res.x, res.fun
        if best_f < 1e-20:
            break
    z = Q @ vec(best_p)
    return z, float(np.sqrt(best_f))
