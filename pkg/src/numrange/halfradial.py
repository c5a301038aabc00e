"""Half-radial matrices: ``||A|| = 2 r(A)``.

Certification, the maximiser sets Theta_A / Omega_A, the unitary reduction
to ``(||A|| I_m (x) J) (+) B`` and random synthesis of half-radial matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import block_diag

from ._types import Check
from .errors import (
    DegenerateMatrixError,
    NotHalfRadialError,
    NumericalFailure,
    PreconditionError,
)
from .fov import (
    DEFAULT_BOUNDARY_COUNT,
    DEFAULT_GRID,
    DEFAULT_REFINE_TOL,
    fov_disk_check,
    numerical_radius,
)
from .linalg_kernel import (
    as_matrix,
    as_vector,
    haar_unitary,
    inner,
    orthogonal_decompose,
    orthonormal_complete,
    orthonormality_error,
    rayleigh,
    svd,
)

DEFAULT_EPS = 1e-8
DEFAULT_TAU = 1e-8
BORDERLINE_FACTOR = 100.0

J = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)


@dataclass(frozen=True)
class MaxSingularSubspaces:
    sigma_max: float
    multiplicity: int
    V_basis: np.ndarray
    U_basis: np.ndarray
    cluster_tol: float
    singular_values: np.ndarray = field(repr=False, default=None)


@dataclass(frozen=True)
class HalfRadialReport:
    verdict: bool
    norm: float
    radius: float
    gap: float
    tol: float
    diagnostics: dict
    multiplicity: int = 0
    borderline: bool = False
    theta_star: float = 0.0

    def __bool__(self):
        return self.verdict

    def diagnostics_dict(self):
        return {name: chk.as_dict() for name, chk in self.diagnostics.items()}


@dataclass(frozen=True)
class MaximizerSample:
    z: np.ndarray
    v: np.ndarray
    u: np.ndarray
    alpha: float
    beta: float
    x: np.ndarray
    y: np.ndarray
    gamma: complex


@dataclass(frozen=True)
class CanonicalDecomposition:
    Q: np.ndarray
    m: int
    sigma: float
    B: np.ndarray
    residual: float
    B_norm: float
    B_radius: float

    def block_form(self):
        return shift_block_form(self.m, self.sigma, self.B)


def require_nondegenerate(A) -> np.ndarray:
    M = as_matrix(A)
    if M.shape[0] < 2:
        raise DegenerateMatrixError("n = 1: the theory assumes A is nonzero and n >= 2")
    if not np.any(M):
        raise DegenerateMatrixError("zero matrix: the theory assumes A is nonzero and n >= 2")
    return M


def shift_block_form(m: int, sigma: float, B=None) -> np.ndarray:
    """``(sigma I_m (x) J) (+) B``."""
    top = sigma * np.kron(np.eye(m), J)
    if B is None or np.size(B) == 0:
        return top.astype(complex)
    return block_diag(top, np.asarray(B, dtype=complex)).astype(complex)


def max_singular_subspaces(A, eps: float = DEFAULT_EPS) -> MaxSingularSubspaces:
    """Orthonormal bases of V_max(A) and U_max(A).

    The multiplicity counts singular values ``>= (1 - eps) sigma_max``. The
    columns keep the SVD pairing ``A v_i = sigma_i u_i``.
    """
    M = as_matrix(A)
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    U, s, V = svd(M)
    if s[0] == 0.0:
        raise DegenerateMatrixError("zero matrix has no maximum singular subspace")
    m = int(np.count_nonzero(s >= (1 - eps) * s[0]))
    return MaxSingularSubspaces(float(s[0]), m, V[:, :m], U[:, :m], eps, s)


def structural_diagnostics(A, eps: float = DEFAULT_EPS, tau: float = DEFAULT_TAU,
                           subspaces: MaxSingularSubspaces | None = None) -> dict:
    """Necessary conditions on the maximum singular subspaces.

    Every half-radial matrix passes all five; Example-2-type matrices show
    they are not sufficient.
    """
    M = require_nondegenerate(A)
    n = M.shape[0]
    ss = subspaces or max_singular_subspaces(M, eps)
    sig, m = ss.sigma_max, ss.multiplicity
    a = np.linalg.norm(M.conj().T @ ss.V_basis, 2) / sig
    b = np.linalg.norm(M @ ss.U_basis, 2) / sig
    c = np.linalg.norm(ss.U_basis.conj().T @ ss.V_basis, 2)
    n_zero = int(np.count_nonzero(ss.singular_values <= eps * sig))
    return {
        "vmax_in_null_Astar": Check(a <= tau, float(a)),
        "umax_in_null_A": Check(b <= tau, float(b)),
        "subspace_orthogonality": Check(c <= tau, float(c)),
        "mult_le_half_n": Check(2 * m <= n, 0.0, {"m": m, "n": n}),
        "zero_mult_ge_m": Check(n_zero >= m, 0.0, {"zero_multiplicity": n_zero, "m": m}),
    }


def is_in_theta(A, z, tau: float = DEFAULT_TAU, radius: float | None = None,
                rank_tol: float = 1e-10) -> Check:
    """Membership of ``z`` in Theta_A.

    Theta_A collects unit maximisers of ``|<Az, z>|`` whose R(A^*)-component
    ``x`` satisfies ``<Ax, x> = 0``.
    """
    M = as_matrix(A)
    v = as_vector(z, M.shape[0])
    r = numerical_radius(M).radius if radius is None else radius
    norm = np.linalg.norm(M, 2)
    split = orthogonal_decompose(M, v, rank_tol) if norm > 0 else None
    x = split.x if split is not None else np.zeros_like(v)
    y = split.y if split is not None else v.copy()
    res_norm = abs(np.linalg.norm(v) - 1.0)
    res_value = abs(abs(rayleigh(M, v)) - r)
    res_axx = abs(rayleigh(M, x))
    ok = (res_norm <= tau
          and res_value <= tau * max(1.0, r)
          and res_axx <= tau * norm)
    resid = max(res_norm, res_value / max(1.0, r), res_axx / norm if norm else 0.0)
    return Check(ok, float(resid), {
        "norm_residual": float(res_norm),
        "value_residual": float(res_value),
        "axx": float(res_axx),
        "x": x,
        "y": y,
    })


def _theta_witness(M, ss: MaxSingularSubspaces):
    v = ss.V_basis[:, 0]
    u = M @ v / ss.sigma_max
    return (v + u) / np.sqrt(2)


def is_half_radial(A, tau: float = DEFAULT_TAU, eps: float = DEFAULT_EPS,
                   grid_size: int = DEFAULT_GRID,
                   boundary_count: int = DEFAULT_BOUNDARY_COUNT,
                   refine_tol: float = DEFAULT_REFINE_TOL) -> HalfRadialReport:
    """Decide ``||A|| = 2 r(A)`` up to a relative gap ``tau``.

    The verdict is the gap test alone. The remaining characterisations are
    evaluated regardless and reported in ``diagnostics``.
    """
    M = require_nondegenerate(A)
    ss = max_singular_subspaces(M, eps)
    norm = ss.sigma_max
    nr = numerical_radius(M, grid_size=grid_size, refine_tol=refine_tol)
    r = nr.radius
    gap = abs(norm - 2 * r) / norm
    verdict = gap <= tau
    diag = structural_diagnostics(M, eps, tau, subspaces=ss)
    diag["theta_nonempty"] = is_in_theta(M, _theta_witness(M, ss), tau, radius=r)
    diag["disk_check"] = fov_disk_check(M, boundary_count, tau)
    borderline = tau < gap < BORDERLINE_FACTOR * tau
    return HalfRadialReport(verdict, norm, r, gap, tau, diag, ss.multiplicity,
                            borderline, nr.theta_star)


def half_radial_gap(A) -> float:
    """``| ||A|| - 2 r(A) | / ||A||`` without the diagnostic machinery."""
    M = require_nondegenerate(A)
    norm = np.linalg.norm(M, 2)
    return abs(norm - 2 * numerical_radius(M).radius) / norm


def check_maximizer_condition(A, v, tau: float = DEFAULT_TAU,
                              eps: float = DEFAULT_EPS) -> Check:
    """Test one maximum right singular vector ``v`` against the
    characterisation of half-radiality through V_max(A):

    ``v`` in R(A^*) and N(A^*), ``Av`` in R(A) and N(A), and
    ``z = (v + Av/||A||)/sqrt(2)`` maximises ``|<Az, z>|``.
    """
    M = require_nondegenerate(A)
    vec = as_vector(v, M.shape[0])
    if abs(np.linalg.norm(vec) - 1) > tau:
        raise PreconditionError("v must have unit norm")
    ss = max_singular_subspaces(M, eps)
    sig = ss.sigma_max
    dist = np.linalg.norm(vec - ss.V_basis @ (ss.V_basis.conj().T @ vec))
    if dist > max(tau, 1e-10):
        raise PreconditionError(f"v is not in V_max(A) (distance {dist:.3e})")
    Mh = M.conj().T
    Av = M @ vec
    in_range_star = np.linalg.norm(orthogonal_decompose(M, vec).y)
    in_null_star = np.linalg.norm(Mh @ vec) / sig
    in_range = np.linalg.norm(orthogonal_decompose(Mh, Av).y) / sig
    in_null = np.linalg.norm(M @ Av) / sig ** 2
    z = (vec + Av / sig) / np.sqrt(2)
    r = numerical_radius(M).radius
    value = abs(rayleigh(M, z))
    maxim = abs(value - r) / sig
    parts = {
        "v_in_range_Astar": float(in_range_star),
        "v_in_null_Astar": float(in_null_star),
        "Av_in_range_A": float(in_range),
        "Av_in_null_A": float(in_null),
        "z_maximizes": float(maxim),
    }
    ok = all(val <= tau for val in parts.values())
    return Check(ok, max(parts.values()), {**parts, "z": z, "value": float(value), "radius": r})


def sample_omega(A, v, alpha: float = 0.0, beta: float = 0.0,
                 tau: float = DEFAULT_TAU, eps: float = DEFAULT_EPS,
                 certified: bool = False) -> MaximizerSample:
    """Element ``(e^{i alpha} v + e^{i beta} u)/sqrt(2)`` of Omega_A.

    ``A`` must be half-radial; pass ``certified=True`` to skip re-checking.
    """
    M = require_nondegenerate(A)
    vec = as_vector(v, M.shape[0])
    if not certified:
        gap = half_radial_gap(M)
        if gap > tau:
            raise NotHalfRadialError(f"A is not half-radial (relative gap {gap:.3e})")
    ss = max_singular_subspaces(M, eps)
    sig = ss.sigma_max
    if abs(np.linalg.norm(vec) - 1) > 1e-8:
        raise PreconditionError("v must have unit norm")
    if np.linalg.norm(vec - ss.V_basis @ (ss.V_basis.conj().T @ vec)) > 1e-8:
        raise PreconditionError("v is not in V_max(A)")
    u = M @ vec / sig
    z = (np.exp(1j * alpha) * vec + np.exp(1j * beta) * u) / np.sqrt(2)
    x, y, _ = orthogonal_decompose(M, z)
    gamma = inner(M @ x, y)
    return MaximizerSample(z, vec, u, float(alpha), float(beta), x, y, gamma)


def canonical_decomposition(A, eps: float = DEFAULT_EPS, tau: float = DEFAULT_TAU,
                            residual_tol: float = 1e-8) -> CanonicalDecomposition:
    """Unitary ``Q`` with ``Q^* A Q = (||A|| I_m (x) J) (+) B``.

    ``Q = [u_1, v_1, ..., u_m, v_m, P]`` with ``P`` any orthonormal
    completion. Refuses (``NotHalfRadialError``) when the interleaved basis
    is not orthonormal, the residual is too large, or ``B`` violates
    ``||B|| < ||A||``, ``r(B) <= ||A||/2``.
    """
    M = require_nondegenerate(A)
    n = M.shape[0]
    ss = max_singular_subspaces(M, eps)
    sig, m = ss.sigma_max, ss.multiplicity
    info = {"m": m, "sigma": sig}
    if 2 * m > n:
        raise NotHalfRadialError(f"multiplicity {m} exceeds n/2", info)
    cols = np.empty((n, 2 * m), dtype=complex)
    cols[:, 0::2] = ss.U_basis
    cols[:, 1::2] = ss.V_basis
    orth = orthonormality_error(cols)
    info["orthonormality"] = orth
    if orth > 1e-8:
        raise NotHalfRadialError("maximum singular pairs are not mutually orthogonal", info)
    Q = orthonormal_complete(cols)
    T = Q.conj().T @ M @ Q
    B = T[2 * m:, 2 * m:]
    residual = float(np.linalg.norm(T - shift_block_form(m, sig, B)))
    if B.size:
        B_norm = float(np.linalg.norm(B, 2))
        B_radius = numerical_radius(B).radius
    else:
        B_norm = B_radius = 0.0
    info.update(residual=residual, B_norm=B_norm, B_radius=B_radius)
    if residual > residual_tol * sig:
        raise NotHalfRadialError(f"block residual {residual:.3e} too large", info)
    if not B_norm < sig:
        raise NotHalfRadialError("tail block has ||B|| >= ||A||", info)
    if B_radius > sig / 2 + tau * sig:
        raise NotHalfRadialError(
            f"tail block has r(B) = {B_radius:.6g} > ||A||/2 = {sig / 2:.6g}", info)
    return CanonicalDecomposition(Q, m, sig, B, residual, B_norm, B_radius)


def synthesize_half_radial(n: int, m: int, sigma: float = 1.0,
                           b_radius_frac: float = 0.5, seed=0,
                           max_attempts: int = 100) -> np.ndarray:
    """Random half-radial matrix ``Q ((sigma I_m (x) J) (+) B) Q^*``.

    ``B`` is a rescaled complex Ginibre matrix with ``r(B) = b_radius_frac *
    sigma / 2`` exactly; ``Q`` is Haar. Deterministic in ``seed``.
    """
    if n < 2:
        raise PreconditionError("n must be at least 2")
    if not 1 <= m or 2 * m > n:
        raise PreconditionError(f"need 1 <= m <= n/2, got m={m}, n={n}")
    if not sigma > 0:
        raise PreconditionError("sigma must be positive")
    if not 0 <= b_radius_frac < 1:
        raise PreconditionError("b_radius_frac must lie in [0, 1)")
    rng = np.random.default_rng(seed)
    nb = n - 2 * m
    B = np.zeros((nb, nb), dtype=complex)
    if nb and b_radius_frac > 0:
        for _ in range(max_attempts):
            G = rng.standard_normal((nb, nb)) + 1j * rng.standard_normal((nb, nb))
            rG = numerical_radius(G).radius
            if rG == 0:
                continue
            B = G * (b_radius_frac * sigma / 2) / rG
            if np.linalg.norm(B, 2) < sigma:
                break
        else:
            raise NumericalFailure("could not draw a tail block with ||B|| < sigma")
    Q = haar_unitary(n, rng)
    A = Q @ shift_block_form(m, sigma, B) @ Q.conj().T
    gap = half_radial_gap(A)
    if gap > DEFAULT_TAU:
        raise NumericalFailure(f"synthesised matrix failed certification (gap {gap:.3e})", gap)
    return A
