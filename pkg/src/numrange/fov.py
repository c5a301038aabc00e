"""Field of values W(A) and the numerical radius r(A).

Everything here rests on the support function of W(A),

    g(theta) = lambda_max(H_theta),   H_theta = (e^{i theta} A + e^{-i theta} A^*) / 2,

which satisfies ``max_theta g(theta) = r(A)``. A top eigenvector ``q`` of
``H_theta`` gives the boundary point ``<A q, q>`` of W(A) supported by the
line ``Re(e^{i theta} zeta) = g(theta)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._golden import golden_max
from ._types import Check
from .linalg_kernel import as_matrix, rayleigh, spectral_norm

DEFAULT_GRID = 512
DEFAULT_REFINE_TOL = 1e-12
DEFAULT_BOUNDARY_COUNT = 1024

# cap on entries held in one batched eigen-solve
_CHUNK_ENTRIES = 1 << 21


@dataclass(frozen=True)
class FovBoundary:
    theta: np.ndarray
    support: np.ndarray
    points: np.ndarray

    def __len__(self):
        return self.theta.shape[0]

    def outer_violation(self, zeta) -> np.ndarray:
        """How far each ``zeta`` sticks out of the outer polygon (<= 0 inside)."""
        z = np.atleast_1d(np.asarray(zeta, dtype=complex))
        proj = np.real(np.exp(1j * self.theta)[np.newaxis, :] * z[:, np.newaxis])
        return np.max(proj - self.support[np.newaxis, :], axis=1)


@dataclass(frozen=True)
class NumericalRadiusResult:
    radius: float
    theta_star: float
    maximizer: np.ndarray
    grid_size: int
    refined: bool
    n_candidates: int = 0

    def __float__(self):
        return self.radius


def hermitian_parts(A):
    """``(X, Y)`` Hermitian with ``A = X + iY``."""
    M = as_matrix(A)
    Mh = M.conj().T
    return (M + Mh) / 2, (M - Mh) / 2j


def rotated_hermitian_part(A, theta: float) -> np.ndarray:
    M = np.exp(1j * theta) * as_matrix(A)
    # entrywise average of conjugate pairs is Hermitian to the last bit
    return (M + M.conj().T) / 2


def _chunks(thetas: np.ndarray, n: int):
    step = max(1, _CHUNK_ENTRIES // (n * n))
    for i in range(0, thetas.shape[0], step):
        yield thetas[i:i + step]


def _stack(X, Y, thetas):
    # H_theta = cos(theta) X - sin(theta) Y
    c = np.cos(thetas)[:, np.newaxis, np.newaxis]
    s = np.sin(thetas)[:, np.newaxis, np.newaxis]
    return c * X - s * Y


def support_values(A, thetas) -> np.ndarray:
    """``lambda_max(H_theta)`` for every theta, batched."""
    X, Y = hermitian_parts(A)
    return _support_from_parts(X, Y, np.asarray(thetas, dtype=float))


def _support_from_parts(X, Y, thetas):
    n = X.shape[0]
    out = np.empty(thetas.shape[0])
    pos = 0
    for th in _chunks(thetas, n):
        out[pos:pos + th.shape[0]] = np.linalg.eigvalsh(_stack(X, Y, th))[:, -1]
        pos += th.shape[0]
    return out


def _top_pairs(X, Y, thetas):
    n = X.shape[0]
    lam = np.empty(thetas.shape[0])
    vec = np.empty((thetas.shape[0], n), dtype=complex)
    pos = 0
    for th in _chunks(thetas, n):
        w, Q = np.linalg.eigh(_stack(X, Y, th))
        lam[pos:pos + th.shape[0]] = w[:, -1]
        vec[pos:pos + th.shape[0]] = Q[:, :, -1]
        pos += th.shape[0]
    return lam, vec


def _local_maxima(g: np.ndarray) -> np.ndarray:
    # circular grid
    return np.flatnonzero((g >= np.roll(g, 1)) & (g >= np.roll(g, -1)))


def numerical_radius(A, grid_size: int = DEFAULT_GRID,
                     refine_tol: float = DEFAULT_REFINE_TOL) -> NumericalRadiusResult:
    """Numerical radius ``r(A) = max_theta lambda_max(H_theta)``.

    ``g`` is sampled on a uniform grid; every grid-local maximum that could
    still hold the global one is refined by golden-section search down to a
    theta-bracket of ``refine_tol``. Pruning uses the fact that ``g`` is a
    support function: ``g'' >= -r(A) >= -||A||``, so between two grid points
    ``g`` cannot exceed the larger endpoint by more than ``||A|| h^2 / 8``.
    """
    M = as_matrix(A)
    n = M.shape[0]
    if grid_size < 64:
        raise ValueError("grid_size must be at least 64")
    if refine_tol <= 0:
        raise ValueError("refine_tol must be positive")
    norm = spectral_norm(M)
    if norm == 0.0:
        z = np.zeros(n, dtype=complex)
        z[0] = 1.0
        return NumericalRadiusResult(0.0, 0.0, z, grid_size, False, 0)

    X, Y = hermitian_parts(M)
    h = 2 * np.pi / grid_size
    thetas = h * np.arange(grid_size)
    g = _support_from_parts(X, Y, thetas)
    slack = norm * h * h / 8
    cand = _local_maxima(g)
    cand = cand[g[cand] + slack >= g.max()]

    def f(th):
        return _support_from_parts(X, Y, th)

    # brackets that cannot gain more than eigensolver rounding are not
    # narrowed further; the winning one always reaches refine_tol
    xs, fx = golden_max(f, thetas[cand] - h, thetas[cand] + h, refine_tol,
                        curvature=norm, floor=8 * np.finfo(float).eps * norm)
    # the grid point itself may beat everything golden section evaluated
    better = g[cand] > fx
    xs = np.where(better, thetas[cand], xs)
    fx = np.where(better, g[cand], fx)
    best = int(np.argmax(fx))
    theta_star = float(np.mod(xs[best], 2 * np.pi))
    lam, vec = _top_pairs(X, Y, np.array([theta_star]))
    z = vec[0]
    return NumericalRadiusResult(float(lam[0]), theta_star, z, grid_size, True, int(cand.size))


def fov_boundary(A, count: int = DEFAULT_BOUNDARY_COUNT) -> FovBoundary:
    """Support-function sweep of W(A) at ``theta_j = 2 pi j / count``.

    The points form an inner polygon of W(A); the half-planes
    ``Re(e^{i theta_j} zeta) <= support_j`` intersect to an outer one.
    """
    M = as_matrix(A)
    if count < 8:
        raise ValueError("count must be at least 8")
    X, Y = hermitian_parts(M)
    thetas = 2 * np.pi * np.arange(count) / count
    lam, vec = _top_pairs(X, Y, thetas)
    points = np.einsum("ti,ij,tj->t", vec.conj(), M, vec)
    return FovBoundary(thetas, lam, points)


def fov_disk_check(A, count: int = DEFAULT_BOUNDARY_COUNT, tau: float = 1e-8) -> Check:
    """Is W(A) the disk centred at 0 with radius ||A||/2?

    W(A) is such a disk exactly when its support function is constant and
    equal to ||A||/2.
    """
    M = as_matrix(A)
    if count < 64:
        raise ValueError("count must be at least 64")
    norm = spectral_norm(M)
    if norm == 0.0:
        return Check(True, 0.0, {"note": "zero matrix: W(A) = {0}, vacuously a disk"})
    supp = support_values(M, 2 * np.pi * np.arange(count) / count)
    spread = float(supp.max() - supp.min())
    offset = float(abs(supp.max() - norm / 2))
    ok = spread <= tau * norm and offset <= tau * norm
    return Check(ok, max(spread, offset) / norm,
                 {"spread": spread, "radius_offset": offset, "count": count})


def poly_eval(coeffs, zeta):
    """Evaluate ``sum_j coeffs[j] * zeta**j`` (ascending order) by Horner."""
    c = np.asarray(coeffs, dtype=complex)
    if c.size == 0:
        raise ValueError("empty coefficient list")
    out = np.full(np.shape(zeta), c[-1], dtype=complex)
    for a in c[-2::-1]:
        out = out * zeta + a
    return out


def max_poly_on_fov(A, coeffs, count: int = DEFAULT_BOUNDARY_COUNT,
                    refine_tol: float = 1e-10) -> float:
    """``max |p(zeta)|`` over W(A), with ``coeffs`` in ascending order.

    By the maximum-modulus principle the maximum sits on the boundary. The
    boundary sweep is evaluated together with points on the chords between
    neighbouring samples (they lie in W(A) by convexity), and the best
    samples are then polished by golden-section search in theta. Every
    value used is |p| at a genuine point of W(A), so the result never
    overshoots the true maximum.
    """
    M = as_matrix(A)
    c = np.asarray(coeffs, dtype=complex)
    if c.size == 0:
        raise ValueError("empty coefficient list")
    if count < 64:
        raise ValueError("count must be at least 64")
    if c.size == 1:
        return float(abs(c[0]))
    bd = fov_boundary(M, count)
    pts = bd.points
    t = np.linspace(0.0, 1.0, 6)[1:-1]
    chords = pts[:, np.newaxis] + t[np.newaxis, :] * (np.roll(pts, -1)[:, np.newaxis] - pts[:, np.newaxis])
    best = max(float(np.abs(poly_eval(c, pts)).max()),
               float(np.abs(poly_eval(c, chords)).max()))

    vals = np.abs(poly_eval(c, pts))
    cand = _local_maxima(vals)
    cand = cand[np.argsort(vals[cand])[::-1][:8]]
    X, Y = hermitian_parts(M)
    h = 2 * np.pi / count

    def f(th):
        _, vec = _top_pairs(X, Y, th)
        z = np.einsum("ti,ij,tj->t", vec.conj(), M, vec)
        return np.abs(poly_eval(c, z))

    _, fx = golden_max(f, bd.theta[cand] - h, bd.theta[cand] + h, refine_tol)
    return max(best, float(fx.max()))


def numerical_radius_value(A, **kw) -> float:
    return numerical_radius(A, **kw).radius


def maximizer_value(A, z) -> float:
    """``|<A z, z>|`` for a (not necessarily normalised) ``z``."""
    return abs(rayleigh(as_matrix(A), np.asarray(z, dtype=complex)))
