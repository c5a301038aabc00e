"""Crouzeix ratios ``||p(A)|| / max_{W(A)} |p|`` and the extremal structure.

Equality ``||A^k|| = 2 max_{W(A)} |zeta^k|`` forces ``A`` to be unitarily
similar to ``r(A) (C_k (+) B)`` with ``C_k`` the Crabb-Choi-Crouzeix matrix.
This module builds ``C_n``, evaluates the ratios, grows the Crabb chain
``v, Av, ..., A^k v`` and recovers the block decomposition.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from ._types import Check
from .errors import NumericalFailure, PreconditionError
from .fov import DEFAULT_BOUNDARY_COUNT, max_poly_on_fov, numerical_radius
from .halfradial import DEFAULT_TAU, is_half_radial, require_nondegenerate
from .linalg_kernel import as_matrix, haar_unitary, matrix_power, orthonormal_complete, svd

log = logging.getLogger(__name__)

CHAIN_TOL = 1e-6
CROUZEIX_PALENCIA = 1 + np.sqrt(2)


@dataclass(frozen=True)
class CrouzeixRatio:
    numerator: float
    denominator: float
    ratio: float
    k: int | None = None
    coeffs: tuple | None = None
    fov_denominator: float | None = None
    noteworthy: bool = False


@dataclass(frozen=True)
class CrabbChain:
    k: int
    v: np.ndarray
    chain: list
    Q_k: np.ndarray
    norm_profile: np.ndarray
    tail_norm: float
    gram_offdiag: float
    scale: float


@dataclass(frozen=True)
class CrabbDecomposition:
    k: int
    Q_full: np.ndarray
    B: np.ndarray
    residual: float
    b_radius: float
    b_power_norm: float
    scale: float
    reducing_residual: float


def ccc_matrix(n: int) -> np.ndarray:
    """The ``(n+1) x (n+1)`` Crabb-Choi-Crouzeix matrix ``C_n``."""
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    if n == 1:
        sup = np.array([2.0])
    else:
        sup = np.ones(n)
        sup[0] = sup[-1] = np.sqrt(2)
    return np.diag(sup, 1).astype(complex)


def poly_of_matrix(coeffs, A) -> np.ndarray:
    """``sum_j coeffs[j] A^j`` by Horner's rule (ascending coefficients)."""
    M = as_matrix(A)
    c = np.asarray(coeffs, dtype=complex)
    if c.size == 0:
        raise ValueError("empty coefficient list")
    eye = np.eye(M.shape[0], dtype=complex)
    P = c[-1] * eye
    for a in c[-2::-1]:
        P = P @ M + a * eye
    return P


def crouzeix_monomial_ratio(A, k: int, cross_check: bool = False,
                            boundary_count: int = DEFAULT_BOUNDARY_COUNT,
                            radius: float | None = None) -> CrouzeixRatio:
    """``||A^k|| / r(A)^k``.

    For a monomial the maximum of ``|zeta^k|`` over W(A) is exactly
    ``r(A)^k``, so the denominator carries no discretisation error. With
    ``cross_check`` the boundary sweep value is attached as well.
    """
    M = require_nondegenerate(A)
    if int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    k = int(k)
    r = numerical_radius(M).radius if radius is None else radius
    num = float(np.linalg.norm(matrix_power(M, k), 2))
    den = r ** k
    fov_den = None
    if cross_check:
        coeffs = np.zeros(k + 1, dtype=complex)
        coeffs[-1] = 1.0
        fov_den = max_poly_on_fov(M, coeffs, boundary_count)
    return CrouzeixRatio(num, den, num / den, k=k, fov_denominator=fov_den)


def monomial_extremality_test(A, k: int, tau: float = DEFAULT_TAU) -> Check:
    """``A^k`` half-radial and ``r(A^k) = r(A)^k``.

    Equivalent to the monomial Crouzeix ratio being exactly 2; the report
    records both sides and whether they agree.
    """
    M = require_nondegenerate(A)
    k = int(k)
    if k < 1:
        raise ValueError("k must be a positive integer")
    r = numerical_radius(M).radius
    Ak = matrix_power(M, k)
    if not np.any(np.abs(Ak) > 1e-300):
        # nilpotent of index <= k: ||A^k|| = 0 < 2 r(A)^k
        ratio = crouzeix_monomial_ratio(M, k, radius=r)
        return Check(False, 1.0, {"ratio": ratio.ratio, "ak_half_radial": False,
                                  "power_gap": 1.0, "agree": True})
    rep = is_half_radial(Ak, tau)
    power_gap = abs(rep.radius - r ** k) / r ** k
    ok = rep.verdict and power_gap <= tau
    ratio = crouzeix_monomial_ratio(M, k, radius=r)
    ratio_says = abs(ratio.ratio - 2) <= 4 * tau
    return Check(ok, max(rep.gap, power_gap), {
        "ratio": ratio.ratio,
        "ak_half_radial": rep.verdict,
        "ak_gap": rep.gap,
        "power_gap": float(power_gap),
        "agree": ok == ratio_says,
    })


def crabb_chain(A, k: int, tol: float = CHAIN_TOL) -> CrabbChain:
    """Chain ``[Ã^k v, ..., Ã v, v]`` with ``Ã = A / r(A)`` and ``v`` a top
    right singular vector of ``Ã^k``.

    When ``||Ã^k|| = 2`` the norms are ``(2, sqrt 2, ..., sqrt 2, 1)``, the
    vectors are mutually orthogonal and ``Ã^{k+1} v = 0``. Anything else
    raises ``PreconditionError`` carrying the measured profile.
    """
    M = require_nondegenerate(A)
    k = int(k)
    if k < 1 or k + 1 > M.shape[0]:
        raise ValueError(f"need 1 <= k <= n - 1, got k={k}, n={M.shape[0]}")
    scale = numerical_radius(M).radius
    At = M / scale
    v = svd(matrix_power(At, k)).V[:, 0]
    powers = [v]
    for _ in range(k + 1):
        powers.append(At @ powers[-1])
    tail = float(np.linalg.norm(powers[-1]))
    chain = powers[k::-1]
    profile = np.array([np.linalg.norm(w) for w in chain])
    expect = np.full(k + 1, np.sqrt(2))
    expect[0], expect[-1] = 2.0, 1.0
    Q_k = np.column_stack([w / e for w, e in zip(chain, expect)])
    G = np.column_stack(chain)
    gram = G.conj().T @ G
    off = float(np.max(np.abs(gram - np.diag(np.diag(gram))))) if k else 0.0
    bad = np.max(np.abs(profile - expect)) > tol or tail > tol or off > tol
    if bad:
        raise PreconditionError(
            "Crabb structure not present: norm profile "
            f"{np.array2string(profile, precision=8)}, tail {tail:.3e}, "
            f"gram off-diagonal {off:.3e}",
            {"norm_profile": profile, "tail_norm": tail, "gram_offdiag": off})
    return CrabbChain(k, v, chain, Q_k, profile, tail, off, scale)


def crabb_decomposition(A, k: int, tau: float = CHAIN_TOL) -> CrabbDecomposition:
    """Unitary ``Q`` with ``A Q = r(A) Q (C_k (+) B)``, ``r(B) <= 1``,
    ``||B^k|| <= 2``.

    Requires ``||A^k|| = 2 r(A)^k`` to relative accuracy ``tau``.
    """
    M = require_nondegenerate(A)
    n = M.shape[0]
    k = int(k)
    if k < 1 or k + 1 > n:
        raise ValueError(f"need 1 <= k <= n - 1, got k={k}, n={n}")
    ratio = crouzeix_monomial_ratio(M, k)
    if abs(ratio.ratio - 2) > 2 * tau:
        raise PreconditionError(
            f"||A^k|| / r(A)^k = {ratio.ratio:.10g} is not 2 (k={k})", {"ratio": ratio.ratio})
    ch = crabb_chain(M, k, tol=tau)
    At = M / ch.scale
    Q = orthonormal_complete(ch.Q_k, tol=max(1e-8, tau))
    Qt = Q[:, k + 1:]
    B = Qt.conj().T @ At @ Qt
    C = ccc_matrix(k)
    block = block_diag(C, B) if B.size else C
    residual = float(np.linalg.norm(At @ Q - Q @ block))
    reducing = float(max(np.linalg.norm(Qt.conj().T @ At @ ch.Q_k),
                         np.linalg.norm(ch.Q_k.conj().T @ At @ Qt))) if B.size else 0.0
    if reducing > tau or residual > tau:
        raise NumericalFailure(
            f"chain span is not reducing (off-block {reducing:.3e}, residual {residual:.3e})",
            residual)
    if B.size:
        b_radius = numerical_radius(B).radius
        b_power = float(np.linalg.norm(matrix_power(B, k), 2))
    else:
        b_radius = b_power = 0.0
    return CrabbDecomposition(k, Q, B, residual, b_radius, b_power, ch.scale, reducing)


def synthesize_crabb_form(n: int, k: int, scale: float = 1.0, b_radius: float = 0.8,
                          seed=0, max_attempts: int = 100) -> np.ndarray:
    """Random ``scale * Q (C_k (+) B) Q^*`` with Haar ``Q``.

    ``B`` has size ``n - k - 1`` and is a Ginibre draw rescaled to
    ``r(B) = b_radius``; draws with ``||B^k|| > 2`` are rejected. Keeping
    ``b_radius < 1`` leaves ``||B^k|| < 2`` so the top singular vector of
    ``A^k`` is unique.
    """
    k = int(k)
    if k < 1 or k + 1 > n:
        raise PreconditionError(f"need 1 <= k <= n - 1, got k={k}, n={n}")
    if not scale > 0:
        raise PreconditionError("scale must be positive")
    if not 0 <= b_radius < 1:
        raise PreconditionError("b_radius must lie in [0, 1)")
    rng = np.random.default_rng(seed)
    nb = n - k - 1
    B = np.zeros((nb, nb), dtype=complex)
    if nb and b_radius > 0:
        for _ in range(max_attempts):
            G = rng.standard_normal((nb, nb)) + 1j * rng.standard_normal((nb, nb))
            B = G * (b_radius / numerical_radius(G).radius)
            if np.linalg.norm(matrix_power(B, k), 2) <= 2:
                break
        else:
            raise NumericalFailure("could not draw a tail block with ||B^k|| <= 2")
    block = block_diag(ccc_matrix(k), B) if nb else ccc_matrix(k)
    Q = haar_unitary(n, rng)
    return scale * (Q @ block @ Q.conj().T)


def crouzeix_poly_ratio(A, coeffs, boundary_count: int = DEFAULT_BOUNDARY_COUNT) -> CrouzeixRatio:
    """``||p(A)|| / max_{W(A)} |p|`` for ascending coefficients ``coeffs``.

    The denominator comes from the boundary sweep, which can only
    underestimate the true maximum slightly.
    """
    M = require_nondegenerate(A)
    c = np.asarray(coeffs, dtype=complex)
    if c.size == 0 or not np.any(c):
        raise ValueError("p must be a nonzero polynomial")
    num = float(np.linalg.norm(poly_of_matrix(c, M), 2))
    den = max_poly_on_fov(M, c, boundary_count)
    ratio = 0.0 if num == 0.0 else num / den
    nz = np.flatnonzero(c)
    monomial = nz.size == 1
    noteworthy = (not monomial) and abs(ratio - 2) <= 1e-6
    if noteworthy:
        log.warning("non-monomial polynomial with Crouzeix ratio %.12g", ratio)
    return CrouzeixRatio(num, den, ratio, k=int(nz[-1]), coeffs=tuple(c.tolist()),
                         noteworthy=noteworthy)


def ratio_table(A, k_max: int, tau: float = DEFAULT_TAU) -> list[dict]:
    """One row per ``k = 1..k_max``: ``||A^k||``, ``r(A)^k``, ratio and the
    extremality verdict, with a Crabb decomposition summary where it holds."""
    M = require_nondegenerate(A)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    r = numerical_radius(M).radius
    rows = []
    for k in range(1, k_max + 1):
        cr = crouzeix_monomial_ratio(M, k, radius=r)
        ext = monomial_extremality_test(M, k, tau)
        row = {"k": k, "norm_Ak": cr.numerator, "r_pow_k": cr.denominator,
               "ratio": cr.ratio, "extremal": bool(ext.ok)}
        if ext.ok and k + 1 <= M.shape[0]:
            dec = crabb_decomposition(M, k)
            row["crabb"] = {"B_size": int(dec.B.shape[0]), "residual": dec.residual,
                            "B_radius": dec.b_radius, "B_power_norm": dec.b_power_norm}
        rows.append(row)
    return rows
