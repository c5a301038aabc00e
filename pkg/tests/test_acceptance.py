"""End-to-end acceptance criteria, one test per criterion.

Each test records a ``PASS n: ...`` or ``FAIL n: ...`` line that the
terminal summary prints under "acceptance criteria". Wall-clock budgets
are enforced alongside the numerical tolerances.
"""
import time
from contextlib import contextmanager
from functools import lru_cache

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, EX2, EX3, J, ginibre, unit
from numrange.crouzeix import (
    CROUZEIX_PALENCIA,
    ccc_matrix,
    crabb_chain,
    crabb_decomposition,
    crouzeix_monomial_ratio,
    crouzeix_poly_ratio,
    synthesize_crabb_form,
)
from numrange.fov import numerical_radius
from numrange.halfradial import (
    canonical_decomposition,
    is_half_radial,
    is_in_theta,
    max_singular_subspaces,
    sample_omega,
    shift_block_form,
    synthesize_half_radial,
)
from numrange.linalg_kernel import haar_unitary, matrix_power, spectral_norm
from numrange.oracle import radius_ascent_oracle, radius_grid_oracle

STRUCTURAL = ["vmax_in_null_Astar", "umax_in_null_A", "subspace_orthogonality",
              "mult_le_half_n", "zero_mult_ge_m"]


@contextmanager
def criterion(num, title, budget):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        dt = time.perf_counter() - t0
        ACCEPTANCE_LINES.append(f"FAIL {num}: {title} ({dt:.2f} s; {type(exc).__name__})")
        raise
    dt = time.perf_counter() - t0
    if dt >= budget:
        ACCEPTANCE_LINES.append(f"FAIL {num}: {title} ({dt:.2f} s, budget {budget} s)")
        pytest.fail(f"criterion {num} took {dt:.2f} s, budget {budget} s")
    ACCEPTANCE_LINES.append(f"PASS {num}: {title} ({dt:.2f} s)")


def _random_unit_in(basis, rng):
    c = rng.standard_normal(basis.shape[1]) + 1j * rng.standard_normal(basis.shape[1])
    v = basis @ c
    return v / np.linalg.norm(v)


def _synth_params(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 13))
    m = int(rng.integers(1, n // 2 + 1))
    return n, m, float(rng.uniform(0.5, 2.0)), float(rng.uniform(0.0, 0.95))


@lru_cache(maxsize=1)
def _certified_half_radial_family():
    mats = [J, EX3, 2.5 * J, shift_block_form(3, 1.0), shift_block_form(2, 1.3, [[0.4]])]
    mats += [matrix_power(ccc_matrix(n), n) for n in range(1, 9)]
    mats += [synthesize_half_radial(*_synth_params(seed), seed=seed) for seed in range(20)]
    for A in mats:
        assert is_half_radial(A).verdict
    return tuple(mats)


def test_criterion_01_bound_chain():
    with criterion(1, "bound chain ||A||/2 <= r(A) <= ||A|| on 100 random matrices", 5):
        rng = np.random.default_rng(1)
        for _ in range(100):
            n = int(rng.integers(2, 11))
            A = ginibre(n, rng, scale=rng.uniform(0.1, 10))
            r = numerical_radius(A).radius
            nA = spectral_norm(A)
            assert nA / 2 - 1e-8 <= r <= nA + 1e-8


def test_criterion_02_shift():
    with criterion(2, "shift J: r = 1/2, ||J|| = 1, half-radial", 0.1):
        assert numerical_radius(J).radius == pytest.approx(0.5, abs=1e-10)
        assert spectral_norm(J) == 1.0
        assert is_half_radial(J).verdict is True


def test_criterion_03_ex2():
    with criterion(3, "EX2: structural diagnostics pass, verdict false, r = 0.9", 0.1):
        rep = is_half_radial(EX2)
        assert all(rep.diagnostics[name].ok for name in STRUCTURAL)
        assert rep.verdict is False
        assert rep.radius == pytest.approx(0.9, abs=1e-8)


def test_criterion_04_ex3():
    with criterion(4, "EX3: r = 1/2, ||A|| = 1, half-radial, e_3 maximiser outside Theta", 0.1):
        assert numerical_radius(EX3).radius == pytest.approx(0.5, abs=1e-8)
        assert spectral_norm(EX3) == pytest.approx(1.0, abs=1e-15)
        assert is_half_radial(EX3).verdict is True
        e3 = unit(3, 2)
        assert abs(np.vdot(e3, EX3 @ e3)) == pytest.approx(0.5, abs=1e-8)
        assert is_in_theta(EX3, e3).ok is False


def test_criterion_05_theta_equals_omega():
    with criterion(5, "Theta_A = Omega_A on 30 synthesized matrices x 10 samples", 10):
        for seed in range(30):
            n, m, sigma, frac = _synth_params(seed)
            A = synthesize_half_radial(n, m, sigma, frac, seed=seed)
            ss = max_singular_subspaces(A)
            r = numerical_radius(A).radius
            nA = ss.sigma_max
            rng = np.random.default_rng(1000 + seed)
            for _ in range(10):
                v = _random_unit_in(ss.V_basis, rng)
                alpha, beta = rng.uniform(0, 2 * np.pi, 2)
                s = sample_omega(A, v, alpha, beta, certified=True)
                chk = is_in_theta(A, s.z, 1e-6, radius=r)
                assert chk.ok
                x = chk.detail["x"]
                assert abs(np.linalg.norm(A @ x) - nA * np.linalg.norm(x)) <= 1e-8


def test_criterion_06_canonical_round_trip():
    with criterion(6, "canonical decomposition round trip on 30 seeds", 20):
        for seed in range(30):
            n, m, sigma, frac = _synth_params(seed)
            A = synthesize_half_radial(n, m, sigma, frac, seed=seed)
            nA = spectral_norm(A)
            dec = canonical_decomposition(A)
            assert dec.m == m
            assert dec.residual <= 1e-8 * nA
            if dec.B.size:
                assert dec.B_norm < nA
                assert dec.B_radius <= nA / 2 + 1e-8


def test_criterion_07_ccc_identities():
    with criterion(7, "C_n identities for n <= 8", 10):
        for n in range(1, 9):
            C = ccc_matrix(n)
            target = np.zeros((n + 1, n + 1))
            target[0, n] = 2
            assert np.linalg.norm(matrix_power(C, n) - target) <= 1e-12
            assert numerical_radius(C).radius == pytest.approx(1.0, abs=1e-8)
            assert crouzeix_monomial_ratio(C, n).ratio == pytest.approx(2.0, abs=1e-6)
            assert is_half_radial(matrix_power(C, n)).verdict is True


def test_criterion_08_crabb_profile():
    with criterion(8, "Crabb chain profile on C_n and Haar conjugates", 5):
        for n in range(1, 9):
            expect = np.array([2.0] + [np.sqrt(2)] * (n - 1) + [1.0])
            for seed in (None, 10 * n, 10 * n + 1):
                if seed is None:
                    A = ccc_matrix(n)
                else:
                    Q = haar_unitary(n + 1, seed)
                    A = Q @ ccc_matrix(n) @ Q.conj().T
                ch = crabb_chain(A, n)
                assert np.max(np.abs(ch.norm_profile - expect)) <= 1e-6
                G = np.column_stack(ch.chain)
                gram = G.conj().T @ G
                assert np.max(np.abs(gram - np.diag(np.diag(gram)))) <= 1e-6


def test_criterion_09_crabb_decomposition_round_trip():
    with criterion(9, "r(C_k + B) decomposition round trip on 20 seeds", 20):
        for seed in range(20):
            rng = np.random.default_rng(500 + seed)
            k = int(rng.integers(1, 6))
            n = k + 1 + int(rng.integers(0, 5))
            A = synthesize_crabb_form(n, k, scale=rng.uniform(0.3, 3.0),
                                      b_radius=rng.uniform(0.0, 0.95), seed=seed)
            dec = crabb_decomposition(A, k)
            assert dec.residual <= 1e-6
            assert dec.b_radius <= 1 + 1e-6
            assert dec.b_power_norm <= 2 + 1e-6


def test_criterion_10_oracle_equivalence():
    with criterion(10, "numerical_radius vs grid and ascent oracles on 50 matrices", 30):
        rng = np.random.default_rng(10)
        for i in range(50):
            A = ginibre(int(rng.integers(2, 11)), rng)
            r = numerical_radius(A).radius
            grid = radius_grid_oracle(A, 100_000).value
            assert abs(r - grid) <= 1e-6
            ascent = radius_ascent_oracle(A, restarts=8, iters=300, seed=i).value
            assert ascent <= min(r, grid) + 1e-6


def test_criterion_11_crouzeix_bounds():
    _certified_half_radial_family()
    with criterion(11, "Crouzeix ratio <= 1 + sqrt 2 (random), <= 2 (half-radial)", 15):
        rng = np.random.default_rng(11)

        def poly():
            deg = int(rng.integers(1, 5))
            return rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)

        for _ in range(60):
            A = ginibre(int(rng.integers(2, 7)), rng)
            assert crouzeix_poly_ratio(A, poly(), boundary_count=512).ratio <= \
                CROUZEIX_PALENCIA + 1e-6
        for A in _certified_half_radial_family():
            for _ in range(3):
                assert crouzeix_poly_ratio(A, poly(), boundary_count=512).ratio <= 2 + 1e-6


def test_criterion_12_hermitian_part_identity():
    _certified_half_radial_family()
    with criterion(12, "||A^* + A|| = ||A|| on certified half-radial matrices", 2):
        for A in _certified_half_radial_family():
            assert abs(spectral_norm(A + A.conj().T) - spectral_norm(A)) <= 1e-8
