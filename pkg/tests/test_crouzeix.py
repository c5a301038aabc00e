import numpy as np
import pytest

from conftest import J, ginibre
from numrange.crouzeix import (
    CROUZEIX_PALENCIA,
    ccc_matrix,
    crabb_chain,
    crabb_decomposition,
    crouzeix_monomial_ratio,
    crouzeix_poly_ratio,
    monomial_extremality_test,
    poly_of_matrix,
    ratio_table,
    synthesize_crabb_form,
)
from numrange.errors import DegenerateMatrixError, PreconditionError
from numrange.fov import numerical_radius
from numrange.halfradial import is_half_radial
from numrange.linalg_kernel import haar_unitary, matrix_power

R2 = np.sqrt(2)


def _profile(k):
    return np.array([2.0] + [R2] * (k - 1) + [1.0])


def test_ccc_matrix_examples():
    np.testing.assert_array_equal(ccc_matrix(1), [[0, 2], [0, 0]])
    np.testing.assert_array_equal(ccc_matrix(1), 2 * J)
    np.testing.assert_array_equal(np.diag(ccc_matrix(2), 1), [R2, R2])
    np.testing.assert_array_equal(np.diag(ccc_matrix(4), 1), [R2, 1, 1, R2])
    C = ccc_matrix(5)
    assert C.shape == (6, 6)
    assert np.count_nonzero(C) == 5


@pytest.mark.parametrize("n", [0, -1, 2.5])
def test_ccc_matrix_rejects(n):
    with pytest.raises(ValueError):
        ccc_matrix(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_ccc_identities(n):
    C = ccc_matrix(n)
    target = np.zeros((n + 1, n + 1))
    target[0, n] = 2
    assert np.linalg.norm(matrix_power(C, n) - target) <= 1e-12
    assert numerical_radius(C).radius == pytest.approx(1.0, abs=1e-8)


def test_poly_of_matrix():
    A = np.array([[1, 2], [3, 4]], dtype=complex)
    np.testing.assert_allclose(poly_of_matrix([1, -2, 1], A), A @ A - 2 * A + np.eye(2))
    np.testing.assert_array_equal(poly_of_matrix([0, 0, 1], J), 0)
    with pytest.raises(ValueError):
        poly_of_matrix([], J)


@pytest.mark.parametrize("n", range(1, 9))
def test_monomial_ratio_ccc(n):
    cr = crouzeix_monomial_ratio(ccc_matrix(n), n, cross_check=True)
    assert cr.ratio == pytest.approx(2.0, abs=1e-6)
    assert cr.numerator == pytest.approx(2.0, abs=1e-12)
    # the boundary sweep can only underestimate max |zeta^n|
    assert cr.fov_denominator <= cr.denominator + 1e-12
    assert cr.fov_denominator == pytest.approx(cr.denominator, rel=1e-6)


def test_monomial_ratio_examples():
    assert crouzeix_monomial_ratio(J, 1).ratio == pytest.approx(2.0, abs=1e-10)
    assert crouzeix_monomial_ratio(np.diag([1.0, 0.5]), 3).ratio == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(DegenerateMatrixError):
        crouzeix_monomial_ratio(np.zeros((2, 2)), 1)
    with pytest.raises(ValueError):
        crouzeix_monomial_ratio(J, 0)


@pytest.mark.parametrize("seed", range(5))
def test_monomial_ratio_bounds(seed):
    rng = np.random.default_rng(seed)
    A = ginibre(5, rng)
    r = numerical_radius(A).radius
    rho = np.max(np.abs(np.linalg.eigvals(A)))
    assert crouzeix_monomial_ratio(A, 1).ratio >= 1 - 1e-8
    for k in range(1, 6):
        ratio = crouzeix_monomial_ratio(A, k).ratio
        # ||A^k|| >= rho(A)^k; it may drop below r(A)^k once k >= 2
        assert (rho / r) ** k - 1e-8 <= ratio <= 2 + 1e-6


def test_monomial_ratio_can_drop_below_one():
    A = ginibre(5, np.random.default_rng(0))
    assert crouzeix_monomial_ratio(A, 3).ratio < 1


@pytest.mark.parametrize("A, k, expected", [
    (J, 1, True),
    (np.diag([1.0, -1.0]), 1, False),
    (np.diag([1.0, 0.5]), 2, False),
    (J, 2, False),
])
def test_monomial_extremality_examples(A, k, expected):
    chk = monomial_extremality_test(A, k)
    assert chk.ok is expected
    assert chk.detail["agree"]


@pytest.mark.parametrize("n", range(1, 7))
def test_monomial_extremality_ccc(n):
    chk = monomial_extremality_test(ccc_matrix(n), n)
    assert chk.ok and chk.detail["agree"]
    assert is_half_radial(matrix_power(ccc_matrix(n), n)).verdict


@pytest.mark.parametrize("n", range(1, 9))
def test_crabb_chain_ccc(n):
    ch = crabb_chain(ccc_matrix(n), n)
    np.testing.assert_allclose(ch.norm_profile, _profile(n), atol=1e-6)
    assert abs(abs(ch.v[n]) - 1) < 1e-12
    assert ch.gram_offdiag <= 1e-6 and ch.tail_norm <= 1e-6
    assert np.linalg.norm(ch.Q_k.conj().T @ ch.Q_k - np.eye(n + 1)) <= 1e-10


def test_crabb_chain_scaled_shift():
    ch = crabb_chain(2 * J, 1)
    np.testing.assert_allclose(ch.norm_profile, [2, 1], atol=1e-12)
    assert ch.scale == pytest.approx(1.0)
    assert abs(abs(ch.Q_k[0, 0]) - 1) < 1e-12 and abs(abs(ch.Q_k[1, 1]) - 1) < 1e-12


@pytest.mark.parametrize("seed", range(5))
def test_crabb_chain_haar_conjugate(seed):
    Q = haar_unitary(4, seed)
    A = 3.1 * Q @ ccc_matrix(3) @ Q.conj().T
    ch = crabb_chain(A, 3)
    np.testing.assert_allclose(ch.norm_profile, _profile(3), atol=1e-6)
    assert ch.gram_offdiag <= 1e-6


def test_crabb_chain_rejects_wrong_structure():
    with pytest.raises(PreconditionError) as err:
        crabb_chain(np.diag([1.0, 0.5, 0.2]), 2)
    assert "norm_profile" in err.value.report


def test_crabb_decomposition_ccc():
    dec = crabb_decomposition(ccc_matrix(4), 4)
    assert dec.B.shape == (0, 0)
    assert dec.residual <= 1e-10


def test_crabb_decomposition_example():
    Q0 = haar_unitary(5, 17)
    B0 = np.array([[0.3, 0.1], [0, -0.2]])
    A = 1.7 * Q0 @ np.block([[ccc_matrix(2), np.zeros((3, 2))],
                             [np.zeros((2, 3)), B0]]) @ Q0.conj().T
    dec = crabb_decomposition(A, 2)
    assert dec.scale == pytest.approx(1.7, abs=1e-10)
    assert dec.residual <= 1e-8
    assert dec.b_radius <= 1 and dec.b_power_norm <= 2
    # B is unitarily similar to B0
    np.testing.assert_allclose(np.linalg.svd(dec.B, compute_uv=False),
                               np.linalg.svd(B0, compute_uv=False), atol=1e-10)


def test_crabb_decomposition_precondition(rng):
    A = ginibre(4, rng)
    assert crouzeix_monomial_ratio(A, 2).ratio < 2 - 1e-3
    with pytest.raises(PreconditionError):
        crabb_decomposition(A, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_ccc_reconstruction_round_trip(n):
    Q0 = haar_unitary(n + 1, 100 + n)
    A = Q0 @ ccc_matrix(n) @ Q0.conj().T
    dec = crabb_decomposition(A, n)
    assert dec.B.shape == (0, 0) and dec.residual <= 1e-8
    rebuilt = dec.Q_full.conj().T @ (A / dec.scale) @ dec.Q_full
    assert np.max(np.abs(rebuilt - ccc_matrix(n))) <= 1e-6


@pytest.mark.parametrize("seed", range(6))
def test_synthesized_crabb_forms(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, 5))
    n = k + 1 + int(rng.integers(0, 4))
    A = synthesize_crabb_form(n, k, scale=rng.uniform(0.5, 2), seed=seed)
    assert crouzeix_monomial_ratio(A, k).ratio == pytest.approx(2.0, abs=1e-6)
    dec = crabb_decomposition(A, k)
    assert dec.B.shape == (n - k - 1,) * 2
    assert dec.residual <= 1e-6
    assert dec.b_radius <= 1 + 1e-6 and dec.b_power_norm <= 2 + 1e-6


def test_synthesize_crabb_form_rejects():
    with pytest.raises(PreconditionError):
        synthesize_crabb_form(3, 3)
    with pytest.raises(PreconditionError):
        synthesize_crabb_form(5, 2, b_radius=1.0)


def test_poly_ratio_examples():
    assert crouzeix_poly_ratio(J, [0, 1]).ratio == pytest.approx(2.0, abs=1e-8)
    cr = crouzeix_poly_ratio(J, [0, 0, 1])
    assert cr.numerator == 0 and cr.ratio == 0
    with pytest.raises(ValueError):
        crouzeix_poly_ratio(J, [0, 0])


@pytest.mark.parametrize("seed", range(10))
def test_poly_ratio_bound(seed):
    rng = np.random.default_rng(seed)
    A = ginibre(int(rng.integers(2, 7)), rng)
    deg = int(rng.integers(1, 5))
    coeffs = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
    cr = crouzeix_poly_ratio(A, coeffs)
    assert cr.ratio <= CROUZEIX_PALENCIA + 1e-6
    assert not cr.noteworthy


@pytest.mark.parametrize("seed", range(10))
def test_power_inequality(seed):
    rng = np.random.default_rng(seed)
    A = ginibre(4, rng)
    r = numerical_radius(A).radius
    for k in range(1, 6):
        assert numerical_radius(matrix_power(A, k)).radius <= r ** k + 1e-8 * max(1, r ** k)


def test_ratio_two_exclusive_to_extremal_forms():
    rng = np.random.default_rng(7)
    gaps = []
    for _ in range(200):
        A = ginibre(int(rng.integers(2, 7)), rng)
        gaps.append(2 - crouzeix_monomial_ratio(A, 1).ratio)
    assert min(gaps) > 0


def test_ratio_table():
    rows = ratio_table(ccc_matrix(3), 4)
    assert [row["k"] for row in rows] == [1, 2, 3, 4]
    assert [row["extremal"] for row in rows] == [False, False, True, False]
    assert rows[2]["crabb"]["B_size"] == 0
    assert rows[3]["norm_Ak"] == 0
