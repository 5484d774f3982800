import numpy as np
import pytest
from hypothesis import given, settings

from admeans.exceptions import NotHermitian, NotPD, NotPSD, Singular
from admeans.linalg import (
    DEFAULT_TOL,
    ToleranceConfig,
    complex_inverse,
    conjugate_transpose,
    hermitian,
    hermitian_eigendecomposition,
    hermitian_inverse,
    hermitian_sqrt,
    is_positive_definite,
    is_positive_semidefinite,
    symmetrize,
)

from conftest import complex_from, dims, pd_from, seeds


def test_conjugate_transpose_examples():
    np.testing.assert_array_equal(conjugate_transpose(np.array([[1j]])), [[-1j]])
    np.testing.assert_array_equal(conjugate_transpose(np.eye(3)), np.eye(3))
    np.testing.assert_array_equal(conjugate_transpose(np.array([[0, 1], [0, 0]])), [[0, 0], [1, 0]])


def test_conjugate_transpose_entrywise():
    M = complex_from(3, 4)
    C = conjugate_transpose(M)
    for i in range(4):
        for j in range(4):
            assert C[i, j] == np.conj(M[j, i])


def test_eigendecomposition_examples():
    w, V = hermitian_eigendecomposition(np.diag([3.0, 1.0]))
    np.testing.assert_allclose(w, [1, 3])
    np.testing.assert_allclose(np.abs(V), [[0, 1], [1, 0]])
    w, _ = hermitian_eigendecomposition(np.array([[0, 1], [1, 0]]))
    np.testing.assert_allclose(w, [-1, 1], atol=1e-15)
    w, _ = hermitian_eigendecomposition(np.eye(5))
    np.testing.assert_allclose(w, np.ones(5))


@settings(max_examples=50, deadline=None)
@given(seeds(), dims(1, 8))
def test_eigendecomposition_reconstructs(seed, n):
    H = symmetrize(complex_from(seed, n))
    w, V = hermitian_eigendecomposition(H)
    scale = max(np.linalg.norm(H, 2), 1.0)
    assert np.all(np.diff(w) >= 0)
    assert np.linalg.norm(V @ V.conj().T - np.eye(n)) <= DEFAULT_TOL.eq_tol
    assert np.linalg.norm((V * w) @ V.conj().T - H) <= DEFAULT_TOL.eq_tol * scale


@pytest.mark.parametrize("H, pd, psd", [
    (np.diag([1.0, 2.0]), True, True),
    (np.diag([1.0, 0.0]), False, True),
    (np.array([[2.0, 3.0], [3.0, 2.0]]), False, False),  # eigenvalues -1, 5
    (np.diag([1.0, -1.0]), False, False),
    (np.zeros((3, 3)), False, True),
])
def test_definiteness(H, pd, psd):
    assert is_positive_definite(H) is pd
    assert is_positive_semidefinite(H) is psd


@settings(max_examples=100, deadline=None)
@given(seeds(), dims(1, 8))
def test_pd_implies_psd(seed, n):
    H = symmetrize(complex_from(seed, n))
    if is_positive_definite(H):
        assert is_positive_semidefinite(H)


def test_definiteness_is_scale_free():
    H = np.diag([1.0, 1e-3])
    for s in (1e-8, 1.0, 1e8):
        assert is_positive_definite(s * H)


def test_hermitian_sqrt_examples():
    np.testing.assert_allclose(hermitian_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-14)
    np.testing.assert_allclose(hermitian_sqrt(np.eye(3)), np.eye(3), atol=1e-14)
    np.testing.assert_allclose(hermitian_sqrt(np.array([[5.0, 4.0], [4.0, 5.0]])),
                               [[2.0, 1.0], [1.0, 2.0]], atol=1e-14)


def test_hermitian_sqrt_clamps_roundoff_negative():
    R = hermitian_sqrt(np.diag([1.0, -1e-14]))
    np.testing.assert_allclose(R, np.diag([1.0, 0.0]))


def test_hermitian_sqrt_rejects_indefinite():
    with pytest.raises(NotPSD):
        hermitian_sqrt(np.diag([1.0, -1.0]))


def test_hermitian_sqrt_reconstructs_random_psd(rng):
    for _ in range(100):
        n = int(rng.integers(1, 9))
        G = rng.standard_normal((n, n - 1 if n > 1 else 1)) + 1j * rng.standard_normal((n, n - 1 if n > 1 else 1))
        H = symmetrize(G @ G.conj().T)  # rank deficient PSD for n > 1
        R = hermitian_sqrt(H)
        assert np.array_equal(R, R.conj().T)
        assert is_positive_semidefinite(R)
        assert np.linalg.norm(R @ R - H, 2) <= DEFAULT_TOL.eq_tol * np.linalg.norm(H, 2)


def test_hermitian_inverse_examples():
    np.testing.assert_allclose(hermitian_inverse(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))
    np.testing.assert_allclose(hermitian_inverse(np.eye(2)), np.eye(2))
    np.testing.assert_allclose(hermitian_inverse(np.array([[2.0, 1.0], [1.0, 1.0]])),
                               [[1.0, -1.0], [-1.0, 2.0]], atol=1e-14)
    with pytest.raises(NotPD):
        hermitian_inverse(np.diag([1.0, 0.0]))


@settings(max_examples=50, deadline=None)
@given(seeds(), dims(1, 8))
def test_hermitian_inverse_involution(seed, n):
    H = pd_from(seed, n)
    Hi = hermitian_inverse(H)
    assert np.array_equal(Hi, Hi.conj().T)
    assert is_positive_definite(Hi)
    np.testing.assert_allclose(hermitian_inverse(Hi), H, atol=1e-9 * np.linalg.norm(H, 2))


def test_complex_inverse_examples():
    np.testing.assert_allclose(complex_inverse((1 + 1j) * np.eye(2)), (0.5 - 0.5j) * np.eye(2))
    np.testing.assert_allclose(complex_inverse((2 + 1j) * np.eye(2)), (0.4 - 0.2j) * np.eye(2))
    np.testing.assert_allclose(complex_inverse(np.eye(3)), np.eye(3))
    with pytest.raises(Singular):
        complex_inverse(np.array([[1.0, 2.0], [2.0, 4.0]]))


def test_hermitian_symmetrizes_exactly():
    M = complex_from(1, 5)
    H = symmetrize(M)
    assert np.array_equal(H, H.conj().T)
    H2 = hermitian(H + 1e-14 * complex_from(2, 5))
    assert np.array_equal(H2, H2.conj().T)
    with pytest.raises(NotHermitian):
        hermitian(M)


def test_tolerance_config_validation(monkeypatch):
    with pytest.raises(ValueError):
        ToleranceConfig(psd_tol=1e-6, pd_tol=1e-8)
    with pytest.raises(ValueError):
        ToleranceConfig(eq_tol=-1)
    monkeypatch.setenv("AD_MEANS_TOL", "1e-6")
    assert ToleranceConfig.from_env().eq_tol == 1e-6
    assert ToleranceConfig.from_env(1e-3).eq_tol == 1e-3
    monkeypatch.delenv("AD_MEANS_TOL")
    assert ToleranceConfig.from_env() == DEFAULT_TOL
