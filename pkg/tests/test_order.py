import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from admeans.exceptions import DimensionMismatch, NotAccretiveDissipative
from admeans.linalg import DEFAULT_TOL, is_positive_definite
from admeans.order import (
    AccretiveDissipativeMatrix,
    Order,
    PartOrder,
    ad_sqrt,
    compare_extended_order,
    compare_loewner,
    is_accretive_dissipative,
    recompose,
    toeplitz_decompose,
)

from conftest import ad_from, complex_from, dims, seeds


def denman_beavers(T, iters=60):
    """Independent principal square root: Y_{k+1} = (Y_k + Z_k^{-1})/2,
    Z_{k+1} = (Z_k + Y_k^{-1})/2 with Y_0 = T, Z_0 = I."""
    Y, Z = T.astype(complex), np.eye(T.shape[0], dtype=complex)
    for _ in range(iters):
        Y, Z = (Y + np.linalg.inv(Z)) / 2, (Z + np.linalg.inv(Y)) / 2
    return Y


def test_toeplitz_examples():
    p = toeplitz_decompose((32 + 24j) * np.eye(2))
    np.testing.assert_array_equal(p.real, 32 * np.eye(2))
    np.testing.assert_array_equal(p.imag, 24 * np.eye(2))
    p = toeplitz_decompose(np.eye(3))
    np.testing.assert_array_equal(p.real, np.eye(3))
    np.testing.assert_array_equal(p.imag, np.zeros((3, 3)))
    # (T ± T*)/2 by hand for T = [[1+2i, 3], [-3, 4i]]
    p = toeplitz_decompose(np.array([[1 + 2j, 3], [-3, 4j]]))
    np.testing.assert_allclose(p.real, [[1, 0], [0, 0]], atol=1e-15)
    np.testing.assert_allclose(p.imag, [[2, -3j], [3j, 4]], atol=1e-15)


@settings(max_examples=200, deadline=None)
@given(seeds(), dims(1, 8))
def test_toeplitz_round_trip(seed, n):
    T = complex_from(seed, n)
    p = toeplitz_decompose(T)
    assert np.array_equal(p.real, p.real.conj().T)
    assert np.array_equal(p.imag, p.imag.conj().T)
    assert np.linalg.norm(recompose(p) - T) <= DEFAULT_TOL.eq_tol * max(np.linalg.norm(T, 2), 1)


@pytest.mark.parametrize("z, expected", [(1 + 1j, True), (1, False), (1 - 1j, False), (-1 + 1j, False)])
def test_is_accretive_dissipative(z, expected):
    assert is_accretive_dissipative(z * np.eye(2)) is expected


def test_ad_construction_rejects_outside_cone():
    with pytest.raises(NotAccretiveDissipative):
        AccretiveDissipativeMatrix.from_matrix(np.eye(2))
    T = AccretiveDissipativeMatrix.from_matrix((1 + 1j) * np.eye(2))
    assert T.n == 2
    np.testing.assert_array_equal(np.asarray(T), (1 + 1j) * np.eye(2))


@settings(max_examples=100, deadline=None)
@given(seeds(), dims(1, 6), st.floats(0.01, 100), st.floats(0.01, 100))
def test_cone_closed_under_positive_combinations(seed, n, a, b):
    T, S = ad_from(seed, n), ad_from(seed + 1, n)
    assert is_accretive_dissipative(a * T.matrix + b * S.matrix)


def test_compare_paper_pairs():
    T, S = (32 + 24j) * np.eye(2), (7 + 24j) * np.eye(2)
    rel = compare_extended_order(T, S)
    assert rel.tag is Order.GREATER_EQ
    assert (rel.real, rel.imag) == (PartOrder.GE, PartOrder.EQ)
    roots = compare_extended_order((6 + 2j) * np.eye(2), (4 + 3j) * np.eye(2))
    assert roots.tag is Order.INCOMPARABLE
    assert compare_extended_order(T, T).tag is Order.EQUAL


def test_compare_strict_variants():
    assert compare_extended_order(3 + 3j, 1 + 1j).tag is Order.STRICT_GREATER
    assert compare_extended_order(1 + 1j, 3 + 3j).tag is Order.STRICT_LESS
    assert compare_extended_order(1 + 3j, 1 + 1j).tag is Order.GREATER_EQ
    # semidefinite but singular difference is not strict
    T = np.diag([2.0, 1.0]) * (1 + 1j)
    assert compare_extended_order(T, (1 + 1j) * np.eye(2)).tag is Order.GREATER_EQ


def test_compare_incomparable_within_a_part():
    rel = compare_extended_order(np.diag([2.0, 1.0]) + 1j * np.eye(2), np.diag([1.0, 2.0]) + 1j * np.eye(2))
    assert rel.real is PartOrder.INCOMPARABLE
    assert rel.tag is Order.INCOMPARABLE


def test_compare_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compare_extended_order(np.eye(2), np.eye(3))


def test_compare_loewner_hermitian():
    A = np.array([[2.0, 1.0], [1.0, 2.0]])
    assert compare_loewner(A, np.eye(2)).tag is Order.GREATER_EQ
    assert compare_loewner(np.eye(2), A).tag is Order.LESS_EQ
    assert compare_loewner(A, A).tag is Order.EQUAL


@settings(max_examples=200, deadline=None)
@given(seeds(), dims(1, 5))
def test_order_consistency(seed, n):
    T, S = ad_from(seed, n), ad_from(seed + 7, n)
    if seed % 2:
        S = AccretiveDissipativeMatrix.from_matrix(T.matrix + S.matrix)
    fwd, back = compare_extended_order(T, S), compare_extended_order(S, T)
    assert (fwd.tag is Order.GREATER_EQ) == (back.tag is Order.LESS_EQ)
    assert (fwd.tag is Order.STRICT_GREATER) == (back.tag is Order.STRICT_LESS)
    assert fwd.incomparable == back.incomparable
    assert compare_extended_order(T, T).equal


@pytest.mark.parametrize("z, root", [(32 + 24j, 6 + 2j), (7 + 24j, 4 + 3j), (3 + 4j, 2 + 1j), (15 + 8j, 4 + 1j)])
def test_ad_sqrt_scalar_examples(z, root):
    R = ad_sqrt(z * np.eye(2))
    np.testing.assert_allclose(R.matrix, root * np.eye(2), atol=1e-9)


def test_ad_sqrt_random_against_denman_beavers(rng):
    for i in range(100):
        n = 1 + i % 8
        T = ad_from(int(rng.integers(2**32)), n)
        R = ad_sqrt(T)
        scale = np.linalg.norm(T.matrix, 2)
        assert np.linalg.norm(R.matrix @ R.matrix - T.matrix, 2) <= DEFAULT_TOL.eq_tol * scale
        assert is_positive_definite(R.real) and is_positive_definite(R.imag)
        np.testing.assert_allclose(R.matrix, denman_beavers(T.matrix), atol=1e-8 * np.sqrt(scale))


def test_loewner_theorem_fails_for_square_roots():
    T, S = (32 + 24j) * np.eye(2), (7 + 24j) * np.eye(2)
    assert compare_extended_order(T, S).ge
    assert compare_extended_order(ad_sqrt(T), ad_sqrt(S)).incomparable
