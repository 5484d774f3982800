"""
Schur complements, parallel sums and the identities relating them to the
means of accretive-dissipative matrices.

A matrix is split at index ``k`` into blocks ``M11`` (k×k), ``M12``, ``M21``
and ``M22`` ((n-k)×(n-k)); the Schur complement of ``M22`` is
``M / M22 = M11 − M12 M22^{-1} M21``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch, NotPD, SingularBlock
from .linalg import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_square,
    check_same_shape,
    complex_inverse,
    hermitian_inverse,
    is_nonsingular,
    is_positive_definite,
    spectral_norm,
    symmetrize,
)
from .means import MeanKind, ad_mean, hermitian_mean
from .order import (
    OrderRelation,
    as_ad,
    compare_extended_order,
    compare_loewner,
    matrix_of,
)


@dataclass(frozen=True)
class BlockPartition:
    """Split index ``k``: the leading k×k block is the (1,1) block."""

    k: int

    def validate(self, n: int) -> None:
        if not 1 <= self.k < n:
            raise DimensionMismatch(f"split index {self.k} invalid for dimension {n}")

    def blocks(self, M) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        M = np.asarray(M)
        self.validate(M.shape[0])
        k = self.k
        return M[:k, :k], M[:k, k:], M[k:, :k], M[k:, k:]


def _partition(p) -> BlockPartition:
    return p if isinstance(p, BlockPartition) else BlockPartition(int(p))


def _check_block(M22, tol):
    if not is_nonsingular(M22, tol):
        raise SingularBlock("(2,2) block is numerically singular")


def schur_complement(M, p, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """``M11 − M12 M22^{-1} M21`` for the split ``p`` (a BlockPartition or int)."""
    M = matrix_of(M)
    M11, M12, M21, M22 = _partition(p).blocks(M)
    _check_block(M22, tol)
    return M11 - M12 @ np.linalg.solve(M22, M21)


def parallel_sum(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """``T : S = (T^{-1} + S^{-1})^{-1}``."""
    T, S = matrix_of(T), matrix_of(S)
    check_same_shape(T, S)
    return complex_inverse(complex_inverse(T, tol) + complex_inverse(S, tol), tol)


@dataclass(frozen=True)
class InverseParts:
    """Toeplitz parts of ``T^{-1} = E + iF``.

    ``residual`` is the distance between ``E + iF`` and a direct inverse.
    """

    E: np.ndarray
    F: np.ndarray
    residual: float


def _real_block(A, B, tol):
    """(A + B A^{-1} B)^{-1} for Hermitian PD A and Hermitian B."""
    return hermitian_inverse(symmetrize(A + B @ hermitian_inverse(A, tol) @ B), tol)


def inverse_parts(T, tol: ToleranceConfig = DEFAULT_TOL) -> InverseParts:
    """``E = (A + BA^{-1}B)^{-1}`` and ``F = −(B + AB^{-1}A)^{-1}``."""
    T = as_ad(T, tol)
    A, B = T.real, T.imag
    E = _real_block(A, B, tol)
    F = -_real_block(B, A, tol)
    residual = float(np.linalg.norm(E + 1j * F - complex_inverse(T.matrix, tol)))
    return InverseParts(E, F, residual)


def identity_residuals(T, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[float, float]:
    """Residuals of the two inverse identities

    A^{-1} = P^{-1} + Q^{-1} P Q^{-1},   B^{-1} = Q^{-1} + P^{-1} Q P^{-1},

    with ``P = A + BA^{-1}B`` and ``Q = B + AB^{-1}A`` (Frobenius norms).
    """
    T = as_ad(T, tol)
    A, B = T.real, T.imag
    Ai, Bi = hermitian_inverse(A, tol), hermitian_inverse(B, tol)
    P = symmetrize(A + B @ Ai @ B)
    Q = symmetrize(B + A @ Bi @ A)
    Pi, Qi = hermitian_inverse(P, tol), hermitian_inverse(Q, tol)
    r1 = np.linalg.norm(Ai - (Pi + Qi @ P @ Qi))
    r2 = np.linalg.norm(Bi - (Qi + Pi @ Q @ Pi))
    return float(r1), float(r2)


def smw_residual(T, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """‖(A + BA^{-1}B)^{-1} − [A^{-1} − A^{-1}B (A + BA^{-1}B)^{-1} B A^{-1}]‖."""
    T = as_ad(T, tol)
    A, B = T.real, T.imag
    Ai = hermitian_inverse(A, tol)
    Pi = hermitian_inverse(symmetrize(A + B @ Ai @ B), tol)
    return float(np.linalg.norm(Pi - (Ai - Ai @ B @ Pi @ B @ Ai)))


@dataclass(frozen=True)
class SchurCorrectionTerms:
    """Correction factors in ``(A+B)/(A22+B22) = A/A22 + B/B22 + X (A22:B22) Y``."""

    X: np.ndarray
    Y: np.ndarray
    core: np.ndarray

    @property
    def correction(self) -> np.ndarray:
        return self.X @ self.core @ self.Y


def schur_sum_decomposition(A, B, p, tol: ToleranceConfig = DEFAULT_TOL):
    """Both sides of the Schur-complement-of-a-sum identity.

    Returns ``(lhs, rhs, terms)`` where ``lhs = (A+B)/(A22+B22)`` and
    ``rhs = A/A22 + B/B22 + X (A22 : B22) Y``.  Valid for arbitrary complex
    blocks as long as ``A22``, ``B22`` and ``A22 + B22`` are nonsingular.
    """
    A, B = as_square(A), as_square(B)
    check_same_shape(A, B)
    p = _partition(p)
    A11, A12, A21, A22 = p.blocks(A)
    B11, B12, B21, B22 = p.blocks(B)
    for blk in (A22, B22, A22 + B22):
        _check_block(blk, tol)
    A22i, B22i = np.linalg.inv(A22), np.linalg.inv(B22)
    X = A12 @ A22i - B12 @ B22i
    Y = A22i @ A21 - B22i @ B21
    core = parallel_sum(A22, B22, tol)
    terms = SchurCorrectionTerms(X, Y, core)
    lhs = schur_complement(A + B, p, tol)
    rhs = schur_complement(A, p, tol) + schur_complement(B, p, tol) + terms.correction
    return lhs, rhs, terms


def _pd_pair(A, B, tol):
    A, B = symmetrize(as_square(A)), symmetrize(as_square(B))
    check_same_shape(A, B)
    if not (is_positive_definite(A, tol) and is_positive_definite(B, tol)):
        raise NotPD("both matrices must be positive definite")
    return A, B


def check_fm_inequality(A, B, p, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Loewner comparison of ``(A+B)/(A22+B22)`` against ``A/A22 + B/B22``."""
    A, B = _pd_pair(A, B, tol)
    lhs = schur_complement(A + B, p, tol)
    rhs = schur_complement(A, p, tol) + schur_complement(B, p, tol)
    return compare_loewner(lhs, rhs, tol)


def check_mixed_schur(A, B, p, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Compare ``(A+iB)/(A22+iB22)`` against ``A/A22 + i B/B22``."""
    A, B = _pd_pair(A, B, tol)
    lhs = schur_complement(A + 1j * B, p, tol)
    rhs = schur_complement(A, p, tol) + 1j * schur_complement(B, p, tol)
    return compare_extended_order(lhs, rhs, tol)


def check_parallel_vs_harmonic(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Compare ``2(T:S)`` against ``T ! S``; expected ``>=``."""
    T, S = as_ad(T, tol), as_ad(S, tol)
    two_par = 2 * parallel_sum(T, S, tol)
    return compare_extended_order(two_par, ad_mean(MeanKind.HARMONIC, T, S, tol), tol)


def compare_parallel_vs_geometric(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Compare ``2(T:S)`` against ``T ♯ S``; no fixed outcome."""
    T, S = as_ad(T, tol), as_ad(S, tol)
    two_par = 2 * parallel_sum(T, S, tol)
    return compare_extended_order(two_par, ad_mean(MeanKind.GEOMETRIC, T, S, tol), tol)


def check_pd_schur_mean(A, C, kind, p, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Loewner comparison of ``(AσC)/(AσC)22`` against ``(A/A22) σ (C/C22)``."""
    A, C = _pd_pair(A, C, tol)
    lhs = schur_complement(hermitian_mean(kind, A, C, tol), p, tol)
    rhs = hermitian_mean(kind, symmetrize(schur_complement(A, p, tol)),
                         symmetrize(schur_complement(C, p, tol)), tol)
    return compare_loewner(lhs, rhs, tol)


def _binary(kind: MeanKind, T, S, tol, arithmetic: str):
    """``T σ S`` as a plain array; for σ = ∇ optionally the plain sum."""
    if kind is MeanKind.ARITHMETIC and arithmetic == "sum":
        return matrix_of(T) + matrix_of(S)
    return ad_mean(kind, T, S, tol).matrix


def evaluate_schur_mean_conjecture(T, S, kind, p, tol: ToleranceConfig = DEFAULT_TOL, arithmetic: str = "mean"):
    """Both sides of the proposed ``(TσS)/(TσS)22 >= (T/T22) σ (S/S22)``.

    Returns ``(lhs, rhs, relation)``.  The inequality is false in general;
    this only evaluates it.  ``arithmetic="sum"`` replaces ∇ by ``+``.
    """
    if arithmetic not in ("mean", "sum"):
        raise ValueError("arithmetic must be 'mean' or 'sum'")
    kind = MeanKind.parse(kind)
    T, S = as_ad(T, tol), as_ad(S, tol)
    check_same_shape(T.matrix, S.matrix)
    lhs = schur_complement(_binary(kind, T, S, tol, arithmetic), p, tol)
    T_sc = as_ad(schur_complement(T, p, tol), tol)
    S_sc = as_ad(schur_complement(S, p, tol), tol)
    rhs = _binary(kind, T_sc, S_sc, tol, arithmetic)
    return lhs, rhs, compare_extended_order(lhs, rhs, tol)


def check_lower_bound_chain(T, S, kind, p, tol: ToleranceConfig = DEFAULT_TOL):
    """Relations along

    (TσS)/(TσS)22 >= (AσC)/(AσC)22 + i (BσD)/(BσD)22
                  >= (A/A22)σ(C/C22) + i (B/B22)σ(D/D22).
    """
    kind = MeanKind.parse(kind)
    T, S = as_ad(T, tol), as_ad(S, tol)
    check_same_shape(T.matrix, S.matrix)
    AC = hermitian_mean(kind, T.real, S.real, tol)
    BD = hermitian_mean(kind, T.imag, S.imag, tol)
    top = schur_complement(AC + 1j * BD, p, tol)
    middle = schur_complement(AC, p, tol) + 1j * schur_complement(BD, p, tol)

    def sc(H):
        return symmetrize(schur_complement(H, p, tol))

    bottom = (hermitian_mean(kind, sc(T.real), sc(S.real), tol)
              + 1j * hermitian_mean(kind, sc(T.imag), sc(S.imag), tol))
    return compare_extended_order(top, middle, tol), compare_extended_order(middle, bottom, tol)


def parallel_sum_schur_equality(T, S, p, tol: ToleranceConfig = DEFAULT_TOL, general: bool = False) -> float:
    """‖(T:S)/(T:S)22 − (T/T22):(S/S22)‖ (Frobenius).

    By default ``T`` and ``S`` must be accretive-dissipative; ``general=True``
    accepts any matrices for which the inverses involved exist.
    """
    if general:
        T, S = matrix_of(T), matrix_of(S)
    else:
        T, S = as_ad(T, tol).matrix, as_ad(S, tol).matrix
    check_same_shape(T, S)
    par = parallel_sum(T, S, tol)
    lhs = schur_complement(par, p, tol)
    rhs = parallel_sum(schur_complement(T, p, tol), schur_complement(S, p, tol), tol)
    return float(np.linalg.norm(lhs - rhs))


def inverse_block_residual(M, p, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """‖(M^{-1})_{11} − (M/M22)^{-1}‖ (Frobenius)."""
    M = matrix_of(M)
    p = _partition(p)
    Minv = complex_inverse(M, tol)
    return float(np.linalg.norm(Minv[:p.k, :p.k] - complex_inverse(schur_complement(M, p, tol), tol)))


def inverse_order(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Compare ``T^{-1}`` against ``S^{-1}``."""
    T, S = matrix_of(T), matrix_of(S)
    return compare_extended_order(complex_inverse(T, tol), complex_inverse(S, tol), tol)


def residual_scale(*mats) -> float:
    """Scale used to make residual thresholds relative: the largest spectral
    norm among the operands (at least 1)."""
    return max([spectral_norm(matrix_of(M)) for M in mats] + [1.0])
