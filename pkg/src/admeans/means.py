"""
Arithmetic, geometric and harmonic means.

For Hermitian positive definite ``A`` and ``C``::

    A ∇ C = (A + C) / 2
    A ♯ C = A^{1/2} (A^{-1/2} C A^{-1/2})^{1/2} A^{1/2}
    A ! C = 2 (A^{-1} + C^{-1})^{-1}

and for accretive-dissipative ``T = A + iB``, ``S = C + iD`` each mean acts
on the real and imaginary parts separately: ``T σ S = A σ C + i (B σ D)``.

The ``check_*`` helpers evaluate the known inequalities between these means
and return relations or residuals; they never assert.
"""

from __future__ import annotations

import enum
from typing import Sequence

import numpy as np

from .exceptions import DimensionMismatch, HypothesisFail, NotPD, Singular
from .linalg import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_square,
    check_same_shape,
    complex_inverse,
    hermitian_inv_sqrt,
    hermitian_inverse,
    hermitian_sqrt,
    is_nonsingular,
    is_positive_definite,
    is_positive_semidefinite,
    spectral_norm,
    symmetrize,
)
from .order import (
    AccretiveDissipativeMatrix,
    OrderRelation,
    ad_sqrt,
    as_ad,
    compare_extended_order,
    matrix_of,
    toeplitz_decompose,
)


class MeanKind(enum.Enum):
    ARITHMETIC = "arith"
    GEOMETRIC = "geo"
    HARMONIC = "harm"

    @classmethod
    def parse(cls, value) -> "MeanKind":
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower()):
                return kind
        raise ValueError(f"unknown mean kind {value!r}")

    @property
    def symbol(self) -> str:
        return {"arith": "∇", "geo": "♯", "harm": "!"}[self.value]


def _require_pd(H, tol, name):
    if not is_positive_definite(H, tol):
        raise NotPD(f"{name} is not positive definite")


def _geometric(A, C, tol):
    Ah = hermitian_sqrt(A, tol)
    Aih = hermitian_inv_sqrt(A, tol)
    inner = hermitian_sqrt(symmetrize(Aih @ C @ Aih), tol)
    return symmetrize(Ah @ inner @ Ah)


def hermitian_mean(kind, A, C, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Mean of two Hermitian positive definite matrices.

    The geometric mean is evaluated in both argument orders and averaged, so
    the result is symmetric in ``(A, C)`` up to rounding of the final sum.
    """
    kind = MeanKind.parse(kind)
    A, C = symmetrize(as_square(A)), symmetrize(as_square(C))
    check_same_shape(A, C)
    _require_pd(A, tol, "A")
    _require_pd(C, tol, "C")
    if kind is MeanKind.ARITHMETIC:
        return symmetrize((A + C) / 2)
    if kind is MeanKind.GEOMETRIC:
        return symmetrize((_geometric(A, C, tol) + _geometric(C, A, tol)) / 2)
    inv_sum = symmetrize(hermitian_inverse(A, tol) + hermitian_inverse(C, tol))
    return symmetrize(2 * hermitian_inverse(inv_sum, tol))


def ad_mean(kind, T, S, tol: ToleranceConfig = DEFAULT_TOL) -> AccretiveDissipativeMatrix:
    """Mean of two accretive-dissipative matrices, taken part by part."""
    T, S = as_ad(T, tol), as_ad(S, tol)
    if T.n != S.n:
        raise DimensionMismatch(f"dimensions differ: {T.n} vs {S.n}")
    re = hermitian_mean(kind, T.real, S.real, tol)
    im = hermitian_mean(kind, T.imag, S.imag, tol)
    return AccretiveDissipativeMatrix.from_parts(re, im, tol)


def arithmetic_mean(T, S, tol=DEFAULT_TOL):
    return ad_mean(MeanKind.ARITHMETIC, T, S, tol)


def geometric_mean(T, S, tol=DEFAULT_TOL):
    return ad_mean(MeanKind.GEOMETRIC, T, S, tol)


def harmonic_mean(T, S, tol=DEFAULT_TOL):
    return ad_mean(MeanKind.HARMONIC, T, S, tol)


def _extended_psd(M, tol) -> bool:
    parts = toeplitz_decompose(M)
    return is_positive_semidefinite(parts.real, tol) and is_positive_semidefinite(parts.imag, tol)


def _block_operands(T, S, X):
    T, S, X = matrix_of(T), matrix_of(S), as_square(X)
    check_same_shape(T, S, X)
    return T, S, X


def geometric_block_witness(T, S, X, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether ``[[T, X], [X, S]] >= 0`` in the extended order.

    The geometric mean ``T ♯ S`` is the largest such ``X``.
    """
    T, S, X = _block_operands(T, S, X)
    return _extended_psd(np.block([[T, X], [X, S]]), tol)


def harmonic_block_witness(T, S, X, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Whether ``diag(2T, 2S) >= [[X, X], [X, X]]`` in the extended order.

    The harmonic mean ``T ! S`` is the largest such ``X``.
    """
    T, S, X = _block_operands(T, S, X)
    return _extended_psd(np.block([[2 * T - X, -X], [-X, 2 * S - X]]), tol)


def check_superadditivity(kind, pairs: Sequence, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Compare ``(ΣT_k) σ (ΣS_k)`` against ``Σ (T_k σ S_k)`` for σ in {♯, !}."""
    kind = MeanKind.parse(kind)
    if kind is MeanKind.ARITHMETIC:
        raise ValueError("superadditivity applies to the geometric and harmonic means")
    if not pairs:
        raise ValueError("need at least one pair")
    pairs = [(as_ad(T, tol), as_ad(S, tol)) for T, S in pairs]
    sum_T = sum(T.matrix for T, _ in pairs)
    sum_S = sum(S.matrix for _, S in pairs)
    lhs = ad_mean(kind, sum_T, sum_S, tol)
    rhs = sum(ad_mean(kind, T, S, tol).matrix for T, S in pairs)
    return compare_extended_order(lhs, rhs, tol)


def check_amgmhm(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[OrderRelation, OrderRelation]:
    """Return ``(compare(T∇S, T♯S), compare(T♯S, T!S))``."""
    am = ad_mean(MeanKind.ARITHMETIC, T, S, tol)
    gm = ad_mean(MeanKind.GEOMETRIC, T, S, tol)
    hm = ad_mean(MeanKind.HARMONIC, T, S, tol)
    return compare_extended_order(am, gm, tol), compare_extended_order(gm, hm, tol)


def congruence_residual(T, S, Q, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """‖(Q*TQ) ♯ (Q*SQ) − Q*(T♯S)Q‖ (Frobenius)."""
    T, S = as_ad(T, tol), as_ad(S, tol)
    Q = as_square(Q)
    check_same_shape(T.matrix, Q)
    if not is_nonsingular(Q, tol):
        raise Singular("Q must be nonsingular")
    Qs = Q.conj().T
    lhs = ad_mean(MeanKind.GEOMETRIC, Qs @ T.matrix @ Q, Qs @ S.matrix @ Q, tol).matrix
    rhs = Qs @ ad_mean(MeanKind.GEOMETRIC, T, S, tol).matrix @ Q
    return float(np.linalg.norm(lhs - rhs))


def check_congruence(T, S, Q, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    T, S = as_ad(T, tol), as_ad(S, tol)
    scale = spectral_norm(Q) ** 2 * max(spectral_norm(T.matrix), spectral_norm(S.matrix), 1.0)
    return congruence_residual(T, S, Q, tol) <= tol.eq_tol * scale


def _commute_close(X, Y, tol) -> bool:
    scale = max(spectral_norm(X) * spectral_norm(Y), 1.0)
    return spectral_norm(X @ Y - Y @ X) <= tol.eq_tol * scale


def commuting_normal_geometric(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Residual between ``T ♯ S`` and ``A^{1/2}C^{1/2} + i B^{1/2}D^{1/2}``.

    Only meaningful when ``TS = ST`` and one of ``T``, ``S`` is normal; raises
    :class:`HypothesisFail` otherwise.
    """
    T, S = as_ad(T, tol), as_ad(S, tol)
    check_same_shape(T.matrix, S.matrix)
    if not _commute_close(T.matrix, S.matrix, tol):
        raise HypothesisFail("T and S do not commute")
    if not (_commute_close(T.matrix, T.matrix.conj().T, tol)
            or _commute_close(S.matrix, S.matrix.conj().T, tol)):
        raise HypothesisFail("neither T nor S is normal")
    closed = (hermitian_sqrt(T.real, tol) @ hermitian_sqrt(S.real, tol)
              + 1j * hermitian_sqrt(T.imag, tol) @ hermitian_sqrt(S.imag, tol))
    return float(np.linalg.norm(ad_mean(MeanKind.GEOMETRIC, T, S, tol).matrix - closed))


def sqrt_product(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """``T^{1/2} S^{1/2}`` with principal roots; generally differs from ``T ♯ S``."""
    return ad_sqrt(T, tol).matrix @ ad_sqrt(S, tol).matrix


def check_order_equivalences(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[bool, bool, bool]:
    """Evaluate ``(T♯S <= S, T <= S, T <= T♯S)``; all three should agree."""
    T, S = as_ad(T, tol), as_ad(S, tol)
    G = ad_mean(MeanKind.GEOMETRIC, T, S, tol)
    return (
        compare_extended_order(G, S, tol).le,
        compare_extended_order(T, S, tol).le,
        compare_extended_order(T, G, tol).le,
    )


def riccati_residual(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """‖G T^{-1} G − S‖ (Frobenius) with ``G = T ♯ S``.

    For positive definite matrices this vanishes; for accretive-dissipative
    ones it usually does not.
    """
    T, S = as_ad(T, tol), as_ad(S, tol)
    G = ad_mean(MeanKind.GEOMETRIC, T, S, tol).matrix
    return float(np.linalg.norm(G @ complex_inverse(T.matrix, tol) @ G - S.matrix))
