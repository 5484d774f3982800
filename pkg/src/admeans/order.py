"""
Toeplitz decomposition, the accretive-dissipative cone and the extended
Loewner order.

Every complex square matrix splits uniquely as ``T = A + iB`` with
``A = (T + T*)/2`` and ``B = (T - T*)/(2i)`` Hermitian.  ``T >= S`` in the
extended order when both ``A >= C`` and ``B >= D`` in the Loewner order, and
``T`` is accretive-dissipative when ``A`` and ``B`` are both positive definite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import NotAccretiveDissipative, SqrtNotInCone
from .linalg import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_square,
    check_same_shape,
    is_positive_definite,
    spectral_norm,
    symmetrize,
)


@dataclass(frozen=True)
class ToeplitzParts:
    real: np.ndarray
    imag: np.ndarray

    def recompose(self) -> np.ndarray:
        return self.real + 1j * self.imag


def toeplitz_decompose(T) -> ToeplitzParts:
    T = as_square(T)
    Ts = T.conj().T
    return ToeplitzParts(symmetrize((T + Ts) / 2), symmetrize((T - Ts) / 2j))


def recompose(parts: ToeplitzParts) -> np.ndarray:
    return parts.recompose()


def is_accretive_dissipative(T, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    parts = toeplitz_decompose(T)
    return is_positive_definite(parts.real, tol) and is_positive_definite(parts.imag, tol)


@dataclass(frozen=True, eq=False)
class AccretiveDissipativeMatrix:
    """A complex matrix whose real and imaginary parts are positive definite.

    Build instances with :meth:`from_matrix`, which checks membership.
    """

    matrix: np.ndarray
    parts: ToeplitzParts

    @classmethod
    def from_matrix(cls, T, tol: ToleranceConfig = DEFAULT_TOL) -> "AccretiveDissipativeMatrix":
        T = as_square(T)
        parts = toeplitz_decompose(T)
        if not (is_positive_definite(parts.real, tol) and is_positive_definite(parts.imag, tol)):
            raise NotAccretiveDissipative("real and imaginary parts must both be positive definite")
        T.setflags(write=False)
        return cls(T, parts)

    @classmethod
    def from_parts(cls, real, imag, tol: ToleranceConfig = DEFAULT_TOL) -> "AccretiveDissipativeMatrix":
        return cls.from_matrix(np.asarray(real) + 1j * np.asarray(imag), tol)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def real(self) -> np.ndarray:
        return self.parts.real

    @property
    def imag(self) -> np.ndarray:
        return self.parts.imag

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.matrix, dtype=dtype)

    def __repr__(self) -> str:
        return f"AccretiveDissipativeMatrix(n={self.n})"


AD = AccretiveDissipativeMatrix


def as_ad(T, tol: ToleranceConfig = DEFAULT_TOL) -> AccretiveDissipativeMatrix:
    """Pass AD instances through; validate anything else."""
    if isinstance(T, AccretiveDissipativeMatrix):
        return T
    return AccretiveDissipativeMatrix.from_matrix(T, tol)


def matrix_of(T) -> np.ndarray:
    if isinstance(T, AccretiveDissipativeMatrix):
        return T.matrix
    return as_square(T)


class PartOrder(enum.Enum):
    """Loewner relation between two Hermitian matrices."""

    EQ = "="
    GE = ">="
    LE = "<="
    INCOMPARABLE = "incomparable"


class Order(enum.Enum):
    EQUAL = "Equal"
    GREATER_EQ = "GreaterEq"
    LESS_EQ = "LessEq"
    STRICT_GREATER = "StrictGreater"
    STRICT_LESS = "StrictLess"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class OrderRelation:
    """Outcome of comparing ``T`` against ``S`` in the extended order.

    ``real`` and ``imag`` are the per-part Loewner witnesses.
    """

    tag: Order
    real: PartOrder
    imag: PartOrder

    @property
    def ge(self) -> bool:
        """``T >= S`` holds (Equal, GreaterEq or StrictGreater)."""
        return self.tag in (Order.EQUAL, Order.GREATER_EQ, Order.STRICT_GREATER)

    @property
    def le(self) -> bool:
        return self.tag in (Order.EQUAL, Order.LESS_EQ, Order.STRICT_LESS)

    @property
    def equal(self) -> bool:
        return self.tag is Order.EQUAL

    @property
    def incomparable(self) -> bool:
        return self.tag is Order.INCOMPARABLE

    def to_dict(self) -> dict:
        return {"tag": self.tag.value, "real": self.real.value, "imag": self.imag.value}

    def __str__(self) -> str:
        return f"{self.tag.value} (real {self.real.value}, imag {self.imag.value})"


def _loewner_part(X: np.ndarray, Y: np.ndarray, tol: ToleranceConfig) -> tuple[PartOrder, bool, bool]:
    """Relation of Hermitian X to Y, plus strict-greater and strict-less flags."""
    D = symmetrize(X - Y)
    nx, ny = spectral_norm(X), spectral_norm(Y)
    w = np.linalg.eigvalsh(D)
    dnorm = float(np.max(np.abs(w)))
    if dnorm <= tol.eq_tol * max(nx, ny, 1.0):
        return PartOrder.EQ, False, False
    scale = max(nx, ny) or 1.0
    ge = w[0] >= -tol.psd_tol * scale
    le = w[-1] <= tol.psd_tol * scale
    strict_gt = bool(w[0] > tol.pd_tol * scale)
    strict_lt = bool(w[-1] < -tol.pd_tol * scale)
    if ge and le:
        return PartOrder.EQ, False, False
    if ge:
        return PartOrder.GE, strict_gt, False
    if le:
        return PartOrder.LE, False, strict_lt
    return PartOrder.INCOMPARABLE, False, False


def _combine(re, im) -> OrderRelation:
    (r, r_gt, r_lt), (i, i_gt, i_lt) = re, im
    pair = {r, i}
    if pair == {PartOrder.EQ}:
        tag = Order.EQUAL
    elif pair <= {PartOrder.EQ, PartOrder.GE}:
        tag = Order.STRICT_GREATER if (r_gt and i_gt) else Order.GREATER_EQ
    elif pair <= {PartOrder.EQ, PartOrder.LE}:
        tag = Order.STRICT_LESS if (r_lt and i_lt) else Order.LESS_EQ
    else:
        tag = Order.INCOMPARABLE
    return OrderRelation(tag, r, i)


def compare_extended_order(T, S, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Compare ``T`` against ``S``: both real and imaginary parts must agree."""
    T, S = matrix_of(T), matrix_of(S)
    check_same_shape(T, S)
    pt, ps = toeplitz_decompose(T), toeplitz_decompose(S)
    return _combine(
        _loewner_part(pt.real, ps.real, tol),
        _loewner_part(pt.imag, ps.imag, tol),
    )


def compare_loewner(X, Y, tol: ToleranceConfig = DEFAULT_TOL) -> OrderRelation:
    """Loewner comparison of Hermitian matrices, reported as an OrderRelation
    whose imaginary witness is always ``=``."""
    X, Y = as_square(X), as_square(Y)
    check_same_shape(X, Y)
    eq = (PartOrder.EQ, False, False)
    return _combine(_loewner_part(symmetrize(X), symmetrize(Y), tol), eq)


def ad_sqrt(T, tol: ToleranceConfig = DEFAULT_TOL) -> AccretiveDissipativeMatrix:
    """Principal square root, which for an accretive-dissipative matrix is
    itself accretive-dissipative."""
    T = as_ad(T, tol)
    R = np.asarray(scipy.linalg.sqrtm(T.matrix), dtype=np.complex128)
    resid = spectral_norm(R @ R - T.matrix)
    if not np.all(np.isfinite(R)) or resid > tol.eq_tol * spectral_norm(T.matrix):
        raise SqrtNotInCone(f"square root residual too large ({resid:.3e})")
    try:
        return AccretiveDissipativeMatrix.from_matrix(R, tol)
    except NotAccretiveDissipative as exc:
        raise SqrtNotInCone("computed square root is not accretive-dissipative") from exc
