"""
Dense complex and Hermitian matrix primitives.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.  A
"Hermitian matrix" is any such array equal to its conjugate transpose; every
function here that returns one symmetrizes its output so that ``H == H.conj().T``
holds bit-for-bit.

Definiteness is decided spectrally, with thresholds taken relative to the
spectral norm of the operand (see :class:`ToleranceConfig`).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

import numpy as np

from .exceptions import (
    ConvergenceFailure,
    DimensionMismatch,
    NotHermitian,
    NotPD,
    NotPSD,
    Singular,
)

TOL_ENV_VAR = "AD_MEANS_TOL"


@dataclass(frozen=True)
class ToleranceConfig:
    """Relative thresholds used by every numerical predicate.

    Parameters
    ----------
    psd_tol : float
        ``H`` is positive semidefinite when ``min(eig) >= -psd_tol * scale``.
    pd_tol : float
        ``H`` is positive definite when ``min(eig) > pd_tol * scale``.  Also
        used as the relative singular-value cutoff for nonsingularity.
    eq_tol : float
        Two matrices are equal when their difference is below
        ``eq_tol * max(norms, 1)``.
    """

    psd_tol: float = 1e-10
    pd_tol: float = 1e-10
    eq_tol: float = 1e-9

    def __post_init__(self):
        if not (0 <= self.psd_tol <= self.pd_tol) or self.pd_tol <= 0:
            raise ValueError(
                f"need 0 <= psd_tol <= pd_tol and pd_tol > 0, got {self.psd_tol}, {self.pd_tol}"
            )
        if self.eq_tol < 0:
            raise ValueError(f"eq_tol must be nonnegative, got {self.eq_tol}")

    def with_eq_tol(self, eq_tol: float) -> "ToleranceConfig":
        return replace(self, eq_tol=float(eq_tol))

    @classmethod
    def from_env(cls, eq_tol: float | None = None) -> "ToleranceConfig":
        """Defaults, with ``AD_MEANS_TOL`` overriding ``eq_tol``; an explicit
        ``eq_tol`` argument wins over the environment."""
        tol = cls()
        env = os.environ.get(TOL_ENV_VAR)
        if env:
            tol = tol.with_eq_tol(float(env))
        if eq_tol is not None:
            tol = tol.with_eq_tol(eq_tol)
        return tol


DEFAULT_TOL = ToleranceConfig()


def as_square(M) -> np.ndarray:
    """Return ``M`` as a finite square complex128 array."""
    M = np.array(M, dtype=np.complex128)
    if M.ndim == 0:
        M = M.reshape(1, 1)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        raise DimensionMismatch("empty matrix")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def check_same_shape(*mats: np.ndarray) -> None:
    shapes = {m.shape for m in mats}
    if len(shapes) != 1:
        raise DimensionMismatch(f"shape mismatch: {sorted(shapes)}")


def conjugate_transpose(M) -> np.ndarray:
    return np.asarray(M).conj().T


def spectral_norm(M) -> float:
    M = np.asarray(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def symmetrize(M) -> np.ndarray:
    """(M + M*)/2; the result is exactly Hermitian in floating point."""
    M = np.asarray(M, dtype=np.complex128)
    return (M + M.conj().T) / 2


def hermitian(M, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Validate that ``M`` is Hermitian up to ``eq_tol`` and symmetrize it."""
    M = as_square(M)
    off = np.linalg.norm(M - M.conj().T, 2)
    if off > tol.eq_tol * max(spectral_norm(M), 1.0):
        raise NotHermitian(f"matrix is not Hermitian (asymmetry {off:.3e})")
    return symmetrize(M)


def hermitian_eigendecomposition(H) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix.

    Only the lower triangle is read, as in :func:`numpy.linalg.eigh`.
    """
    H = np.asarray(H, dtype=np.complex128)
    try:
        w, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return w, V


def _spectrum_scale(w: np.ndarray) -> float:
    return float(np.max(np.abs(w))) if w.size else 0.0


def is_positive_definite(H, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    w, _ = hermitian_eigendecomposition(H)
    scale = _spectrum_scale(w)
    if scale == 0.0:
        return False
    return bool(w[0] > tol.pd_tol * scale)


def is_positive_semidefinite(H, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    w, _ = hermitian_eigendecomposition(H)
    scale = _spectrum_scale(w)
    if scale == 0.0:
        return True
    return bool(w[0] >= -tol.psd_tol * scale)


def _from_spectrum(V: np.ndarray, w: np.ndarray) -> np.ndarray:
    return symmetrize((V * w) @ V.conj().T)


def hermitian_sqrt(H, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Positive semidefinite square root ``V diag(sqrt(max(w, 0))) V*``."""
    w, V = hermitian_eigendecomposition(H)
    scale = _spectrum_scale(w)
    if scale > 0 and w[0] < -tol.psd_tol * scale:
        raise NotPSD(f"matrix is not PSD (min eigenvalue {w[0]:.3e})")
    return _from_spectrum(V, np.sqrt(np.clip(w, 0.0, None)))


def hermitian_inverse(H, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    w, V = hermitian_eigendecomposition(H)
    scale = _spectrum_scale(w)
    if scale == 0.0 or w[0] <= tol.pd_tol * scale:
        raise NotPD("matrix is not positive definite")
    return _from_spectrum(V, 1.0 / w)


def hermitian_inv_sqrt(H, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    w, V = hermitian_eigendecomposition(H)
    scale = _spectrum_scale(w)
    if scale == 0.0 or w[0] <= tol.pd_tol * scale:
        raise NotPD("matrix is not positive definite")
    return _from_spectrum(V, 1.0 / np.sqrt(w))


def is_nonsingular(M, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    s = np.linalg.svd(np.asarray(M), compute_uv=False)
    return bool(s.size and s[0] > 0 and s[-1] > tol.pd_tol * s[0])


def complex_inverse(M, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    M = np.asarray(M, dtype=np.complex128)
    if not is_nonsingular(M, tol):
        raise Singular("matrix is numerically singular")
    return np.linalg.inv(M)


def solve(M, B, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """``M^{-1} B`` after a nonsingularity check on ``M``."""
    M = np.asarray(M, dtype=np.complex128)
    if not is_nonsingular(M, tol):
        raise Singular("matrix is numerically singular")
    return np.linalg.solve(M, B)
