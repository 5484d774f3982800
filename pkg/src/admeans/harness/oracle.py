"""Extended-precision re-evaluation with mpmath.

Used to decide whether a reported violation is genuine or an artifact of
double-precision rounding.  Everything here is independent of the float64
code path: Hermitian square roots and inverses go through ``mpmath.eighe``.
"""

from __future__ import annotations

import mpmath
import numpy as np

DPS = 40
# relative threshold at DPS digits below which a difference counts as zero
ZERO_TOL = mpmath.mpf(10) ** (-(DPS - 10))


def to_mp(M) -> mpmath.matrix:
    M = np.asarray(M, dtype=np.complex128)
    out = mpmath.matrix(M.shape[0], M.shape[1])
    for i in range(M.shape[0]):
        for j in range(M.shape[1]):
            z = M[i, j]
            out[i, j] = mpmath.mpc(float(z.real), float(z.imag))
    return out


def to_numpy(M: mpmath.matrix) -> np.ndarray:
    return np.array([[complex(M[i, j]) for j in range(M.cols)] for i in range(M.rows)])


def ctrans(M):
    return M.transpose_conj()


def herm(M):
    return (M + ctrans(M)) / 2


def parts(M):
    Ms = ctrans(M)
    return (M + Ms) / 2, (M - Ms) / mpmath.mpc(0, 2)


def eigh(H):
    w, Q = mpmath.eighe(herm(H))
    return [mpmath.re(x) for x in w], Q


def spectral_fn(H, fn):
    w, Q = eigh(H)
    n = H.rows
    D = mpmath.diag([fn(x) for x in w])
    return herm(Q * D * ctrans(Q)) if n else H


def hsqrt(H):
    return spectral_fn(H, lambda x: mpmath.sqrt(max(x, 0)))


def hinv(H):
    return spectral_fn(H, lambda x: 1 / x)


def hinvsqrt(H):
    return spectral_fn(H, lambda x: 1 / mpmath.sqrt(x))


def hermitian_mean(kind: str, A, C):
    if kind == "arith":
        return (A + C) / 2
    if kind == "geo":
        Ah, Aih = hsqrt(A), hinvsqrt(A)
        return herm(Ah * hsqrt(herm(Aih * C * Aih)) * Ah)
    if kind == "harm":
        return 2 * hinv(herm(hinv(A) + hinv(C)))
    raise ValueError(kind)


def ad_mean(kind: str, T, S):
    A, B = parts(T)
    C, D = parts(S)
    return hermitian_mean(kind, A, C) + mpmath.mpc(0, 1) * hermitian_mean(kind, B, D)


def parallel_sum(T, S):
    return mpmath.inverse(mpmath.inverse(T) + mpmath.inverse(S))


def schur_complement(M, k: int):
    n = M.rows
    M11 = M[0:k, 0:k]
    M12 = M[0:k, k:n]
    M21 = M[k:n, 0:k]
    M22 = M[k:n, k:n]
    return M11 - M12 * mpmath.inverse(M22) * M21


def _norm(M):
    return mpmath.mnorm(M, "f")


def _part_relation(X, Y) -> str:
    D = herm(X - Y)
    scale = max(_norm(X), _norm(Y), mpmath.mpf(1))
    w, _ = eigh(D)
    lo, hi = min(w), max(w)
    thr = ZERO_TOL * scale
    if abs(lo) <= thr and abs(hi) <= thr:
        return "="
    if lo >= -thr:
        return ">="
    if hi <= thr:
        return "<="
    return "incomparable"


def relation(T, S) -> tuple[str, str]:
    """Per-part Loewner relations of ``T`` against ``S`` at high precision."""
    pt, ps = parts(T), parts(S)
    return _part_relation(pt[0], ps[0]), _part_relation(pt[1], ps[1])


def is_ge(rel: tuple[str, str]) -> bool:
    return all(r in (">=", "=") for r in rel)


def check_amgmhm(T, S) -> bool:
    with mpmath.workdps(DPS):
        T, S = to_mp(T), to_mp(S)
        am, gm, hm = (ad_mean(k, T, S) for k in ("arith", "geo", "harm"))
        return is_ge(relation(am, gm)) and is_ge(relation(gm, hm))


def check_parallel_vs_harmonic(T, S) -> bool:
    with mpmath.workdps(DPS):
        T, S = to_mp(T), to_mp(S)
        return is_ge(relation(2 * parallel_sum(T, S), ad_mean("harm", T, S)))


def check_superadditivity(kind: str, Ts, Ss) -> bool:
    with mpmath.workdps(DPS):
        Ts, Ss = [to_mp(T) for T in Ts], [to_mp(S) for S in Ss]
        sT, sS = Ts[0], Ss[0]
        rhs = ad_mean(kind, Ts[0], Ss[0])
        for T, S in zip(Ts[1:], Ss[1:]):
            sT, sS = sT + T, sS + S
            rhs = rhs + ad_mean(kind, T, S)
        return is_ge(relation(ad_mean(kind, sT, sS), rhs))


def schur_conjecture_holds(T, S, kind: str, k: int) -> bool:
    with mpmath.workdps(DPS):
        T, S = to_mp(T), to_mp(S)
        lhs = schur_complement(ad_mean(kind, T, S), k)
        rhs = ad_mean(kind, schur_complement(T, k), schur_complement(S, k))
        return is_ge(relation(lhs, rhs))
