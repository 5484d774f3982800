"""Golden examples: small fixed inputs with published reference values.

Each entry recomputes its example and compares with the reference values.
Inputs and outputs quoted to four decimals are stored exactly as quoted and
compared with an absolute tolerance of ``PRINT_TOL`` per real component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..linalg import DEFAULT_TOL, ToleranceConfig, complex_inverse
from ..means import MeanKind, ad_mean, riccati_residual, sqrt_product
from ..order import Order, ad_sqrt, compare_extended_order
from ..schur import compare_parallel_vs_geometric, evaluate_schur_mean_conjecture, parallel_sum

PRINT_TOL = 5e-4
EXACT_TOL = 1e-9
RATIONAL_TOL = 1e-12

def scalar_matrix(z: complex, n: int = 2) -> np.ndarray:
    return z * np.eye(n, dtype=np.complex128)


def _scalar(M) -> complex:
    return complex(np.asarray(M)[0, 0])


def _is_scalar_multiple(M, z, atol) -> bool:
    return bool(np.allclose(np.asarray(M), scalar_matrix(z, np.asarray(M).shape[0]), rtol=0, atol=atol))


def _printed_close(z, printed) -> bool:
    return abs(z.real - printed.real) <= PRINT_TOL and abs(z.imag - printed.imag) <= PRINT_TOL


def _sym(a, b, c):
    return np.array([[a, b], [b, c]], dtype=float)


# The three 2x2 pairs whose Schur-complement means are tested against the
# conjectured inequality; split index 1.
SCHUR_CONJECTURE_PAIRS = {
    "sum": (
        _sym(1.0243, 0.1853, 3.5998) + 1j * _sym(6.4574, -2.2991, 2.7951),
        _sym(2.0098, -0.7586, 0.9167) + 1j * _sym(4.5054, 2.1678, 2.0539),
    ),
    "geo": (
        _sym(1.1430, 0.2011, 2.2426) + 1j * _sym(13.1814, 9.6876, 7.8507),
        _sym(5.2840, 1.9396, 1.3959) + 1j * _sym(4.6687, 1.9980, 6.0727),
    ),
    "harm": (
        _sym(1.3893, 0.5787, 2.7774) + 1j * _sym(3.1981, -2.5932, 3.1951),
        _sym(6.3055, 1.7288, 1.2695) + 1j * _sym(0.9966, -0.3220, 1.6571),
    ),
}

# quoted (lhs, rhs); for "geo" only the real parts are quoted
SCHUR_CONJECTURE_PRINTED = {
    "sum": (2.9854 + 10.9817j, 6.1415 + 9.3255j),
    "geo": (2.2423, 3.9582),
    "harm": (2.7445 + 1.6561j, 3.7687 + 2.0181j),
}


@dataclass(frozen=True)
class PaperExample:
    key: str
    title: str
    run: Callable[[ToleranceConfig], tuple[bool, dict]]


def _c(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def sqrt_monotonicity(tol: ToleranceConfig = DEFAULT_TOL):
    T, S = scalar_matrix(32 + 24j), scalar_matrix(7 + 24j)
    rT, rS = ad_sqrt(T, tol).matrix, ad_sqrt(S, tol).matrix
    rel = compare_extended_order(T, S, tol)
    rel_roots = compare_extended_order(rT, rS, tol)
    ok = (_is_scalar_multiple(rT, 6 + 2j, EXACT_TOL) and _is_scalar_multiple(rS, 4 + 3j, EXACT_TOL)
          and rel.tag is Order.GREATER_EQ and rel_roots.tag is Order.INCOMPARABLE)
    return ok, {"sqrt_T": _c(_scalar(rT)), "sqrt_S": _c(_scalar(rS)),
                "T_vs_S": rel.to_dict(), "roots": rel_roots.to_dict()}


def commuting_normal_geometric_example(tol: ToleranceConfig = DEFAULT_TOL):
    T, S = scalar_matrix(3 + 4j), scalar_matrix(15 + 8j)
    G = ad_mean(MeanKind.GEOMETRIC, T, S, tol).matrix
    P = sqrt_product(T, S, tol)
    expected = 3 * np.sqrt(5) + 4j * np.sqrt(2)
    ok = (_is_scalar_multiple(G, expected, EXACT_TOL)
          and _is_scalar_multiple(ad_sqrt(T, tol).matrix, 2 + 1j, EXACT_TOL)
          and _is_scalar_multiple(ad_sqrt(S, tol).matrix, 4 + 1j, EXACT_TOL)
          and _is_scalar_multiple(P, 7 + 6j, EXACT_TOL)
          and np.linalg.norm(G - P) > 0.5)
    return ok, {"geometric": _c(_scalar(G)), "sqrt_product": _c(_scalar(P))}


def riccati_example(tol: ToleranceConfig = DEFAULT_TOL):
    T, S = scalar_matrix(1 + 1j), scalar_matrix(1 + 2j)
    G = ad_mean(MeanKind.GEOMETRIC, T, S, tol).matrix
    r = riccati_residual(T, S, tol)
    ok = _is_scalar_multiple(G, 1 + np.sqrt(2) * 1j, EXACT_TOL) and r > 1e-3
    return ok, {"geometric": _c(_scalar(G)), "riccati_residual": r}


def parallel_vs_geometric_example(tol: ToleranceConfig = DEFAULT_TOL):
    # The published imaginary part of 2(T:S) is 6/13; exact arithmetic gives 18/13.
    T, S = scalar_matrix(1 + 1j), scalar_matrix(1 + 2j)
    two_par = 2 * parallel_sum(T, S, tol)
    rel = compare_parallel_vs_geometric(T, S, tol)
    ok = (_is_scalar_multiple(two_par, (14 + 18j) / 13, RATIONAL_TOL)
          and rel.tag is Order.INCOMPARABLE)
    return ok, {"two_parallel_sum": _c(_scalar(two_par)), "printed_imag": 6 / 13,
                "vs_geometric": rel.to_dict()}


def _quoted(v):
    return _c(v) if isinstance(v, complex) else float(v)


def _schur_conjecture(name: str, kind: MeanKind, arithmetic: str):
    def run(tol: ToleranceConfig = DEFAULT_TOL):
        T, S = SCHUR_CONJECTURE_PAIRS[name]
        lhs, rhs, rel = evaluate_schur_mean_conjecture(T, S, kind, 1, tol, arithmetic=arithmetic)
        lhs, rhs = _scalar(lhs), _scalar(rhs)
        p_lhs, p_rhs = SCHUR_CONJECTURE_PRINTED[name]
        if kind is MeanKind.GEOMETRIC:
            close = abs(lhs.real - p_lhs) <= PRINT_TOL and abs(rhs.real - p_rhs) <= PRINT_TOL
        else:
            close = _printed_close(lhs, p_lhs) and _printed_close(rhs, p_rhs)
        ok = close and not rel.ge
        return ok, {"lhs": _c(lhs), "rhs": _c(rhs), "printed_lhs": _quoted(p_lhs),
                    "printed_rhs": _quoted(p_rhs), "relation": rel.to_dict()}
    return run


def inverse_unordered_example(tol: ToleranceConfig = DEFAULT_TOL):
    T, S = scalar_matrix(1 + 2j), scalar_matrix(1 + 1j)
    Ti, Si = complex_inverse(T, tol), complex_inverse(S, tol)
    rel = compare_extended_order(T, S, tol)
    rel_inv = compare_extended_order(Ti, Si, tol)
    ok = (rel.ge and _is_scalar_multiple(Ti, 0.2 - 0.4j, RATIONAL_TOL)
          and _is_scalar_multiple(Si, 0.5 - 0.5j, RATIONAL_TOL)
          and rel_inv.tag is Order.INCOMPARABLE)
    return ok, {"T_inv": _c(_scalar(Ti)), "S_inv": _c(_scalar(Si)), "inverses": rel_inv.to_dict()}


def inverse_ordered_example(tol: ToleranceConfig = DEFAULT_TOL):
    T, S = scalar_matrix(2 + 1j), scalar_matrix(1 / 3 + 1j)
    Ti, Si = complex_inverse(T, tol), complex_inverse(S, tol)
    rel = compare_extended_order(T, S, tol)
    rel_inv = compare_extended_order(Ti, Si, tol)
    ok = (rel.ge and _is_scalar_multiple(Ti, 0.4 - 0.2j, RATIONAL_TOL)
          and _is_scalar_multiple(Si, 0.3 - 0.9j, RATIONAL_TOL)
          and rel_inv.ge)
    return ok, {"T_inv": _c(_scalar(Ti)), "S_inv": _c(_scalar(Si)), "inverses": rel_inv.to_dict()}


PAPER_EXAMPLES: tuple[PaperExample, ...] = (
    PaperExample("sqrt-monotonicity", "square roots break Loewner monotonicity", sqrt_monotonicity),
    PaperExample("commuting-normal-geo", "T♯S differs from T^{1/2}S^{1/2} for commuting normal T, S", commuting_normal_geometric_example),
    PaperExample("riccati", "T♯S does not solve the Riccati equation", riccati_example),
    PaperExample("parallel-vs-geo", "2(T:S) and T♯S are unordered", parallel_vs_geometric_example),
    PaperExample("schur-sum", "Schur complement of a sum", _schur_conjecture("sum", MeanKind.ARITHMETIC, "sum")),
    PaperExample("schur-geo", "Schur complement of a geometric mean",
                 _schur_conjecture("geo", MeanKind.GEOMETRIC, "mean")),
    PaperExample("schur-harm", "Schur complement of a harmonic mean",
                 _schur_conjecture("harm", MeanKind.HARMONIC, "mean")),
    PaperExample("inverse-unordered", "inverses of an ordered pair are unordered", inverse_unordered_example),
    PaperExample("inverse-ordered", "inverses of an ordered pair may be ordered", inverse_ordered_example),
)
