"""
Property suites.

Each suite draws random instances trial by trial, runs one of the library's
``check_*`` operations and records whether the expected relation held.  Trial
``i`` of a run seeded with ``s`` uses ``default_rng([s, i])`` only, so
results do not depend on execution order and any witness can be replayed
with :func:`replay`.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..exceptions import UnknownSuite
from ..linalg import DEFAULT_TOL, ToleranceConfig, spectral_norm
from ..means import (
    MeanKind,
    check_amgmhm,
    check_congruence,
    check_order_equivalences,
    check_superadditivity,
    congruence_residual,
)
from ..order import AccretiveDissipativeMatrix
from ..schur import (
    check_fm_inequality,
    check_lower_bound_chain,
    check_mixed_schur,
    check_parallel_vs_harmonic,
    check_pd_schur_mean,
    evaluate_schur_mean_conjecture,
    identity_residuals,
    parallel_sum,
    parallel_sum_schur_equality,
    schur_complement,
    schur_sum_decomposition,
    smw_residual,
)
from . import oracle
from .generate import (
    InstanceSpec,
    random_ad,
    random_complex,
    random_nonsingular,
    random_pd,
    trial_rng,
)
from .io import to_matrix_dict
from .registry import PAPER_EXAMPLES
from .report import PropertyReport, spec_dict

LEMMA_TOL = 1e-10
KINDS = (MeanKind.ARITHMETIC, MeanKind.GEOMETRIC, MeanKind.HARMONIC)


@dataclass
class Trial:
    ok: bool
    inputs: dict
    observed: dict
    residual: float | None = None
    tags: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[np.random.Generator, int, ToleranceConfig, float], Trial]
    description: str
    min_dim: int = 1
    inverted: bool = False
    oracle: Callable[[dict], bool] | None = None


def _m(T) -> np.ndarray:
    return T.matrix if isinstance(T, AccretiveDissipativeMatrix) else np.asarray(T)


def _split(rng, n) -> int:
    return int(rng.integers(1, n))


def _amgmhm(rng, n, tol, cond):
    T, S = random_ad(rng, n, cond), random_ad(rng, n, cond)
    r1, r2 = check_amgmhm(T, S, tol)
    return Trial(r1.ge and r2.ge, {"T": _m(T), "S": _m(S)},
                 {"am_vs_gm": r1.to_dict(), "gm_vs_hm": r2.to_dict()},
                 tags=[r1.tag.value, r2.tag.value])


def _superadd(kind):
    def run(rng, n, tol, cond):
        m = int(rng.integers(1, 5))
        pairs = [(random_ad(rng, n, cond), random_ad(rng, n, cond)) for _ in range(m)]
        rel = check_superadditivity(kind, pairs, tol)
        inputs = {"m": m, "kind": kind.value}
        for i, (T, S) in enumerate(pairs):
            inputs[f"T{i}"], inputs[f"S{i}"] = _m(T), _m(S)
        return Trial(rel.ge, inputs, {"relation": rel.to_dict()}, tags=[rel.tag.value])
    return run


def _superadd_oracle(inputs):
    m = inputs["m"]
    return oracle.check_superadditivity(
        inputs["kind"], [inputs[f"T{i}"] for i in range(m)], [inputs[f"S{i}"] for i in range(m)])


def _congruence(rng, n, tol, cond):
    T, S = random_ad(rng, n, cond), random_ad(rng, n, cond)
    Q = random_complex(rng, n)
    ok = check_congruence(T, S, Q, tol)
    scale = spectral_norm(Q) ** 2 * max(spectral_norm(_m(T)), spectral_norm(_m(S)), 1.0)
    res = congruence_residual(T, S, Q, tol) / scale
    return Trial(ok, {"T": _m(T), "S": _m(S), "Q": Q}, {"relative_residual": res}, residual=res)


def _order_equiv(rng, n, tol, cond):
    T = random_ad(rng, n, cond)
    mode = int(rng.integers(0, 3))
    if mode == 0:
        S = random_ad(rng, n, cond)
    elif mode == 1:
        S = AccretiveDissipativeMatrix.from_matrix(_m(T) + _m(random_ad(rng, n, cond)), tol)
    else:
        S = AccretiveDissipativeMatrix.from_matrix(_m(T) * float(rng.uniform(0.2, 0.9)), tol)
    triple = check_order_equivalences(T, S, tol)
    return Trial(len(set(triple)) == 1, {"T": _m(T), "S": _m(S)},
                 {"predicates": list(triple)}, tags=[str(triple[0])])


def _thm34(rng, n, tol, cond):
    T, S = random_ad(rng, n, cond), random_ad(rng, n, cond)
    rel = check_parallel_vs_harmonic(T, S, tol)
    return Trial(rel.ge, {"T": _m(T), "S": _m(S)}, {"relation": rel.to_dict()}, tags=[rel.tag.value])


def _lemma31(rng, n, tol, cond):
    A, B = random_complex(rng, n), random_complex(rng, n)
    worst = 0.0
    per_split = {}
    for k in range(1, n):
        lhs, rhs, terms = schur_sum_decomposition(A, B, k, tol)
        scale = max(spectral_norm(A), spectral_norm(B), spectral_norm(lhs),
                    spectral_norm(schur_complement(A, k, tol)),
                    spectral_norm(schur_complement(B, k, tol)),
                    spectral_norm(terms.correction), 1.0)
        res = float(np.linalg.norm(lhs - rhs)) / scale
        per_split[k] = res
        worst = max(worst, res)
    return Trial(worst <= LEMMA_TOL, {"A": A, "B": B},
                 {"relative_residual_by_split": per_split}, residual=worst)


def _inverse_scale(T) -> float:
    return max(spectral_norm(np.linalg.inv(T.real)), spectral_norm(np.linalg.inv(T.imag)), 1.0)


def _identities(rng, n, tol, cond):
    T = random_ad(rng, n, cond)
    r1, r2 = identity_residuals(T, tol)
    scale = _inverse_scale(T)
    res = max(r1, r2) / scale
    return Trial(res <= tol.eq_tol, {"T": _m(T)},
                 {"relative_residuals": [r1 / scale, r2 / scale]}, residual=res)


def _smw(rng, n, tol, cond):
    T = random_ad(rng, n, cond)
    res = smw_residual(T, tol) / _inverse_scale(T)
    return Trial(res <= tol.eq_tol, {"T": _m(T)}, {"relative_residual": res}, residual=res)


def prop45_scale(T, S, k, tol) -> float:
    par = parallel_sum(T, S, tol)
    return max(spectral_norm(par),
               spectral_norm(schur_complement(par, k, tol)),
               spectral_norm(schur_complement(T, k, tol)),
               spectral_norm(schur_complement(S, k, tol)), 1.0)


def _prop45(rng, n, tol, cond):
    general = bool(rng.integers(0, 2))
    if general:
        T, S = random_nonsingular(rng, n, cond), random_nonsingular(rng, n, cond)
    else:
        T, S = _m(random_ad(rng, n, cond)), _m(random_ad(rng, n, cond))
    k = _split(rng, n)
    res = parallel_sum_schur_equality(T, S, k, tol, general=general) / prop45_scale(T, S, k, tol)
    return Trial(res <= tol.eq_tol, {"T": T, "S": S, "k": k, "general": general},
                 {"relative_residual": res}, residual=res, tags=["general" if general else "ad"])


def _pd_schur_mean(rng, n, tol, cond):
    A, C = random_pd(rng, n, cond), random_pd(rng, n, cond)
    k = _split(rng, n)
    rels = {kind.value: check_pd_schur_mean(A, C, kind, k, tol) for kind in KINDS}
    return Trial(all(r.ge for r in rels.values()), {"A": A, "C": C, "k": k},
                 {kind: r.to_dict() for kind, r in rels.items()},
                 tags=[r.tag.value for r in rels.values()])


def _pd_pair_check(check):
    def run(rng, n, tol, cond):
        A, B = random_pd(rng, n, cond), random_pd(rng, n, cond)
        k = _split(rng, n)
        rel = check(A, B, k, tol)
        return Trial(rel.ge, {"A": A, "B": B, "k": k}, {"relation": rel.to_dict()}, tags=[rel.tag.value])
    return run


def _lower_bound_chain(rng, n, tol, cond):
    T, S = random_ad(rng, n, cond), random_ad(rng, n, cond)
    k = _split(rng, n)
    out, ok, tags = {}, True, []
    for kind in KINDS:
        r1, r2 = check_lower_bound_chain(T, S, kind, k, tol)
        ok = ok and r1.ge and r2.ge
        out[kind.value] = [r1.to_dict(), r2.to_dict()]
        tags += [r1.tag.value, r2.tag.value]
    return Trial(ok, {"T": _m(T), "S": _m(S), "k": k}, out, tags=tags)


def _schur_survey(rng, n, tol, cond):
    T, S = random_ad(rng, n, cond), random_ad(rng, n, cond)
    kind = KINDS[int(rng.integers(0, 3))]
    k = _split(rng, n)
    lhs, rhs, rel = evaluate_schur_mean_conjecture(T, S, kind, k, tol)
    # ok = the conjectured inequality held on this instance
    return Trial(rel.ge, {"T": _m(T), "S": _m(S), "kind": kind.value, "k": k},
                 {"relation": rel.to_dict()}, tags=[f"{kind.value}:{rel.tag.value}"])


SUITES: dict[str, Suite] = {s.name: s for s in (
    Suite("amgmhm", _amgmhm, "T∇S >= T♯S >= T!S",
          oracle=lambda d: oracle.check_amgmhm(d["T"], d["S"])),
    Suite("superadd-geo", _superadd(MeanKind.GEOMETRIC), "(ΣT)♯(ΣS) >= Σ T♯S", oracle=_superadd_oracle),
    Suite("superadd-harm", _superadd(MeanKind.HARMONIC), "(ΣT)!(ΣS) >= Σ T!S", oracle=_superadd_oracle),
    Suite("congruence", _congruence, "(Q*TQ)♯(Q*SQ) = Q*(T♯S)Q"),
    Suite("order-equiv", _order_equiv, "T♯S <= S iff T <= S iff T <= T♯S"),
    Suite("thm34", _thm34, "2(T:S) >= T!S",
          oracle=lambda d: oracle.check_parallel_vs_harmonic(d["T"], d["S"])),
    Suite("lemma31", _lemma31, "Schur complement of a sum identity", min_dim=2),
    Suite("identities", _identities, "inverse identities for A^{-1} and B^{-1}"),
    Suite("smw", _smw, "Sherman-Morrison-Woodbury form of (A + BA^{-1}B)^{-1}"),
    Suite("prop45", _prop45, "(T:S)/(T:S)22 = (T/T22):(S/S22)", min_dim=2),
    Suite("pd-schur-mean", _pd_schur_mean, "(AσC)/(AσC)22 >= (A/A22)σ(C/C22)", min_dim=2),
    Suite("mixed-schur", _pd_pair_check(check_mixed_schur), "(A+iB)/(A22+iB22) >= A/A22 + iB/B22",
          min_dim=2),
    Suite("fm", _pd_pair_check(check_fm_inequality), "(A+B)/(A22+B22) >= A/A22 + B/B22", min_dim=2),
    Suite("lower-bound-chain", _lower_bound_chain, "lower bounds for (TσS)/(TσS)22", min_dim=2),
    Suite("question42-survey", _schur_survey, "search for (TσS)/(TσS)22 >= (T/T22)σ(S/S22) failures",
          min_dim=2, inverted=True,
          oracle=lambda d: oracle.schur_conjecture_holds(d["T"], d["S"], d["kind"], d["k"])),
)}

SUITE_NAMES = ("paper-examples",) + tuple(SUITES)


def _serialize(value):
    if isinstance(value, np.ndarray):
        return to_matrix_dict(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    return value


def _trial_dim(suite: Suite, spec: InstanceSpec, index: int) -> int:
    return max(spec.dim_for(index), suite.min_dim)


def replay(name: str, spec: InstanceSpec, index: int, tol: ToleranceConfig = DEFAULT_TOL) -> Trial:
    """Re-run a single trial of a random suite."""
    suite = _get(name)
    rng = trial_rng(spec.seed, index)
    return suite.run(rng, _trial_dim(suite, spec, index), tol, spec.conditioning)


def _get(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}") from None


def _run_paper_examples(tol: ToleranceConfig) -> PropertyReport:
    start = time.perf_counter()
    report = PropertyReport("paper-examples", trials=len(PAPER_EXAMPLES))
    for index, example in enumerate(PAPER_EXAMPLES):
        ok, observed = example.run(tol)
        if not ok:
            report.violations += 1
            report.witnesses.append({"seed": 0, "index": index, "dim": 2, "example": example.key,
                                     "inputs": {}, "observed": observed})
    report.stats = {"examples": [e.key for e in PAPER_EXAMPLES]}
    report.wall_time = time.perf_counter() - start
    return report


def run_suite(name: str, spec: InstanceSpec | None = None, tol: ToleranceConfig = DEFAULT_TOL,
              use_oracle: bool = False, workers: int = 1) -> PropertyReport:
    """Run a named suite and aggregate a :class:`PropertyReport`.

    For ``paper-examples`` the fixed example registry is evaluated and
    ``spec`` is ignored.  With ``use_oracle`` every violation witness is
    re-evaluated at extended precision (where the suite supports it).
    """
    if name == "paper-examples":
        return _run_paper_examples(tol)
    suite = _get(name)
    spec = spec or InstanceSpec()
    start = time.perf_counter()

    def one(index):
        return replay(name, spec, index, tol)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            trials = list(pool.map(one, range(spec.count)))
    else:
        trials = [one(i) for i in range(spec.count)]

    report = PropertyReport(suite.name, trials=spec.count, inverted=suite.inverted, spec=spec_dict(spec))
    tags: Counter = Counter()
    residuals = []
    for index, trial in enumerate(trials):
        tags.update(trial.tags)
        if trial.residual is not None:
            residuals.append(trial.residual)
        if trial.ok:
            continue
        report.violations += 1
        witness = {
            "seed": spec.seed,
            "index": index,
            "dim": _trial_dim(suite, spec, index),
            "inputs": {k: _serialize(v) for k, v in trial.inputs.items()},
            "observed": trial.observed,
        }
        if use_oracle:
            if suite.oracle is None:
                witness["oracle"] = "unsupported"
            else:
                witness["oracle"] = "roundoff" if suite.oracle(trial.inputs) else "genuine"
        report.witnesses.append(witness)
    if tags:
        report.stats["outcomes"] = dict(sorted(tags.items()))
    if residuals:
        report.stats["max_relative_residual"] = max(residuals)
    report.wall_time = time.perf_counter() - start
    return report
