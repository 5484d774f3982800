import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from admeans.exceptions import UnknownSuite
from admeans.harness.generate import InstanceSpec, generate_random_ad, random_nonsingular
from admeans.harness.io import (
    MatrixFileError,
    dumps_csv,
    dumps_json,
    loads_csv,
    loads_json,
    read_matrix,
    write_matrix,
)
from admeans.harness.registry import PAPER_EXAMPLES
from admeans.harness.report import PropertyReport
from admeans.harness.suites import SUITE_NAMES, SUITES, replay, run_suite
from admeans.order import is_accretive_dissipative

from conftest import complex_from

SPEC_SUITES = {
    "paper-examples", "amgmhm", "superadd-geo", "superadd-harm", "congruence", "order-equiv",
    "thm34", "lemma31", "identities", "smw", "prop45", "pd-schur-mean", "mixed-schur", "fm",
    "lower-bound-chain", "question42-survey",
}


def test_instance_spec_validation():
    with pytest.raises(ValueError):
        InstanceSpec(dim=0)
    with pytest.raises(ValueError):
        InstanceSpec(conditioning=0.5)
    with pytest.raises(ValueError):
        InstanceSpec(seed=-1)
    with pytest.raises(ValueError):
        InstanceSpec(dim=3, min_dim=4)
    spec = InstanceSpec(dim=4, min_dim=2)
    assert [spec.dim_for(i) for i in range(5)] == [2, 3, 4, 2, 3]


def test_generate_dim_one_is_first_quadrant_scalar():
    for T in generate_random_ad(InstanceSpec(dim=1, seed=3, count=10)):
        z = T.matrix[0, 0]
        assert z.real > 0 and z.imag > 0


def test_generate_deterministic():
    spec = InstanceSpec(dim=3, seed=11, count=5)
    a = [T.matrix for T in generate_random_ad(spec)]
    b = [T.matrix for T in generate_random_ad(spec)]
    for x, y in zip(a, b):
        assert np.array_equal(x, y)


def test_generate_all_in_cone_with_conditioning_cap():
    spec = InstanceSpec(dim=6, seed=1, count=100, conditioning=50.0)
    mats = list(generate_random_ad(spec))
    assert len(mats) == 100
    for T in mats:
        assert is_accretive_dissipative(T.matrix)
        assert np.linalg.cond(T.real) <= 51 + 1e-9
        assert np.linalg.cond(T.imag) <= 51 + 1e-9


def test_random_nonsingular_condition():
    M = random_nonsingular(np.random.default_rng(0), 5, 20.0)
    assert np.linalg.cond(M) <= 20.0 + 1e-9


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6))
def test_matrix_json_csv_round_trip(seed, n):
    M = complex_from(seed, n)
    assert np.array_equal(loads_json(dumps_json(M)), M)
    assert np.array_equal(loads_csv(dumps_csv(M)), M)


def test_matrix_file_schema():
    obj = json.loads(dumps_json(np.array([[1 + 2j]])))
    assert obj == {"rows": 1, "cols": 1, "data": [[1.0, 2.0]]}


@pytest.mark.parametrize("text", [
    '{"rows": 2, "cols": 2, "data": [[1, 0]]}',
    '{"rows": 1, "cols": 2, "data": [[1, 0], [2, 0]]}',
    '{"rows": 1, "cols": 1, "data": [["nan", 0]]}',
    '{"rows": 1}',
    "not json",
])
def test_matrix_json_rejects(text):
    with pytest.raises(MatrixFileError):
        loads_json(text)


def test_matrix_csv_rejects():
    with pytest.raises(MatrixFileError):
        loads_csv("1,0\n2,0\n")
    with pytest.raises(MatrixFileError):
        loads_csv("1,0,3\n")


def test_read_write_by_extension(tmp_path):
    M = complex_from(5, 3)
    for name in ("m.json", "m.csv"):
        write_matrix(tmp_path / name, M)
        assert np.array_equal(read_matrix(tmp_path / name), M)


def test_registry_covers_every_worked_example():
    keys = [e.key for e in PAPER_EXAMPLES]
    assert len(keys) == 9 == len(set(keys))
    assert {"schur-sum", "schur-geo", "schur-harm"} <= set(keys)
    assert {"inverse-unordered", "inverse-ordered"} <= set(keys)


def test_suite_names_match_interface():
    assert set(SUITE_NAMES) == SPEC_SUITES


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope", InstanceSpec(count=1))


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_runs(name):
    report = run_suite(name, InstanceSpec(dim=3, seed=5, count=20))
    assert report.trials == 20
    assert report.passed, report.witnesses[:1]


def test_thm34_suite():
    report = run_suite("thm34", InstanceSpec(dim=4, count=500))
    assert report.violations == 0


def test_question42_survey_finds_refutations():
    report = run_suite("question42-survey", InstanceSpec(dim=2, count=1000, seed=1))
    assert report.inverted
    assert report.violations > 0
    assert report.passed
    w = report.witnesses[0]
    assert not replay("question42-survey", InstanceSpec(dim=2, count=1000, seed=1), w["index"]).ok


def test_witness_replay_is_bit_identical():
    spec = InstanceSpec(dim=2, count=50, seed=9)
    report = run_suite("question42-survey", spec)
    for w in report.witnesses[:5]:
        trial = replay("question42-survey", spec, w["index"])
        assert trial.observed == w["observed"]
        np.testing.assert_array_equal(trial.inputs["T"], loads_json(json.dumps(w["inputs"]["T"])))


def test_workers_do_not_change_results():
    spec = InstanceSpec(dim=3, count=40, seed=2)
    a = run_suite("question42-survey", spec)
    b = run_suite("question42-survey", spec, workers=4)
    assert a.witnesses == b.witnesses
    assert a.stats == b.stats


def test_oracle_classifies_refutations_as_genuine():
    report = run_suite("question42-survey", InstanceSpec(dim=2, count=30, seed=4), use_oracle=True)
    assert report.witnesses
    assert {w["oracle"] for w in report.witnesses} == {"genuine"}


def test_oracle_unsupported_marker():
    from admeans.linalg import ToleranceConfig
    # an absurd equality tolerance of zero plus a zero psd band makes the
    # congruence check fail on rounding alone; it has no oracle
    tol = ToleranceConfig(psd_tol=0.0, pd_tol=1e-10, eq_tol=0.0)
    report = run_suite("congruence", InstanceSpec(dim=3, count=5), tol, use_oracle=True)
    assert report.violations > 0
    assert {w["oracle"] for w in report.witnesses} == {"unsupported"}


def test_report_round_trip():
    report = run_suite("question42-survey", InstanceSpec(dim=2, count=20, seed=3))
    text = report.to_json()
    again = PropertyReport.from_json(text)
    assert again.to_dict() == report.to_dict()
    assert json.loads(text)["polarity"] == "inverted"


def test_report_invariants():
    with pytest.raises(ValueError):
        PropertyReport("x", trials=1, violations=2)
    with pytest.raises(ValueError):
        PropertyReport.from_dict({"schema": "other"})
    assert not PropertyReport("x", trials=3, violations=0, inverted=True).passed
