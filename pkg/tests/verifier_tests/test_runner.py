"""
Tests for the suite runner: determinism, filtering, failure witnesses and replay
"""

import pytest

from group import make_group
from sets import GSet
from verifier.instances import derive_seed, set_instance
from verifier.registry import get_check
from verifier.report_log import FAIL, PASS, REPORTED, CheckReport, read_reports
from verifier.runner import SuiteResult, replay, run_check, run_suite


def _progression_instance(n_param, size=3):
    group = make_group([16])
    return set_instance(group, {'n': n_param}, A=GSet.from_elements(group, range(size)))


def _key(report):
    return report.check, report.seed, report.lhs, report.rhs, report.verdict


def test_derive_seed_is_stable():
    assert derive_seed(1, 'parseval', 0) == derive_seed(1, 'parseval', 0)
    assert derive_seed(1, 'parseval', 0) != derive_seed(1, 'parseval', 1)
    assert derive_seed(1, 'parseval', 0) != derive_seed(2, 'parseval', 0)
    assert 0 <= derive_seed(1, 'parseval', 0) < 2 ** 63


def test_same_seed_same_reports():
    first = run_suite('ap_energy', trials=3, seed=7, threads=1)
    second = run_suite('ap_energy', trials=3, seed=7, threads=3)
    assert [_key(r) for r in first.reports] == [_key(r) for r in second.reports]
    assert all(r.verdict == PASS for r in first.reports)


def test_zero_trials():
    result = run_suite('*', trials=0)
    assert result.reports == []
    assert result.summary == {}
    assert result.exit_code == 0


def test_negative_trials():
    with pytest.raises(ValueError):
        run_suite('*', trials=-1)


def test_filter_runs_only_matching_checks():
    result = run_suite('heilbronn_e3*', trials=1, threads=2)
    assert sorted(r.check for r in result.reports) == ['heilbronn_e3', 'heilbronn_e3_growth', 'heilbronn_e3_ratio']
    verdicts = {r.check: r.verdict for r in result.reports}
    assert verdicts == {'heilbronn_e3': PASS, 'heilbronn_e3_growth': PASS, 'heilbronn_e3_ratio': REPORTED}
    assert result.exit_code == 0


def test_report_file(tmp_path):
    path = tmp_path / 'reports.jsonl'
    result = run_suite('ap_energy', trials=2, seed=3, out=str(path))
    stored = read_reports(str(path))
    assert [_key(r) for r in stored] == [_key(r) for r in result.reports]


def test_passing_instance_has_no_witness():
    report = run_check(get_check('ap_energy'), 11, _progression_instance(3))
    assert report.verdict == PASS
    assert (report.lhs, report.rhs) == (19, 19)
    assert report.witness is None


def test_failure_witness_replays():
    report = run_check(get_check('ap_energy'), 11, _progression_instance(4))
    assert report.verdict == FAIL
    assert report.witness['check'] == 'ap_energy'
    assert report.witness['seed'] == 11
    again = replay(report.witness)
    assert _key(again) == _key(report)


def test_exception_becomes_failure():
    instance = _progression_instance(3)
    del instance['params']['n']
    report = run_check(get_check('ap_energy'), 5, instance)
    assert report.verdict == FAIL
    assert report.witness['error'].startswith('KeyError')


def test_single_point_ruzsa_triangle():
    group = make_group([8])
    zero = GSet.from_elements(group, [0])
    report = run_check(get_check('ruzsa_triangle'), 0, set_instance(group, A=zero, B=zero, C=zero))
    assert report.verdict == PASS


def test_exit_code_reflects_failures():
    failing = CheckReport('x', 'ref', 0, 2, 1, 2.0, FAIL)
    assert SuiteResult([failing]).exit_code == 1
    assert SuiteResult([]).exit_code == 0
