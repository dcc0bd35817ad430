"""
Tests for the check registry, relations and the per-check smoke run
"""

from fractions import Fraction

import pytest

import config
from errors import UnknownCheckError
from verifier.instances import derive_seed
from verifier.registry import (MANIFEST, all_checks, eq_exact, eq_tol, get_check, leq_exact, leq_tol, ratio,
                               register, report_only, select)
from verifier.runner import run_check


def test_manifest_matches_registry():
    names = [spec.name for spec in all_checks()]
    assert len(MANIFEST) == len(set(MANIFEST))
    assert set(names) == set(MANIFEST)
    assert names == sorted(names)


def test_every_check_has_reference_and_area():
    for spec in all_checks():
        assert spec.reference
        assert spec.area in ('set-algebra', 'harmonic', 'energy', 'spectral', 'constructions')


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        get_check('no_such_check')


def test_duplicate_registration():
    all_checks()
    with pytest.raises(ValueError):
        register('parseval', eq_exact(), 'duplicate', lambda rng: {})(lambda instance: [])


def test_select_glob():
    names = [spec.name for spec in select('heilbronn*')]
    assert 'heilbronn_e3' in names
    assert all(name.startswith('heilbronn') for name in names)
    assert select('no_match*') == []


def test_relations():
    assert eq_exact().holds(3, 3)
    assert not leq_exact().holds(3, 2)
    assert eq_tol(1e-9).holds(1.0, 1.0 + 1e-12)
    assert not eq_tol(1e-9).holds(1.0, 1.001)
    assert leq_tol().holds(1.0 + 1e-12, 1.0)
    assert report_only().holds(5, 1) is None
    assert str(eq_tol(1e-6)) == 'eq_tol(1e-06)'


def test_ratio():
    assert ratio(0, 0) == 1.0
    assert ratio(1, 0) is None
    assert ratio(3, 4) == 0.75
    assert ratio(Fraction(1, 3), 1) == pytest.approx(1 / 3)
    assert ratio(1.5, 3.0) == 0.5


@pytest.mark.parametrize('name', MANIFEST)
def test_check_passes_on_first_trial(name):
    spec = get_check(name)
    report = run_check(spec, derive_seed(config.DEFAULT_SEED, name, 0))
    assert not report.failed, report.witness
