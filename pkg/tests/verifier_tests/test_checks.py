"""
Multi-trial runs of the registered checks and the range-wide growth limits
"""

import math
import os

import pytest

from constructions import heilbronn_subgroup
from verifier.checks_constructions import convex_e3_ratios, heilbronn_e3_ratios
from verifier.instances import derive_seed, set_instance
from verifier.registry import all_checks, get_check
from verifier.report_log import PASS
from verifier.runner import run_check, run_suite

SPECTRAL_AND_CONSTRUCTIONS = [spec.name for spec in all_checks() if spec.area in ('spectral', 'constructions')]

EXACT_IDENTITIES = ('E_kl_symmetry', 'commutative_C', 'E3_E4_A_s', 'cor_A_minus_A_s', 'ruzsa_triangle_swap',
                    'g_bases')
EXACT_INEQUALITIES = ('ruzsa_triangle', 'ruzsa_triangle_1', 'ruzsa_triangle_2', 'higher_diff_growth',
                      'higher_sum_growth', 'moshchevitin', 'petridis', 'triangle_plus', 'E_sumsets_CS',
                      'E_k_sigma_k', 'E_k_E_k', 'ss2_corollary', 'freiman_pigaev')

slow = pytest.mark.skipif(not os.getenv('HET_SLOW_TESTS'), reason='set HET_SLOW_TESTS=1 for full trial counts')


@pytest.mark.parametrize('name', SPECTRAL_AND_CONSTRUCTIONS)
def test_twenty_trials_without_failure(name):
    result = run_suite(name, trials=20, threads=1)
    assert len(result.reports) == 20
    assert not result.failures, [r.witness for r in result.failures]


def test_almost_periods_over_twenty_instances():
    result = run_suite('cs_almost_periods', trials=20, threads=2)
    assert not result.failures, [r.witness for r in result.failures]


def test_heilbronn_operator_at_p_11():
    gamma = heilbronn_subgroup(11)
    instance = set_instance(gamma.group, {'p': 11}, Gamma=gamma)
    report = run_check(get_check('heilbronn_operator'), 0, instance)
    assert report.verdict == PASS, report.witness


def test_heilbronn_e3_ratio_stays_bounded():
    ratios = heilbronn_e3_ratios((5, 7, 11, 13))
    assert ratios[0] == pytest.approx(100 / (125 * math.log(5)))
    assert max(ratios) <= 4 * ratios[0]
    report = run_check(get_check('heilbronn_e3_growth'), derive_seed(1, 'heilbronn_e3_growth', 0))
    assert report.verdict == PASS


def test_convex_e3_ratio_does_not_explode():
    ratios = convex_e3_ratios((10, 20, 40, 80))
    assert len(ratios) == 4
    assert all(r > 0 for r in ratios)
    assert max(ratios) <= 2 * ratios[0]
    report = run_check(get_check('convex_e3_growth'), derive_seed(1, 'convex_e3_growth', 0))
    assert report.verdict == PASS


@slow
@pytest.mark.parametrize('name', EXACT_IDENTITIES)
def test_exact_identities_over_200_seeds(name):
    result = run_suite(name, trials=200)
    assert not result.failures, [r.witness for r in result.failures]


@slow
@pytest.mark.parametrize('name', EXACT_INEQUALITIES)
def test_exact_inequalities_over_100_seeds(name):
    result = run_suite(name, trials=100)
    assert not result.failures, [r.witness for r in result.failures]
