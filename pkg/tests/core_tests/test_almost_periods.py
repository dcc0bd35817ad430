"""
Tests for the randomized almost-period sampler
"""

import math

import numpy as np
import pytest

from almost_periods import cs_almost_periods, default_samples, shift_norm
from group import make_group
from harmonic import DenseFn, convolve
from sets import GSet
from verifier.instances import random_subset


def test_default_samples():
    assert default_samples(2, 0.5) == 64
    assert default_samples(1, 0.9) == 10
    assert default_samples(1, 0.5, size=16) == 32
    # accuracy 0.5 / 4 for |A| = 16, p = 2
    assert default_samples(2, 0.5, size=16) == 1024


def test_zero_function_gives_every_translate(z8):
    A = GSet.from_elements(z8, [0, 3, 5])
    result = cs_almost_periods(A, DenseFn.zeros(z8), p=2, eps=0.5, k_samples=4, rng_seed=1)
    assert result.found and result.all_valid
    assert result.a == 0
    assert list(result.T) == [0, 3, 5]
    assert result.trials_used == 1


def test_periods_satisfy_the_norm_bound():
    group = make_group([32])
    A = GSet.from_elements(group, range(12))
    f = DenseFn.indicator(GSet.from_elements(group, [0, 1, 2, 5, 9]))
    result = cs_almost_periods(A, f, p=2, eps=0.5, trials=16, rng_seed=7)
    if not result.found:
        pytest.skip("sampler found no usable tuple for this seed")
    assert result.all_valid
    assert 0 in result.T
    F = convolve(f, DenseFn.indicator(A))
    for t in result.T:
        assert shift_norm(F, t, 2) <= result.bound + 1e-9 * max(1.0, result.bound)


def test_same_seed_same_periods():
    group = make_group([16])
    A = GSet.from_elements(group, [0, 2, 3, 7, 11])
    f = DenseFn.indicator(A)
    first = cs_almost_periods(A, f, p=2, eps=0.8, k_samples=8, rng_seed=3)
    second = cs_almost_periods(A, f, p=2, eps=0.8, k_samples=8, rng_seed=3)
    assert first.to_json() == second.to_json()


def test_invalid_arguments(z8):
    A = GSet.from_elements(z8, [0, 1])
    f = DenseFn.indicator(A)
    with pytest.raises(ValueError):
        cs_almost_periods(A, f, p=2, eps=1.5)
    with pytest.raises(ValueError):
        cs_almost_periods(A, f, p=0.5, eps=0.5)
    with pytest.raises(ValueError):
        cs_almost_periods(GSet.empty(z8), f, p=2, eps=0.5)


@pytest.mark.parametrize('seed', range(30))
def test_periods_meet_the_sharp_bound_on_random_sets(seed):
    rng = np.random.default_rng(seed)
    group = make_group([64])
    A = random_subset(rng, group, 16)
    f = DenseFn.indicator(random_subset(rng, group, 20))
    result = cs_almost_periods(A, f, p=2, eps=0.5, rng_seed=seed)
    assert result.found
    assert result.all_valid
    assert result.bound == pytest.approx(0.5 * math.sqrt(20) * 4)
    F = convolve(f, DenseFn.indicator(A))
    for t in result.T:
        assert shift_norm(F, t, 2) <= result.bound * (1 + 1e-9)


def test_relaxed_ratio_stays_below_the_sharp_one():
    group = make_group([64])
    A = GSet.from_elements(group, range(0, 48, 3))
    f = DenseFn.indicator(GSet.from_elements(group, [0, 1, 4, 9, 16, 25, 36, 49]))
    result = cs_almost_periods(A, f, p=2, eps=0.5, rng_seed=11)
    assert result.found
    assert result.relaxed_ratio <= result.max_shift_norm / result.bound + 1e-12
