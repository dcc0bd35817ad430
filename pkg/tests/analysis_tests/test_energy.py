"""
Tests for additive, higher and multiplicative energies and the T_k moments
"""

from fractions import Fraction

import pytest

from energy import (EnergyValue, critical_parameters, energy2, energy_alpha, energy_k, energy_kl, function_energy,
                    mult_energy, power_sum, sigma_k, t_k, t_k_fourier, tuple_energy)
from errors import CapExceededError, ModeError
from group import make_group
from harmonic import DenseFn
from sets import GSet, cartesian, diagonal


def test_energy_of_progression(progression):
    assert energy2(progression, progression) == 19
    assert energy_k(progression, 3) == 45
    assert energy_k(progression, 1) == len(progression) ** 2


@pytest.mark.parametrize('n', [1, 2, 5, 17])
def test_progression_formula(n):
    group = make_group([4 * n + 4])
    A = GSet.from_elements(group, range(n))
    assert energy2(A, A) == (2 * n ** 3 + n) // 3


def test_energy_of_pair(pair):
    assert energy2(pair, pair) == 6
    assert energy_k(pair, 3) == 10
    assert energy_alpha(pair, 1.5) == pytest.approx(2 ** 1.5 + 2)
    assert energy_alpha(pair, 2) == 6


def test_energy_alpha_needs_positive_exponent(pair):
    with pytest.raises(ValueError):
        energy_alpha(pair, 0)


def test_energy_kl(pair):
    assert energy_kl(pair, 1, 3) == 8
    assert energy_kl(pair, 4, 1) == 16
    assert energy_kl(pair, 2, 3) == 10
    assert energy_kl(pair, 3, 2) == energy_kl(pair, 3, 2, use_symmetry=False) == 10
    assert energy_kl(pair, 3, 3) == 14
    with pytest.raises(ValueError):
        energy_kl(pair, 0, 2)


def test_energy_kl_cap(progression):
    with pytest.raises(CapExceededError):
        energy_kl(progression, 3, 3, cap=5)


def test_t_k_and_sigma_k(pair):
    assert t_k(pair, 1) == 2
    assert t_k(pair, 2) == 6
    assert t_k_fourier(pair, 2) == pytest.approx(6)


def test_sigma_k_of_symmetric_set(z8):
    A = GSet.from_elements(z8, [7, 0, 1])
    assert sigma_k(A, 2) == 3
    assert sigma_k(A, 1) == 1


def test_tuple_energy_matches_higher_energy(pair):
    assert tuple_energy(diagonal(pair, 1), cartesian([pair])) == energy_k(pair, 2)
    assert tuple_energy(diagonal(pair, 2), cartesian([pair, pair])) == energy_k(pair, 3)


def test_function_energy_of_indicator(pair):
    f = DenseFn.indicator(pair)
    assert function_energy(f, f) == 6


def test_multiplicative_energy(z5):
    A = GSet.from_elements(z5, [1, 2])
    assert mult_energy(A, A) == 6
    with pytest.raises(ModeError):
        mult_energy(GSet.from_elements(make_group([8]), [1]), GSet.from_elements(make_group([8]), [1]))


def test_critical_parameters(pair):
    K, M = critical_parameters(pair)
    assert K == Fraction(4, 3)
    assert M == Fraction(10, 9)


def test_power_sum_is_exact():
    assert power_sum([2 ** 40], 2) == 2 ** 80
    assert power_sum([], 3) == 0


def test_energy_value_json():
    assert EnergyValue('E_k', 19, (2,)).to_json() == {'kind': 'E_k(2)', 'value': 19}
    assert EnergyValue('E_mult', 6).to_json() == {'kind': 'E_mult', 'value': 6}


@pytest.mark.parametrize('k, l, expected', [(2, 4, 18), (3, 4, 22), (2, 3, 10)])
def test_energy_kl_symmetry_without_shortcut(pair, k, l, expected):
    assert energy_kl(pair, k, l, use_symmetry=False) == expected
    assert energy_kl(pair, l, k, use_symmetry=False) == expected


def test_degenerate_energy_kl_is_a_power_of_the_size(progression):
    assert energy_kl(progression, 1, 4) == 3 ** 4
    assert energy_kl(progression, 4, 1) == 3 ** 4
