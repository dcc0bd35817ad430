"""
Tests for prime fields, multiplicative subgroups, Heilbronn sums and convex sets
"""

import math

import numpy as np
import pytest

from constructions import (ConvexIntSet, PrimeField, convex_set, decay_profile, dilate, heilbronn_fourier_max,
                           heilbronn_subgroup, heilbronn_sum, mult_subgroup, multiplicative_generator,
                           multiplicative_order, quadratic_residues, residue_basis_depth)
from energy import energy_k
from errors import WraparoundError
from group import make_group
from harmonic import DenseFn, dft


def test_prime_field():
    field = PrimeField(13)
    assert field.generator == 2
    assert field.inverse(5) == 8
    assert field.order_of(12) == 2
    assert multiplicative_order(2, 13) == 12
    with pytest.raises(ValueError):
        PrimeField(12)


def test_multiplicative_subgroup():
    sub = mult_subgroup(13, 4)
    assert list(sub.gset) == [1, 5, 8, 12]
    assert sub.powers == (1, 8, 12, 5)
    assert np.allclose(sub.table.conj().T @ sub.table, np.eye(4))
    assert multiplicative_generator(sub.gset) == 5
    with pytest.raises(ValueError):
        mult_subgroup(13, 5)


def test_quadratic_residues():
    assert list(quadratic_residues(7)) == [1, 2, 4]
    with pytest.raises(ValueError):
        quadratic_residues(2)


def test_residue_basis_depth():
    assert residue_basis_depth(13) == 1
    assert residue_basis_depth(101) == 2
    assert residue_basis_depth(7) == 1
    with pytest.raises(ValueError):
        residue_basis_depth(3)
    with pytest.raises(ValueError):
        residue_basis_depth(5)


def test_heilbronn_subgroup_mod_25():
    gamma = heilbronn_subgroup(5)
    assert gamma.group.order == 25
    assert list(gamma) == [1, 7, 18, 24]
    assert energy_k(gamma, 3) == 100
    assert list(dilate(gamma, 2)) == [2, 11, 14, 23]
    with pytest.raises(ValueError):
        heilbronn_subgroup(6)
    with pytest.raises(ValueError):
        heilbronn_subgroup(101)
    assert len(heilbronn_subgroup(97)) == 96


def test_heilbronn_sum():
    expected = 1 + 2 * math.cos(2 * math.pi / 25) + 2 * math.cos(14 * math.pi / 25)
    value = heilbronn_sum(5, 1)
    assert value.real == pytest.approx(expected)
    assert abs(value.imag) < 1e-12
    assert heilbronn_sum(5, 0) == pytest.approx(5)


@pytest.mark.parametrize('p', [5, 7, 11])
def test_heilbronn_fourier_max(p):
    gamma = heilbronn_subgroup(p)
    xi, peak = heilbronn_fourier_max(p, gamma)
    power = np.abs(dft(DenseFn.indicator(gamma)).values) ** 2
    assert 0 < xi < p * p
    assert peak == pytest.approx(power[1:].max())
    assert abs(heilbronn_sum(p, -xi) - 1) ** 2 == pytest.approx(peak)


def test_convex_sets():
    squares = convex_set('squares', 5)
    assert squares.elements == (1, 4, 9, 16, 25)
    assert squares.host.order == 100
    assert squares.gaps == (3, 5, 7, 9)
    assert convex_set('cubes', 3).elements == (1, 8, 27)
    random_gaps = convex_set('random', 10, seed=3).gaps
    assert all(b > a for a, b in zip(random_gaps, random_gaps[1:]))
    with pytest.raises(ValueError):
        convex_set('squares', 2)
    with pytest.raises(ValueError):
        ConvexIntSet((1, 2, 3), 'line', make_group([100]))


def test_convex_guard():
    squares = convex_set('squares', 5)
    squares.guard(1, 1)
    with pytest.raises(WraparoundError):
        squares.guard(4, 1)


def test_decay_profile():
    A = convex_set('squares', 10).gset
    profile = decay_profile(A, A)
    assert profile.ranks[0] == (1, 10)
    assert all(a[1] >= b[1] for a, b in zip(profile.ranks, profile.ranks[1:]))
    assert profile.constant >= 1 - 1e-12
