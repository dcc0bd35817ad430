"""
Tests for sets, sumsets and the higher difference sets
"""

from fractions import Fraction

import pytest

import sets
from errors import CapExceededError, GroupMismatchError, VerificationError, WraparoundError
from group import make_group
from sets import (GSet, TupleSet, basis_depth_check, cartesian, covering_bound, diagonal, diffset, greedy_cover,
                  higher_diff, higher_sum, iterated, magnification_ratio, restricted, restricted_vec,
                  sum_basis_check, sumset, tuple_product, tuple_shift, wraparound_guard)


def test_from_elements_reduces_and_sorts(z8):
    A = GSet.from_elements(z8, [9, 3, 1])
    assert list(A) == [1, 3]
    assert len(A) == 2
    assert 3 in A and 2 not in A


def test_set_operations(z8, progression):
    B = GSet.from_elements(z8, [2, 5])
    assert list(progression & B) == [2]
    assert list(progression | B) == [0, 1, 2, 5]
    assert list(progression - B) == [0, 1]
    assert list(progression.translate(7)) == [0, 1, 7]
    assert list(progression.negate()) == [0, 6, 7]
    assert len(progression.complement()) == 5
    assert GSet.from_elements(z8, [1]).is_subset(progression)


def test_sumset_and_diffset(progression):
    assert list(sumset(progression, progression)) == [0, 1, 2, 3, 4]
    assert list(diffset(progression, progression)) == [0, 1, 2, 6, 7]


def test_iterated_sumset(progression):
    # 2A - A = {-2, ..., 4}
    assert list(iterated(2, 1, progression)) == [0, 1, 2, 3, 4, 6, 7]
    assert iterated(1, 0, progression) == progression
    with pytest.raises(ValueError):
        iterated(0, 0, progression)


def test_empty_sumset(z8, progression):
    assert len(sumset(progression, GSet.empty(z8))) == 0


def test_group_mismatch(progression):
    with pytest.raises(GroupMismatchError):
        sumset(progression, GSet.from_elements(make_group([5]), [0]))


def test_restricted_sets(progression):
    assert list(restricted(progression, 1)) == [0, 1]
    assert list(restricted_vec(progression, [1, 2])) == [0]


def test_tuple_sets(pair):
    T = TupleSet.from_tuples(pair.group, 2, [(0, 1), (4, 4), (0, 1)])
    assert len(T) == 2
    assert (4, 4) in T and (1, 0) not in T
    assert list(diagonal(pair, 2)) == [(0, 0), (1, 1)]
    assert len(cartesian([pair, pair, pair])) == 8


def test_tuple_product_concatenates_coordinates(pair):
    T = TupleSet.from_tuples(pair.group, 2, [(2, 3)])
    product = tuple_product([pair, T])
    assert product.arity == 3
    assert set(product) == {(0, 2, 3), (1, 2, 3)}


def test_higher_diff_small(pair):
    # {(a1 - b, a2 - b)} for A = B = {0, 1} has 7 distinct pairs
    T = higher_diff([pair, pair], pair)
    assert len(T) == 7
    assert (4, 4) in T and (1, 1) in T and (1, 4) not in T


@pytest.mark.parametrize('method', ['characteristic', 'recursive'])
def test_higher_diff_methods_agree(random_set, method):
    A, B, C = random_set(16, 5), random_set(16, 4), random_set(16, 6)
    assert higher_diff([A, B], C, method=method) == higher_diff([A, B], C)


def test_higher_diff_unknown_method(pair):
    with pytest.raises(ValueError):
        higher_diff([pair], pair, method='guess')


def test_higher_diff_cap(pair):
    with pytest.raises(CapExceededError):
        higher_diff([pair] * 3, pair, cap=4)


def test_tuple_shift_matches_higher_sets(pair):
    Y = cartesian([pair, pair])
    assert tuple_shift(Y, pair) == higher_diff([pair, pair], pair)
    assert tuple_shift(Y, pair, sign=1) == higher_sum([pair, pair], pair)


def test_basis_depth(z5):
    assert basis_depth_check(GSet.full(z5), 2)
    assert not basis_depth_check(GSet.from_elements(z5, [0]), 1)
    residues = GSet.from_elements(make_group([7]), [1, 2, 4])
    assert basis_depth_check(residues, 1)
    # {1, 2, 4} + {1, 2, 4} misses 0 mod 7
    assert not sum_basis_check(residues, 1)


def test_greedy_cover(z8):
    A = GSet.from_elements(z8, [0, 1, 2, 3])
    X = greedy_cover(A)
    assert list(X) == [0, 4]
    assert len(sumset(A, X)) == z8.order
    assert covering_bound(A) == 6


@pytest.mark.parametrize('size', [1, 3, 7, 16])
def test_greedy_cover_stays_within_bound(random_set, size):
    A = random_set(64, size)
    X = greedy_cover(A)
    assert len(sumset(A, X)) == 64
    assert len(X) <= covering_bound(A)


def test_greedy_cover_reports_an_oversized_cover(z8, monkeypatch):
    monkeypatch.setattr(sets, 'covering_bound', lambda A: 1)
    with pytest.raises(VerificationError):
        greedy_cover(GSet.from_elements(z8, [0]))


def test_magnification_ratio(pair):
    R, Z = magnification_ratio(pair, pair)
    assert R == Fraction(3, 2)
    assert list(Z) == [0, 1]


def test_magnification_ratio_cap(z8):
    with pytest.raises(CapExceededError):
        magnification_ratio(GSet.full(z8), GSet.full(z8), cap=4)


def test_wraparound_guard(progression):
    wraparound_guard([progression, progression], [progression])
    with pytest.raises(WraparoundError):
        wraparound_guard([progression] * 4)
