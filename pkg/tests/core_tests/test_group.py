"""
Tests for mixed-radix groups, elements and characters
"""

from fractions import Fraction

import numpy as np
import pytest

from errors import CapExceededError, GroupMismatchError
from group import Character, char_eval, make_group


def test_mixed_radix_first_factor_fastest():
    g = make_group([4, 8])
    assert g.order == 32
    assert g.weights == (1, 4)
    assert g.unpack(13) == (1, 3)
    assert g.pack((1, 3)) == 13
    assert g.pack((5, 11)) == 13


def test_index_arithmetic_on_product_group():
    g = make_group([4, 8])
    # (1, 3) + (3, 6) = (0, 1)
    assert int(g.add_index(13, 27)) == 4
    assert int(g.neg_index(13)) == 23
    assert int(g.sub_index(4, 27)) == 13
    assert int(g.scale_index(13, 2)) == g.pack((2, 6))


def test_vectorized_digits_match_unpack():
    g = make_group([2, 3, 5])
    indices = np.arange(g.order)
    digits = g.digits(indices)
    assert [tuple(row) for row in digits] == [g.unpack(i) for i in indices]
    assert np.array_equal(g.pack_digits(digits), indices)


def test_invalid_factors():
    with pytest.raises(ValueError):
        make_group([])
    with pytest.raises(ValueError):
        make_group([1, 4])


def test_order_cap():
    with pytest.raises(CapExceededError):
        make_group([64], cap=32)


def test_power_group():
    g = make_group([4, 8])
    assert g.power(2).factors == (4, 8, 4, 8)
    assert g.power(2).order == 1024
    with pytest.raises(ValueError):
        g.power(0)


def test_group_mismatch():
    with pytest.raises(GroupMismatchError):
        make_group([8]).require_same(make_group([2, 4]))


def test_elements():
    g = make_group([5])
    assert (g.elem(3) + g.elem(4)).index == 2
    assert (-g.elem(1)).index == 4
    assert (2 * g.elem(3)).index == 1
    assert g.elem((7,)).index == 2
    with pytest.raises(ValueError):
        g.elem(5)


def test_character_phase_is_exact():
    g = make_group([4, 8])
    chi = Character(g.elem((1, 2)))
    x = g.elem((1, 1))
    assert chi.phase(x) == Fraction(1, 2)
    assert chi(x) == pytest.approx(-1)


def test_character_values_agree_with_pointwise_evaluation():
    g = make_group([3, 4])
    xi = g.elem(7)
    values = Character(xi).values()
    expected = [char_eval(xi, g.elem(x)) for x in range(g.order)]
    assert np.allclose(values, expected)
    # orthogonality against the trivial character
    assert abs(values.sum()) < 1e-9
