"""
Tests for dense functions, convolutions, the DFT and generalized convolutions
"""

import math

import numpy as np
import pytest

from group import make_group
from harmonic import (DenseFn, autocorrelation, convolve, correlate, dft, gen_convolution, inner, inverse_dft,
                      kfold_convolve, lp_norm, tensor_inner, transpose_blocks)


def test_dense_function_shape(z5):
    with pytest.raises(ValueError):
        DenseFn(z5, [1, 2, 3])
    assert DenseFn(z5, np.ones(5, dtype=bool)).is_integer


def test_autocorrelation_and_convolution(pair):
    f = DenseFn.indicator(pair)
    assert list(autocorrelation(pair).values) == [2, 1, 0, 0, 1]
    assert list(convolve(f, f).values) == [1, 2, 1, 0, 0]
    assert list(kfold_convolve(f, 3).values) == [1, 3, 3, 1, 0]


def test_convolution_rules(rng, z8):
    f = DenseFn(z8, rng.integers(-3, 4, size=8))
    g = DenseFn(z8, rng.integers(-3, 4, size=8))
    assert convolve(f, g) == convolve(g, f)
    assert correlate(f, g) == correlate(g, f).reflect()


def test_dft_of_delta_and_constant(z8):
    assert np.allclose(dft(DenseFn.delta(z8)).values, np.ones(8))
    expected = np.zeros(8)
    expected[0] = 8
    assert np.allclose(dft(DenseFn(z8, np.ones(8, dtype=np.int64))).values, expected)


@pytest.mark.parametrize('factors', [[8], [4, 8], [2, 3, 5]])
def test_dft_matches_numpy(rng, factors):
    group = make_group(factors)
    values = rng.normal(size=group.order) + 1j * rng.normal(size=group.order)
    f = DenseFn(group, values)
    reference = np.fft.fftn(group.as_grid(values))
    assert np.allclose(dft(f).values, group.from_grid(reference))
    assert inverse_dft(dft(f)).allclose(f)


def test_parseval(rng):
    group = make_group([6, 6])
    f = DenseFn(group, rng.normal(size=36) + 1j * rng.normal(size=36))
    assert math.fsum(np.abs(f.values) ** 2) == pytest.approx(math.fsum(np.abs(dft(f).values) ** 2) / 36)
    assert inner(f, f).real == pytest.approx(lp_norm(f, 2) ** 2)


def test_lp_norms(z5):
    f = DenseFn(z5, [3, -4, 0, 0, 0])
    assert lp_norm(f, 2) == pytest.approx(5.0)
    assert lp_norm(f, 1) == pytest.approx(7.0)
    assert lp_norm(f, math.inf) == 4.0


def test_exact_path_escalates(z5):
    big = DenseFn(z5, [2 ** 40, 0, 0, 0, 1])
    product = correlate(big, big)
    assert product.values[0] == 2 ** 80 + 1


def test_two_fold_generalized_convolution_is_correlation(pair):
    assert gen_convolution([pair, pair]).to_dict() == {(0,): 2, (1,): 1, (4,): 1}


def test_three_fold_table(pair):
    C3 = gen_convolution([pair, pair, pair])
    assert C3.arity == 2
    assert C3.to_dict() == {(0, 0): 2, (0, 1): 1, (1, 0): 1, (1, 1): 1, (4, 4): 1, (4, 0): 1, (0, 4): 1}
    assert C3.total() == len(pair) ** 3
    assert C3.power_sum(2) == 10


def test_generalized_convolution_needs_two(pair):
    with pytest.raises(ValueError):
        gen_convolution([pair])


def test_transpose_blocks(pair):
    C3 = gen_convolution([pair, pair, pair])
    T = transpose_blocks(C3, 1, 2)
    assert T == C3
    with pytest.raises(ValueError):
        transpose_blocks(C3, 2, 2)


def test_tensor_inner_is_energy(pair):
    C2 = gen_convolution([pair, pair])
    assert tensor_inner(C2, C2) == 6
