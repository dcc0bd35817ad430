#!/usr/bin/env python3
"""
Higher Energies Toolkit - Harmonic Checks
Parseval, convolution rules and the identities of generalized convolutions
"""

import math
import logging

import numpy as np

from energy import energy2
from group import make_group
from harmonic import (DenseFn, convolve, correlate, dft, gen_convolution, inner, inverse_dft, tensor_inner,
                      transpose_blocks)
from verifier.instances import add_entries, load, load_all, random_sets, random_size, random_subset, set_instance
from verifier.registry import eq_exact, eq_tol, register

logger = logging.getLogger('verifier.checks_harmonic')

AREA = 'harmonic'

FOURIER_GROUPS = ([16], [32], [64], [4, 8], [2, 3, 5], [6, 6])
SMALL_ORDERS = (5, 6, 7, 8)
NONZERO = (-3, -2, -1, 1, 2, 3)


def _close(a, b):
    """(relative sup distance, 0) for two value arrays"""
    a, b = np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128)
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)), float(np.max(np.abs(b), initial=0.0)))
    return float(np.max(np.abs(a - b), initial=0.0)) / scale, 0.0


def _fourier_group(rng):
    return make_group(FOURIER_GROUPS[int(rng.integers(len(FOURIER_GROUPS)))])


def _complex_functions(names):
    def make(rng):
        group = _fourier_group(rng)
        functions = {name: DenseFn(group, rng.normal(size=group.order) + 1j * rng.normal(size=group.order))
                     for name in names}
        return add_entries(set_instance(group), functions=functions)
    return make


def _integer_functions(names):
    def make(rng):
        group = _fourier_group(rng)
        functions = {name: DenseFn(group, rng.integers(-3, 4, size=group.order)) for name in names}
        return add_entries(set_instance(group), functions=functions)
    return make


def _sparse_function(rng, group, low=1, high=3):
    """Integer function with a few nonzero values"""
    values = np.zeros(group.order, dtype=np.int64)
    support = rng.choice(group.order, size=min(int(rng.integers(low, high + 1)), group.order), replace=False)
    values[support] = rng.choice(NONZERO, size=support.size)
    return DenseFn(group, values)


@register('parseval', eq_tol(), 'sum |f|^2 = (1/N) sum |f^|^2', _complex_functions(('f',)), AREA)
def check_parseval(instance):
    group, _, _, fn, _ = load_all(instance)
    f = fn['f']
    lhs = math.fsum(np.abs(f.values) ** 2)
    rhs = math.fsum(np.abs(dft(f).values) ** 2) / group.order
    return [(lhs, rhs)]


@register('parseval_inner', eq_tol(), '<f, g> = (1/N) <f^, g^>', _complex_functions(('f', 'g')), AREA)
def check_parseval_inner(instance):
    group, _, _, fn, _ = load_all(instance)
    f, g = fn['f'], fn['g']
    lhs = inner(f, g)
    rhs = inner(dft(f), dft(g)) / group.order
    return [(lhs.real, rhs.real), (lhs.imag, rhs.imag)]


@register('svertka', eq_tol(), 'sum |(f * g)(y)|^2 = (1/N) sum |f^|^2 |g^|^2', _complex_functions(('f', 'g')), AREA)
def check_svertka(instance):
    group, _, _, fn, _ = load_all(instance)
    f, g = fn['f'], fn['g']
    lhs = math.fsum(np.abs(convolve(f, g).values) ** 2)
    rhs = math.fsum(np.abs(dft(f).values) ** 2 * np.abs(dft(g).values) ** 2) / group.order
    return [(lhs, rhs)]


@register('fourier_convolution', eq_tol(), '(f * g)^ = f^ g^ and (f ∘ g)^ = (f(-.))^ g^',
          _complex_functions(('f', 'g')), AREA)
def check_fourier_convolution(instance):
    _, _, _, fn, _ = load_all(instance)
    f, g = fn['f'], fn['g']
    gh = dft(g).values
    return [_close(dft(convolve(f, g)).values, dft(f).values * gh),
            _close(dft(correlate(f, g)).values, dft(f.reflect()).values * gh)]


def _make_char_char(rng):
    group = _fourier_group(rng)
    A = random_subset(rng, group, random_size(rng, 1, min(16, group.order - 1)))
    return set_instance(group, {'bump': int(rng.integers(group.order))}, A=A)


@register('char_char', eq_tol(), 'S^ = (1/N) conj(S^) ∘ S^ exactly when S is a 0/1 function',
          _make_char_char, AREA)
def check_char_char(instance):
    group, s, params = load(instance)
    S = DenseFn.indicator(s['A'])
    Sh = dft(S)
    pair = _close(Sh.values, correlate(Sh.conj(), Sh).values / group.order)

    values = S.values.copy()
    values[int(params['bump'])] = 2
    fh = dft(DenseFn(group, values))
    # f^2 != f, so the identity must break
    distance, _ = _close(fh.values, correlate(fh.conj(), fh).values / group.order)
    return [pair, (float(distance > 1e-6), 1.0)]


@register('inverse_dft', eq_tol(), 'inverse DFT of f^ is f', _complex_functions(('f',)), AREA)
def check_inverse_dft(instance):
    _, _, _, fn, _ = load_all(instance)
    f = fn['f']
    return [_close(inverse_dft(dft(f)).values, f.values)]


def _make_matrix(rng):
    group = make_group([int(rng.choice(SMALL_ORDERS))])
    l, k = int(rng.integers(2, 4)), int(rng.integers(2, 4))
    functions = {f'f{i}{j}': _sparse_function(rng, group) for i in range(l) for j in range(k)}
    return add_entries(set_instance(group, {'l': l, 'k': k}), functions=functions)


@register('commutative_C', eq_exact(),
          'C_l(C_k(row_1), ..., C_k(row_l)) = C_k(C_l(col_1), ..., C_l(col_k)) up to block transposition',
          _make_matrix, AREA)
def check_commutative_C(instance):
    _, _, params, fn, _ = load_all(instance)
    l, k = int(params['l']), int(params['k'])
    F = [[fn[f'f{i}{j}'] for j in range(k)] for i in range(l)]
    lhs = gen_convolution([gen_convolution(row) for row in F])
    rhs = gen_convolution([gen_convolution([F[i][j] for i in range(l)]) for j in range(k)])
    swapped = transpose_blocks(lhs, l - 1, k - 1)
    return [(swapped.power_sum(2), rhs.power_sum(2)), (int(swapped == rhs), 1)]


def _make_pairs(rng):
    group = make_group([int(rng.integers(5, 13))])
    l = int(rng.integers(2, 4))
    functions = {}
    for i in range(l):
        functions[f'f{i}'] = DenseFn(group, rng.integers(-2, 3, size=group.order))
        functions[f'g{i}'] = DenseFn(group, rng.integers(-2, 3, size=group.order))
    return add_entries(set_instance(group, {'l': l}), functions=functions)


@register('scalar_C', eq_exact(), '<C_l(f_1..f_l), C_l(g_1..g_l)> = sum_z prod_i (f_i ∘ g_i)(z)',
          _make_pairs, AREA)
def check_scalar_C(instance):
    group, _, params, fn, _ = load_all(instance)
    l = int(params['l'])
    fs = [fn[f'f{i}'] for i in range(l)]
    gs = [fn[f'g{i}'] for i in range(l)]
    lhs = tensor_inner(gen_convolution(fs), gen_convolution(gs))
    correlations = [correlate(f, g) for f, g in zip(fs, gs)]
    rhs = sum(math.prod(int(c.values[z]) for c in correlations) for z in range(group.order))
    return [(lhs, rhs)]


def _make_family(low_k=2, high_k=3):
    def make(rng):
        group = make_group([int(rng.choice(SMALL_ORDERS))])
        l, k = int(rng.integers(2, 4)), int(rng.integers(low_k, high_k + 1))
        functions = {f'f{j}': _sparse_function(rng, group, 2, 4) for j in range(k)}
        return add_entries(set_instance(group, {'l': l, 'k': k}), functions=functions)
    return make


@register('gen_C', eq_exact(), 'sum_x prod_j C_l(f_j)(x) = sum over tuples of C_k(f_1..f_k)^l',
          _make_family(), AREA)
def check_gen_C(instance):
    _, _, params, fn, _ = load_all(instance)
    l, k = int(params['l']), int(params['k'])
    fs = [fn[f'f{j}'] for j in range(k)]
    tables = [gen_convolution([f] * l).to_dict() for f in fs]
    lhs = sum(math.prod(table[key] for table in tables)
              for key in tables[0] if all(key in table for table in tables[1:]))
    return [(lhs, gen_convolution(fs).power_sum(l))]


@register('conv_C', eq_exact(), '<C_l(f_1), C_l(f_2) ∘ C_l(f_3)> = sum_z (f_1 ∘ (f_2 ∘ f_3))(z)^l',
          _make_family(3, 3), AREA)
def check_conv_C(instance):
    _, _, params, fn, _ = load_all(instance)
    l = int(params['l'])
    f0, f1, f2 = fn['f0'], fn['f1'], fn['f2']
    tensors = [gen_convolution([f] * l) for f in (f0, f1, f2)]
    lhs = tensor_inner(tensors[0], gen_convolution([tensors[1], tensors[2]]))
    nested = correlate(f0, correlate(f1, f2))
    return [(lhs, sum(int(v) ** l for v in nested.values))]


@register('energy_via_tensor', eq_exact(), 'sum_x C_2(A, A)(x)^2 = E(A)', random_sets(('A',)), AREA)
def check_energy_via_tensor(instance):
    _, s, _ = load(instance)
    A = s['A']
    return [(gen_convolution([A, A]).power_sum(2), energy2(A, A))]


@register('convolution_symmetry', eq_exact(), 'f * g = g * f and (f ∘ g)(x) = (g ∘ f)(-x)',
          _integer_functions(('f', 'g')), AREA)
def check_convolution_symmetry(instance):
    _, _, _, fn, _ = load_all(instance)
    f, g = fn['f'], fn['g']
    return [(int(convolve(f, g) == convolve(g, f)), 1),
            (int(correlate(f, g) == correlate(g, f).reflect()), 1)]
