#!/usr/bin/env python3
"""
Higher Energies Toolkit - Set Algebra Checks
Triangle inequalities for higher difference sets, Petridis-type bounds, bases and coverings
"""

import logging

import numpy as np

from almost_periods import cs_almost_periods
from group import make_group
from harmonic import DenseFn
from sets import (GSet, basis_depth_check, covering_bound, diffset, greedy_cover, higher_diff, higher_sum,
                  iterated, magnification_ratio, restricted, sum_basis_check, sumset, tuple_product,
                  tuple_shift, wraparound_guard)
from verifier.instances import (add_entries, load, load_all, random_group, random_size, random_sets,
                                random_subset, random_tuple_set, set_instance)
from verifier.registry import eq_exact, leq_exact, leq_tol, register

logger = logging.getLogger('verifier.checks_sets')

AREA = 'set-algebra'


def _tuple_instance(set_names, tuple_names, arity=2, low=2, high=8, orders=(16, 32)):
    """make(rng) for checks mixing subsets of G with subsets of G^arity"""
    def make(rng):
        group = random_group(rng, orders)
        sets = {name: random_subset(rng, group, random_size(rng, low, high)) for name in set_names}
        tuples = {name: random_tuple_set(rng, group, arity, random_size(rng, low, high)) for name in tuple_names}
        return add_entries(set_instance(group, {'arity': arity}, **sets), tuple_sets=tuples)
    return make


@register('ruzsa_triangle', leq_exact(), '|C||A-B| <= |A x B - Δ(C)| <= |A-C||B-C|',
          random_sets(('A', 'B', 'C')), AREA)
def check_ruzsa_triangle(instance):
    _, s, _ = load(instance)
    A, B, C = s['A'], s['B'], s['C']
    middle = len(higher_diff([A, B], C))
    return [(len(C) * len(diffset(A, B)), middle),
            (middle, len(diffset(A, C)) * len(diffset(B, C)))]


@register('ruzsa_triangle_1', leq_exact(), '|W x X||Y - Δ(Z)| <= |Y x W x Z - Δ(X)| for W, Y in G^k',
          _tuple_instance(('X', 'Z'), ('W', 'Y')), AREA)
def check_ruzsa_triangle_1(instance):
    _, s, _, _, t = load_all(instance)
    W, Y, X, Z = t['W'], t['Y'], s['X'], s['Z']
    lhs = len(W) * len(X) * len(tuple_shift(Y, Z))
    return [(lhs, len(tuple_shift(tuple_product([Y, W, Z]), X)))]


@register('ruzsa_triangle_2', leq_exact(),
          '|A1 x ... x Ak - Δ(B)| <= |A1 x ... x Am - Δ(A_{m+1})||A_{m+1} x ... x Ak - Δ(B)|',
          random_sets(('A1', 'A2', 'A3', 'B'), 3, 10), AREA)
def check_ruzsa_triangle_2(instance):
    _, s, _ = load(instance)
    sets, B = [s['A1'], s['A2'], s['A3']], s['B']
    full = len(higher_diff(sets, B))
    return [(full, len(higher_diff(sets[:m], sets[m])) * len(higher_diff(sets[m:], B)))
            for m in range(1, len(sets))]


@register('ruzsa_triangle_swap', eq_exact(), '|Y x Z - Δ(X)| = |Y x X - Δ(Z)|',
          _tuple_instance(('X', 'Z'), ('Y',)), AREA)
def check_ruzsa_triangle_swap(instance):
    _, s, _, _, t = load_all(instance)
    Y, X, Z = t['Y'], s['X'], s['Z']
    return [(len(tuple_shift(tuple_product([Y, Z]), X)), len(tuple_shift(tuple_product([Y, X]), Z)))]


@register('cor_A_minus_A_s', eq_exact(), 'sum over s in A-A of |A - A_s| = |A^2 - Δ(A)|',
          random_sets(('A',)), AREA)
def check_cor_A_minus_A_s(instance):
    _, s, _ = load(instance)
    A = s['A']
    total = sum(len(diffset(A, restricted(A, x))) for x in diffset(A, A))
    return [(total, len(higher_diff([A, A], A)))]


@register('higher_diff_growth', leq_exact(), '|A|^m |A^n - Δ(A)| <= |A^{n+m} - Δ(A)|, n + m <= 3',
          random_sets(('A',), 2, 10), AREA)
def check_higher_diff_growth(instance):
    _, s, _ = load(instance)
    A = s['A']
    return [(len(A) ** m * len(higher_diff([A] * n, A)), len(higher_diff([A] * (n + m), A)))
            for n, m in ((1, 1), (1, 2), (2, 1))]


@register('higher_sum_growth', leq_exact(),
          '|A|^m max(|A^n + Δ(A)|, |A^n - Δ(A)|) <= |A^{n+m} + Δ(A)|, n + m <= 3',
          random_sets(('A',), 2, 10), AREA)
def check_higher_sum_growth(instance):
    _, s, _ = load(instance)
    A = s['A']
    pairs = []
    for n, m in ((1, 1), (1, 2), (2, 1)):
        base = max(len(higher_sum([A] * n, A)), len(higher_diff([A] * n, A)))
        pairs.append((len(A) ** m * base, len(higher_sum([A] * (n + m), A))))
    return pairs


@register('sum_diag_identity', eq_exact(), '|A^2 + Δ(A)| = sum over s in A-A of |A + A_s|',
          random_sets(('A',)), AREA)
def check_sum_diag_identity(instance):
    _, s, _ = load(instance)
    A = s['A']
    total = sum(len(sumset(A, restricted(A, x))) for x in diffset(A, A))
    return [(len(higher_sum([A, A], A)), total)]


def _make_g_bases(rng):
    group = random_group(rng, (16, 32))
    sets = {f'A{i}': random_subset(rng, group, random_size(rng, 2, 8)) for i in range(1, 4)}
    return set_instance(group, {'k': int(rng.integers(2, 4))}, **sets)


@register('g_bases', eq_exact(), '|A1 x ... x Ak - Δ(G)| = |G| |A1 x ... x A_{k-1} - Δ(Ak)|',
          _make_g_bases, AREA)
def check_g_bases(instance):
    group, s, params = load(instance)
    sets = [s[f'A{i}'] for i in range(1, int(params['k']) + 1)]
    lhs = len(higher_diff(sets, GSet.full(group)))
    return [(lhs, group.order * len(higher_diff(sets[:-1], sets[-1])))]


@register('moshchevitin', leq_exact(), '|X - Y||Z - W| <= |(X - W) x (Y - Z) - Δ(Y - W)|',
          random_sets(('X', 'Y', 'Z', 'W'), 2, 8), AREA)
def check_moshchevitin(instance):
    _, s, _ = load(instance)
    X, Y, Z, W = s['X'], s['Y'], s['Z'], s['W']
    rhs = len(higher_diff([diffset(X, W), diffset(Y, Z)], diffset(Y, W)))
    return [(len(diffset(X, Y)) * len(diffset(Z, W)), rhs)]


@register('petridis', leq_exact(), '|nA - mA| <= R[A]^{n+m} |A|', random_sets(('A',), 2, 12), AREA)
def check_petridis(instance):
    _, s, _ = load(instance)
    A = s['A']
    R, _ = magnification_ratio(A, A)
    return [(len(iterated(n, m, A)), R ** (n + m) * len(A))
            for n, m in ((1, 1), (2, 1), (1, 2), (2, 0), (3, 0))]


@register('petridis_c', leq_exact(), '|B + C + X| <= R_B[A] |C + X| for the minimizing X',
          random_sets(('A', 'B', 'C'), 2, 10), AREA)
def check_petridis_c(instance):
    _, s, _ = load(instance)
    A, B, C = s['A'], s['B'], s['C']
    R, X = magnification_ratio(B, A)
    CX = sumset(C, X)
    return [(len(sumset(B, CX)), R * len(CX))]


@register('petridis_c_delta', leq_exact(), '|B + Δ(C + X)| <= R_B[A] |C + X| for B in G^k',
          _tuple_instance(('A', 'C'), ('B',), high=10), AREA)
def check_petridis_c_delta(instance):
    _, s, _, _, t = load_all(instance)
    A, C, B = s['A'], s['C'], t['B']
    R, X = magnification_ratio(B, A)
    CX = sumset(C, X)
    return [(len(tuple_shift(B, CX, sign=1)), R * len(CX))]


@register('triangle_plus', leq_exact(), '|A||B + Δ(C)| <= |B + Δ(A)||A + C|',
          _tuple_instance(('A', 'C'), ('B',)), AREA)
def check_triangle_plus(instance):
    _, s, _, _, t = load_all(instance)
    A, C, B = s['A'], s['C'], t['B']
    return [(len(A) * len(tuple_shift(B, C, sign=1)), len(tuple_shift(B, A, sign=1)) * len(sumset(A, C)))]


def _make_integer_set(rng):
    # integers in [0, 16) inside Z/64 never wrap under A +/- A
    group = make_group([64])
    A = GSet.from_elements(group, rng.choice(16, size=random_size(rng, 2, 12), replace=False))
    return set_instance(group, A=A)


@register('freiman_pigaev', leq_exact(), '|A+A|^{3/4} <= |A-A| <= |A+A|^{4/3} for integer sets',
          _make_integer_set, AREA)
def check_freiman_pigaev(instance):
    _, s, _ = load(instance)
    A = s['A']
    wraparound_guard([A, A])
    wraparound_guard([A], [A])
    S, D = len(sumset(A, A)), len(diffset(A, A))
    return [(S ** 3, D ** 4), (D ** 3, S ** 4)]


def _make_large_basis(rng):
    group = random_group(rng, (16, 32))
    k = int(rng.integers(1, 3))
    # |B| > (1 - 1/(k+1)) N forces depth k
    B = random_subset(rng, group, k * group.order // (k + 1) + 1)
    A = random_subset(rng, group, random_size(rng, 1, group.order // 2))
    return set_instance(group, {'k': k}, A=A, B=B)


@register('diff_bases', leq_exact(), '|A| N^k <= |B + A|^{k+1} when B - Δ_k(B) covers G^k',
          _make_large_basis, AREA)
def check_diff_bases(instance):
    group, s, params = load(instance)
    A, B, k = s['A'], s['B'], int(params['k'])
    basis = basis_depth_check(B, k)
    return [(0 if basis else 1, 0), (len(A) * group.order ** k, len(sumset(B, A)) ** (k + 1))]


@register('sum_basis', leq_exact(), '|A| N^k <= |B + A|^{k+1} when B^k + Δ(B) covers G^k',
          _make_large_basis, AREA)
def check_sum_basis(instance):
    group, s, params = load(instance)
    A, B, k = s['A'], s['B'], int(params['k'])
    basis = sum_basis_check(B, k)
    return [(0 if basis else 1, 0), (len(A) * group.order ** k, len(sumset(B, A)) ** (k + 1))]


def _make_constructions(rng):
    group = random_group(rng, (16, 32))
    sets = {name: random_subset(rng, group, random_size(rng, 2, 7)) for name in ('A1', 'A2', 'A3', 'B')}
    return set_instance(group, {'k': int(rng.integers(1, 4))}, **sets)


@register('higher_diff_constructions', eq_exact(),
          'A1 x ... x Ak - Δ(B) by image, by the intersection criterion and by recursion agree',
          _make_constructions, AREA)
def check_higher_diff_constructions(instance):
    _, s, params = load(instance)
    sets = [s[f'A{i}'] for i in range(1, int(params['k']) + 1)]
    image = higher_diff(sets, s['B'], method='image')
    characteristic = higher_diff(sets, s['B'], method='characteristic')
    recursive = higher_diff(sets, s['B'], method='recursive')
    return [(len(characteristic), len(image)), (len(recursive), len(image)),
            (int(characteristic == image), 1), (int(recursive == image), 1)]


@register('basis_depth_threshold', eq_exact(), '|B| > (1 - 1/(k+1)) N implies a basis of depth k',
          _make_large_basis, AREA)
def check_basis_depth_threshold(instance):
    _, s, params = load(instance)
    B, k = s['B'], int(params['k'])
    return [(int(basis_depth_check(B, k)), 1), (int(sum_basis_check(B, k)), 1)]


@register('greedy_cover_bound', leq_exact(), 'greedy X with A + X = G has |X| <= ceil((N/|A|) ln N) + 1',
          random_sets(('A',), 1, 16), AREA)
def check_greedy_cover_bound(instance):
    group, s, _ = load(instance)
    A = s['A']
    X = greedy_cover(A)
    return [(group.order, len(sumset(A, X))), (len(X), covering_bound(A))]


def _make_almost_periods(rng):
    group = make_group([64])
    A = random_subset(rng, group, random_size(rng, 4, 16))
    values = rng.integers(0, 4, size=group.order)
    values[int(rng.integers(group.order))] += 1
    f = DenseFn(group, values)
    params = {'p': int(rng.choice([1, 2])), 'eps': float(rng.choice([0.5, 0.75])),
              'sampler_seed': int(rng.integers(2 ** 31))}
    return add_entries(set_instance(group, params, A=A), functions={'f': f})


@register('cs_almost_periods', leq_tol(), '||(f*A)(.+t) - f*A||_p <= eps ||f||_p |A|^(1/p) for every returned t',
          _make_almost_periods, AREA)
def check_cs_almost_periods(instance):
    _, s, params, functions, _ = load_all(instance)
    result = cs_almost_periods(s['A'], functions['f'], params['p'], params['eps'],
                               rng_seed=params['sampler_seed'])
    if not result.found:
        logger.debug("No almost periods sampled; nothing to validate")
    return [(result.max_shift_norm, result.bound), (int(result.found and not result.all_valid), 0)]
