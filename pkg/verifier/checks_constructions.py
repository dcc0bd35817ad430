#!/usr/bin/env python3
"""
Higher Energies Toolkit - Construction Checks
Multiplicative subgroups, the Heilbronn subgroup, convex sets and quadratic residues
"""

import math
import logging

import numpy as np

import config
from constructions import (convex_set, decay_profile, dilate, heilbronn_fourier_max, heilbronn_subgroup,
                           heilbronn_sum, mult_subgroup, residue_basis_depth)
from energy import energy_k
from group import make_group
from harmonic import DenseFn, autocorrelation, dft
from sets import GSet, sumset, wraparound_guard
from spectral import build_op, principal_character_eigenvalue, subgroup_eigensystem
from verifier.instances import load, random_size, set_instance
from verifier.registry import eq_exact, eq_tol, leq_tol, register, report_only

logger = logging.getLogger('verifier.checks_constructions')

AREA = 'constructions'

HEILBRONN_PRIMES = (5, 7, 11, 13)
SUBGROUP_PRIMES = (13, 17, 29, 31, 37, 41, 61, 73, 97, 101)
CONVEX_SIZES = (10, 20, 40, 80)


def _heilbronn_instance(primes):
    def make(rng):
        p = int(rng.choice(primes))
        gamma = heilbronn_subgroup(p)
        return set_instance(gamma.group, {'p': p}, Gamma=gamma)
    return make


def _make_invariant(rng):
    if rng.random() < 0.5:
        return _heilbronn_instance(HEILBRONN_PRIMES)(rng)
    p = int(rng.choice(SUBGROUP_PRIMES))
    t = int(rng.choice([t for t in range(2, p) if (p - 1) % t == 0]))
    sub = mult_subgroup(p, t)
    return set_instance(sub.gset.group, {'p': p, 't': t}, Gamma=sub.gset)


@register('gamma_invariance', eq_exact(), '(Gamma ∘ Gamma)(gamma x) = (Gamma ∘ Gamma)(x) for gamma in Gamma',
          _make_invariant, AREA)
def check_gamma_invariance(instance):
    group, s, _ = load(instance)
    gamma = s['Gamma']
    r = autocorrelation(gamma).values
    points = np.arange(group.order)
    mismatches = 0
    for g in gamma.elements:
        mismatches += int(np.count_nonzero(r[group.scale_index(points, int(g))] != r))
    return [(mismatches, 0)]


@register('heilbronn_e3', eq_exact(), 'E_3 of the Heilbronn subgroup mod 25 is 100',
          _heilbronn_instance((5,)), AREA)
def check_heilbronn_e3(instance):
    _, s, _ = load(instance)
    gamma = s['Gamma']
    return [(energy_k(gamma, 3), 100), (int([int(x) for x in gamma.elements] == [1, 7, 18, 24]), 1)]


@register('heilbronn_e3_ratio', report_only(), 'E_3(Gamma) against p^3 log p',
          _heilbronn_instance(HEILBRONN_PRIMES), AREA)
def check_heilbronn_e3_ratio(instance):
    _, s, params = load(instance)
    p = int(params['p'])
    return [(energy_k(s['Gamma'], 3), p ** 3 * math.log(p))]


def heilbronn_e3_ratios(primes=HEILBRONN_PRIMES):
    """E_3(Gamma) / (p^3 log p) for each prime"""
    return [energy_k(heilbronn_subgroup(p), 3) / (p ** 3 * math.log(p)) for p in primes]


def _make_range(group, key, values):
    def make(rng):
        return set_instance(group, {key: list(values)})
    return make


@register('heilbronn_e3_growth', leq_tol(), 'E_3(Gamma) / (p^3 log p) stays within 4 times its value at p = 5',
          _make_range(make_group([25]), 'primes', HEILBRONN_PRIMES), AREA)
def check_heilbronn_e3_growth(instance):
    _, _, params = load(instance)
    ratios = heilbronn_e3_ratios([int(p) for p in params['primes']])
    logger.debug(f"Heilbronn E_3 ratios: {ratios}")
    return [(value, 4 * ratios[0]) for value in ratios]


@register('heilbronn_parseval', eq_tol(), 'sum |Gamma^|^2 = N |Gamma|', _heilbronn_instance(HEILBRONN_PRIMES), AREA)
def check_heilbronn_parseval(instance):
    group, s, _ = load(instance)
    gamma = s['Gamma']
    power = math.fsum(np.abs(dft(DenseFn.indicator(gamma)).values) ** 2)
    return [(power, float(group.order * len(gamma)))]


def _heilbronn_weight(gamma, p):
    """Indicator of xi * Gamma for the Fourier maximizer xi, and M^2"""
    xi, peak = heilbronn_fourier_max(p, gamma)
    return xi, peak, DenseFn.indicator(dilate(gamma, xi))


@register('heilbronn_chain', leq_tol(config.TOL_HEILBRONN),
          'M^12 <= E_3(Gamma) sum_{a,b} h(a) h(b) h(a - b) with h = |g^|^2, g = 1_{xi Gamma}',
          _heilbronn_instance((5, 7)), AREA)
def check_heilbronn_chain(instance):
    group, s, params = load(instance)
    gamma = s['Gamma']
    _, peak, g = _heilbronn_weight(gamma, int(params['p']))
    h = np.abs(dft(g).values) ** 2
    n = group.order
    points = np.arange(n)
    triple = h[:, None] * h[None, :] * h[(points[:, None] - points[None, :]) % n]
    return [(peak ** 6, float(energy_k(gamma, 3)) * math.fsum(triple.ravel()))]


@register('heilbronn_operator', eq_tol(config.TOL_SPECTRAL),
          'principal character eigenvalue of T^{g^}_Gamma is M^2 = |S(-xi) - 1|^2',
          _heilbronn_instance((5, 7, 11)), AREA)
def check_heilbronn_operator(instance):
    group, s, params = load(instance)
    gamma = s['Gamma']
    p = int(params['p'])
    xi, peak, g = _heilbronn_weight(gamma, p)
    op = build_op(gamma, dft(g))
    analytic = subgroup_eigensystem(gamma, op)
    principal = principal_character_eigenvalue(gamma, op)
    total = heilbronn_sum(p, group.neg_index(xi))
    # nonnegative operator: the smallest eigenvalue clamps to zero
    lowest = min(0.0, float(analytic.eigenvalues[-1]))
    return [(principal, peak), (abs(total - 1) ** 2, peak), (lowest, 0.0)]


@register('heilbronn_bound_ratio', report_only(), 'max over a != 0 mod p of |S(a)| against p^{5/6} log^{1/6} p',
          _heilbronn_instance(HEILBRONN_PRIMES), AREA)
def check_heilbronn_bound_ratio(instance):
    _, _, params = load(instance)
    p = int(params['p'])
    peak = max(abs(heilbronn_sum(p, a)) for a in range(1, p * p) if a % p)
    return [(peak, p ** (5 / 6) * math.log(p) ** (1 / 6))]


def _make_squares(sizes):
    def make(rng):
        n = int(rng.choice(sizes))
        A = convex_set('squares', n)
        return set_instance(A.host, {'n': n}, A=A.gset)
    return make


@register('convex_e3_ratio', report_only(), 'E_3(A) against |A|^3 log |A| for squares',
          _make_squares(CONVEX_SIZES), AREA)
def check_convex_e3_ratio(instance):
    _, s, params = load(instance)
    n = int(params['n'])
    return [(energy_k(s['A'], 3), n ** 3 * math.log(n))]


def convex_e3_ratios(sizes=CONVEX_SIZES):
    """E_3(A) / (n^3 log n) for the squares {1, 4, ..., n^2}"""
    return [energy_k(convex_set('squares', n).gset, 3) / (n ** 3 * math.log(n)) for n in sizes]


@register('convex_e3_growth', leq_tol(), 'E_3(A) / (|A|^3 log |A|) for squares grows by at most 2 times over the range',
          _make_range(make_group([CONVEX_SIZES[0]]), 'sizes', CONVEX_SIZES), AREA)
def check_convex_e3_growth(instance):
    _, _, params = load(instance)
    ratios = convex_e3_ratios([int(n) for n in params['sizes']])
    logger.debug(f"Convex E_3 ratios: {ratios}")
    return [(value, 2 * ratios[0]) for value in ratios]


def _make_convex_pair(rng):
    kind = str(rng.choice(['squares', 'cubes', 'random']))
    n = int(rng.integers(10, 31))
    A = convex_set(kind, n, seed=int(rng.integers(2 ** 31)))
    top = A.elements[-1]
    B = GSet.from_elements(A.host, rng.choice(top + 1, size=min(n, top + 1), replace=False))
    keep = rng.choice(A.elements, size=random_size(rng, (n + 1) // 2, n), replace=False)
    return set_instance(A.host, {'kind': kind, 'n': n}, A=A.gset, B=B, A_large=GSet.from_elements(A.host, keep))


@register('lcon_constant', report_only(), 'sup_j v_j j^{1/3} against (|A||B|^2)^{1/3} for the ranked A ∘ B',
          _make_convex_pair, AREA)
def check_lcon_constant(instance):
    _, s, _ = load(instance)
    A, B = s['A'], s['B']
    wraparound_guard([A], [B])
    profile = decay_profile(A, B)
    return [(profile.constant, 1.0)]


@register('convex_sumset_ratio', report_only(), "|A' + B| against |A| |B|^{1/2} for large A' ⊆ A",
          _make_convex_pair, AREA)
def check_convex_sumset_ratio(instance):
    _, s, _ = load(instance)
    A, B, large = s['A'], s['B'], s['A_large']
    wraparound_guard([large, B])
    return [(len(sumset(large, B)), len(A) * math.sqrt(len(B)))]


# largest k with k 2^k < sqrt(p)
EXPECTED_DEPTH = {7: 1, 11: 1, 13: 1, 101: 2}


def _make_residues(rng):
    p = int(rng.choice(sorted(EXPECTED_DEPTH)))
    return set_instance(make_group([p]), {'p': p})


@register('residue_basis_depth', eq_exact(), 'quadratic residues mod p form a basis of depth k for k 2^k < sqrt(p)',
          _make_residues, AREA)
def check_residue_basis_depth(instance):
    _, _, params = load(instance)
    p = int(params['p'])
    return [(residue_basis_depth(p), EXPECTED_DEPTH[p])]
