#!/usr/bin/env python3
"""
Higher Energies Toolkit - Energy Checks
Cauchy-Schwarz bounds, higher energies through restricted sets and the T_k moments
"""

import math
import logging

import config
from energy import (critical_parameters, energy2, energy_alpha, energy_k, energy_kl, power_sum, sigma_k, t_k,
                    t_k_fourier, t_k_function, tuple_energy)
from group import make_group
from harmonic import DenseFn, autocorrelation, correlate, dft, gen_convolution, kfold_convolve
from sets import GSet, cartesian, diagonal, diffset, restricted, sumset
from verifier.instances import load, random_sets, set_instance
from verifier.registry import eq_exact, eq_tol, leq_exact, leq_tol, register, report_only

logger = logging.getLogger('verifier.checks_energy')

AREA = 'energy'

SMALL = (16, 32)


def _restricted_family(A):
    """A_s for every s in A - A; the other A_s are empty"""
    return [restricted(A, s) for s in diffset(A, A)]


@register('E_kl_symmetry', eq_exact(), 'E_{k,l}(A) = E_{l,k}(A)', random_sets(('A',), 2, 12), AREA)
def check_E_kl_symmetry(instance):
    _, s, _ = load(instance)
    A = s['A']
    return [(energy_kl(A, k, l, use_symmetry=False), energy_kl(A, l, k, use_symmetry=False))
            for k, l in ((2, 3), (2, 4), (3, 4))]


@register('E_sumsets_CS', leq_exact(), '|A|^2 |B|^2 <= E(A, B) |A ± B|', random_sets(('A', 'B')), AREA)
def check_E_sumsets_CS(instance):
    _, s, _ = load(instance)
    A, B = s['A'], s['B']
    E = energy2(A, B)
    lhs = len(A) ** 2 * len(B) ** 2
    return [(lhs, E * len(sumset(A, B))), (lhs, E * len(diffset(A, B)))]


@register('E_CS', leq_exact(), 'E(A, B) <= min(|A|^2 |B|, |A| |B|^2) and E(A, B)^2 <= (|A||B|)^3',
          random_sets(('A', 'B')), AREA)
def check_E_CS(instance):
    _, s, _ = load(instance)
    A, B = s['A'], s['B']
    E = energy2(A, B)
    return [(E, len(A) ** 2 * len(B)), (E, len(B) ** 2 * len(A)), (E * E, (len(A) * len(B)) ** 3)]


@register('E_tuple', eq_exact(), 'E_{k+1}(A) = E(Δ_k(A), A^k)', random_sets(('A',), 2, 8, SMALL), AREA)
def check_E_tuple(instance):
    _, s, _ = load(instance)
    A = s['A']
    return [(energy_k(A, 2), tuple_energy(diagonal(A, 1), cartesian([A]))),
            (energy_k(A, 3), tuple_energy(diagonal(A, 2), cartesian([A, A])))]


@register('E3_E4_A_s', eq_exact(), 'sum_s E(A, A_s) = E_3(A) and sum_{s,t} E(A_s, A_t) = E_4(A)',
          random_sets(('A',), 2, 8, SMALL), AREA)
def check_E3_E4_A_s(instance):
    _, s, _ = load(instance)
    A = s['A']
    family = _restricted_family(A)
    e3 = sum(energy2(A, As) for As in family)
    e4 = sum(energy2(As, At) for As in family for At in family)
    return [(e3, energy_k(A, 3)), (e4, energy_k(A, 4))]


@register('gen_conv1', eq_exact(), 'sum_{s,t} sum_z (A_s ∘ A_t)(z) = |A|^4', random_sets(('A',), 2, 8, SMALL), AREA)
def check_gen_conv1(instance):
    _, s, _ = load(instance)
    A = s['A']
    family = _restricted_family(A)
    total = sum(gen_convolution([As, At]).total() for As in family for At in family)
    return [(total, len(A) ** 4)]


@register('gen_conv2', eq_exact(), 'sum_{s,t} E(A_s, A_t) through C_2 = E_4(A)', random_sets(('A',), 2, 8, SMALL),
          AREA)
def check_gen_conv2(instance):
    _, s, _ = load(instance)
    A = s['A']
    family = _restricted_family(A)
    total = sum(gen_convolution([As, At]).power_sum(2) for As in family for At in family)
    return [(total, energy_kl(A, 2, 4))]


@register('moments', eq_exact(), 'sum_{s,t} sum_z (A_s ∘ A_t)(z)^l = E_{l,4}(A), l = 1, 2, 3',
          random_sets(('A',), 2, 8, SMALL), AREA)
def check_moments(instance):
    _, s, _ = load(instance)
    A = s['A']
    family = _restricted_family(A)
    totals = {1: 0, 2: 0, 3: 0}
    for As in family:
        for At in family:
            tensor = gen_convolution([As, At])
            for l in totals:
                totals[l] += tensor.power_sum(l)
    return [(totals[l], energy_kl(A, l, 4)) for l in sorted(totals)]


@register('uncertainty', leq_tol(), '(E_{3/2}(A) / |A|)^4 <= E(A) T_2(A)', random_sets(('A',)), AREA)
def check_uncertainty(instance):
    _, s, _ = load(instance)
    A = s['A']
    return [((energy_alpha(A, 1.5) / len(A)) ** 4, float(energy_k(A, 2) * t_k(A, 2)))]


@register('ET_1', eq_tol(config.TOL_PATH), 'sum |(conj(A^) ∘ A^)|^{2k} = N^{2k+1} T_k(A)', random_sets(('A',)), AREA)
def check_ET_1(instance):
    group, s, _ = load(instance)
    A = s['A']
    k = 2
    Ah = dft(DenseFn.indicator(A))
    lhs = math.fsum(abs(v) ** (2 * k) for v in correlate(Ah.conj(), Ah).values)
    return [(lhs, float(group.order ** (2 * k + 1) * t_k(A, k)))]


@register('ET_2', eq_tol(config.TOL_PATH), 'T_k(|A^|^2) = N^{2k-1} E_{2k}(A)', random_sets(('A',)), AREA)
def check_ET_2(instance):
    group, s, _ = load(instance)
    A = s['A']
    k = 2
    lhs = t_k_function(dft(DenseFn.indicator(A)).abs2(), k)
    return [(lhs, float(group.order ** (2 * k - 1) * energy_k(A, 2 * k)))]


@register('E_k_sigma_k', leq_exact(), '|A|^4 <= E(A) σ_2(A - A) and |A|^8 <= E_4(A) T_2(A + A)',
          random_sets(('A',)), AREA)
def check_E_k_sigma_k(instance):
    _, s, _ = load(instance)
    A = s['A']
    return [(len(A) ** 4, energy_k(A, 2) * sigma_k(diffset(A, A), 2)),
            (len(A) ** 8, energy_k(A, 4) * t_k(sumset(A, A), 2))]


@register('E_k_E_k', leq_exact(), '|A|^{2k+4} <= E_{k+2}(A) E_k(A ± A)', random_sets(('A',)), AREA)
def check_E_k_E_k(instance):
    _, s, _ = load(instance)
    A = s['A']
    pairs = []
    for X in (diffset(A, A), sumset(A, A)):
        for k in (1, 2):
            pairs.append((len(A) ** (2 * k + 4), energy_k(A, k + 2) * energy_k(X, k)))
    return pairs


@register('energy_lower_bound', leq_exact(), '2|A|^2 - |A| <= E(A), with equality iff A is a Sidon set',
          random_sets(('A',), 2, 12), AREA)
def check_energy_lower_bound(instance):
    _, s, _ = load(instance)
    A = s['A']
    size = len(A)
    E = energy2(A, A)
    r = autocorrelation(A).values.copy()
    r[0] = 0
    sidon = int(r.max(initial=0)) <= 1
    return [(size ** 2, E), (2 * size ** 2 - size, E), (int((E == 2 * size ** 2 - size) != sidon), 0)]


@register('T_k_paths', eq_tol(config.TOL_PATH), 'T_k(A) by solution counting = (1/N) sum |A^|^{2k}',
          random_sets(('A',)), AREA)
def check_T_k_paths(instance):
    _, s, _ = load(instance)
    A = s['A']
    pairs = []
    for k in (2, 3):
        exact = power_sum(kfold_convolve(DenseFn.indicator(A), k).values, 2)
        pairs.append((float(exact), t_k_fourier(A, k)))
    return pairs


def _make_progression(rng):
    n = int(rng.integers(1, 51))
    # order >= 4n keeps every difference of {0..n-1} distinct
    group = make_group([4 * n + 4])
    return set_instance(group, {'n': n}, A=GSet.from_elements(group, range(n)))


@register('ap_energy', eq_exact(), 'E({0, ..., n-1}) = (2n^3 + n) / 3', _make_progression, AREA)
def check_ap_energy(instance):
    _, s, params = load(instance)
    n = int(params['n'])
    return [(energy2(s['A'], s['A']), (2 * n ** 3 + n) // 3)]


@register('critical_parameters', report_only(), 'E(A) = |A|^3 / K, E_3(A) = M |A|^4 / K^2',
          random_sets(('A',)), AREA)
def check_critical_parameters(instance):
    _, s, _ = load(instance)
    K, M = critical_parameters(s['A'])
    return [(K, M)]
