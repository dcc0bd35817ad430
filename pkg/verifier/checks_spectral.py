#!/usr/bin/env python3
"""
Higher Energies Toolkit - Spectral Checks
Trace identities, eigenvalue bounds and the subgroup eigensystem for operators T^g_A
"""

import math
import logging

import numpy as np

import config
from constructions import mult_subgroup
from energy import energy2, energy_alpha, energy_k
from harmonic import DenseFn, autocorrelation, lp_norm
from sets import GSet, diffset, sumset
from spectral import (SUM, build_op, connected_lower_bound, connectedness, matrix_power_weight,
                      principal_character_eigenvalue, prune_half, quadratic_form, spectrum, subgroup_eigensystem,
                      triangle_spectral_form, triangle_sum, triangle_sum_via_tensor)
from verifier.instances import (add_entries, load, load_all, random_group, random_sets, random_size, random_subset,
                                set_instance)
from verifier.registry import eq_tol, leq_exact, leq_tol, register

logger = logging.getLogger('verifier.checks_spectral')

AREA = 'spectral'

# primes with many divisors of p - 1
SUBGROUP_PRIMES = (13, 17, 29, 31, 37, 41, 61, 73, 97, 101)


def _hermitian_weight(rng, group):
    """g = h + conj(h(-x)) for a random complex h"""
    h = DenseFn(group, rng.normal(size=group.order) + 1j * rng.normal(size=group.order))
    return h + h.reflect().conj()


def _symmetric_weight(rng, group, low=-3, high=3):
    """Real integer g with g(-x) = g(x)"""
    h = DenseFn(group, rng.integers(low, high + 1, size=group.order))
    return h + h.reflect()


def _weighted_sets(names, weights, symmetric=False, low=4, high=16):
    def make(rng):
        group = random_group(rng)
        sets = {name: random_subset(rng, group, random_size(rng, low, high)) for name in names}
        build = _symmetric_weight if symmetric else _hermitian_weight
        functions = {name: build(rng, group) for name in weights}
        return add_entries(set_instance(group, **sets), functions=functions)
    return make


@register('trace_1', eq_tol(config.TOL_SPECTRAL), 'sum mu_j = |A| g(0)', _weighted_sets(('A',), ('g',)), AREA)
def check_trace_1(instance):
    _, s, _, fn, _ = load_all(instance)
    A, g = s['A'], fn['g']
    spec = spectrum(build_op(A, g))
    return [(math.fsum(spec.eigenvalues), float(np.real(g.values[0])) * len(A))]


@register('trace_2', eq_tol(config.TOL_SPECTRAL), 'sum mu_j^2 = sum_z |g(z)|^2 (A ∘ A)(z)',
          _weighted_sets(('A',), ('g',)), AREA)
def check_trace_2(instance):
    _, s, _, fn, _ = load_all(instance)
    A, g = s['A'], fn['g']
    spec = spectrum(build_op(A, g))
    r = autocorrelation(A).values
    return [(math.fsum(spec.eigenvalues ** 2), math.fsum(np.abs(g.values) ** 2 * r))]


@register('main_example', leq_tol(config.TOL_SPECTRAL), 'E(A)/|A| <= mu_1 and sum mu_j^2 = E_3(A) for g = A ∘ A',
          random_sets(('A',)), AREA)
def check_main_example(instance):
    _, s, _ = load(instance)
    A = s['A']
    spec = spectrum(build_op(A, autocorrelation(A)))
    squares = math.fsum(spec.eigenvalues ** 2)
    E3 = float(energy_k(A, 3))
    return [(energy2(A, A) / len(A), spec.principal), (squares, E3), (E3, squares)]


@register('triangles_g', eq_tol(config.TOL_TRIANGLE),
          'sum over triangles of g1 g1 g2 = sum mu_j^2 <T^{g2} f_j, f_j>, and sum mu_j^3 for g2 = g1',
          _weighted_sets(('A',), ('g1', 'g2'), symmetric=True), AREA)
def check_triangles_g(instance):
    _, s, _, fn, _ = load_all(instance)
    A, g1, g2 = s['A'], fn['g1'], fn['g2']
    direct = triangle_sum(A, g1, g2)
    spec = spectrum(build_op(A, g1))
    form = triangle_spectral_form(spec, build_op(A, g2)).real
    cubic = triangle_sum(A, g1, g1)
    return [(direct, triangle_sum_via_tensor(A, g1, g2)),
            (float(direct), form),
            (float(cubic), math.fsum(spec.eigenvalues ** 3))]


@register('eigenvalues_D_S', eq_tol(config.TOL_SPECTRAL),
          'T_A with weight A - A (and the sum operator with A + A) has spectrum {|A|, 0, ..., 0}',
          random_sets(('A',)), AREA)
def check_eigenvalues_D_S(instance):
    _, s, _ = load(instance)
    A = s['A']
    expected = [float(len(A))] + [0.0] * (len(A) - 1)
    difference = spectrum(build_op(A, DenseFn.indicator(diffset(A, A))))
    total = spectrum(build_op(A, DenseFn.indicator(sumset(A, A)), SUM))
    return [(float(mu), e) for mu, e in zip(difference.eigenvalues, expected)] + \
        [(float(mu), e) for mu, e in zip(total.eigenvalues, expected)]


def _make_test_functions(rng):
    group = random_group(rng)
    A = random_subset(rng, group, random_size(rng, 4, 16))
    return set_instance(group, {'psi_seed': int(rng.integers(2 ** 31)), 'psi_count': 100}, A=A)


@register('three_halves_energy', leq_tol(),
          '|A|^2 (sum psi (A ∘ A))^2 <= E_3(A) sum |psi|^2 (D ∘ D) for D = A ± A',
          _make_test_functions, AREA)
def check_three_halves_energy(instance):
    _, s, params = load(instance)
    A = s['A']
    r = autocorrelation(A).values.astype(np.float64)
    E3 = energy_k(A, 3)
    bounds = [autocorrelation(X).values.astype(np.float64) for X in (diffset(A, A), sumset(A, A))]
    rng = np.random.default_rng(int(params['psi_seed']))
    pairs = []
    for _ in range(int(params['psi_count'])):
        psi = rng.normal(size=r.size)
        lhs = len(A) ** 2 * float(np.dot(psi, r)) ** 2
        for weight in bounds:
            pairs.append((lhs, E3 * float(np.dot(psi ** 2, weight))))
    return pairs


@register('li_inequality', leq_tol(), '|A|^2 E_{3/2}(A)^2 <= E_3(A) E(A, A ± A)', random_sets(('A',)), AREA)
def check_li_inequality(instance):
    _, s, _ = load(instance)
    A = s['A']
    lhs = len(A) ** 2 * energy_alpha(A, 1.5) ** 2
    E3 = energy_k(A, 3)
    return [(lhs, float(E3 * energy2(A, X))) for X in (diffset(A, A), sumset(A, A))]


@register('ss2_corollary', leq_exact(), '|A|^6 <= E_3(A) sum over x in A - A of (D ∘ D)(x), D = A ± A',
          random_sets(('A',)), AREA)
def check_ss2_corollary(instance):
    _, s, _ = load(instance)
    A = s['A']
    D = diffset(A, A)
    E3 = energy_k(A, 3)
    pairs = []
    for X in (D, sumset(A, A)):
        weight = autocorrelation(X).values
        pairs.append((len(A) ** 6, E3 * int(weight[D.elements].sum())))
    return pairs


def _make_positive_weight(rng):
    group = random_group(rng)
    A = random_subset(rng, group, random_size(rng, 4, 16))
    return add_entries(set_instance(group, A=A), functions={'g': _symmetric_weight(rng, group, 1, 3)})


@register('action_g', leq_tol(config.TOL_SPECTRAL),
          'mu_1^3 / (||g||_2^2 ||g||_inf) <= <T^{A ∘ A}_A f_1, f_1> for positive g',
          _make_positive_weight, AREA)
def check_action_g(instance):
    _, s, _, fn, _ = load_all(instance)
    A, g = s['A'], fn['g']
    spec = spectrum(build_op(A, g))
    scale = lp_norm(g, 2) ** 2 * lp_norm(g, math.inf)
    action = quadratic_form(build_op(A, autocorrelation(A)), spec.main_function()).real
    return [(spec.principal ** 3 / scale, action)]


@register('prune_half', leq_tol(config.TOL_SPECTRAL), 'mu_1(T^{A ∘ A}_{A\'}) <= 2E(A)/|A| with |A\'| >= |A|/2',
          random_sets(('A',)), AREA)
def check_prune_half(instance):
    _, s, _ = load(instance)
    A = s['A']
    pruned = prune_half(A)
    mu = spectrum(build_op(pruned, autocorrelation(A))).principal
    return [(mu, 2 * energy2(A, A) / len(A)), (len(A), 2 * len(pruned))]


@register('connectedness', leq_tol(), '2^-5 gamma |A|^{1 - s/2} E(A)^{s/2} <= E_s(A) for s in [1, 2]',
          random_sets(('A',), 3, 10, (16, 32)), AREA)
def check_connectedness(instance):
    _, s, _ = load(instance)
    A = s['A']
    gamma = connectedness(A)
    return [(connected_lower_bound(A, power, gamma), float(energy_alpha(A, power))) for power in (1, 1.5, 2)]


@register('rectangular_norm', eq_tol(config.TOL_SPECTRAL), 'sum mu_j^2 of T^{(A ∘ A)^k}_A = E_{2k+1}(A)',
          random_sets(('A',)), AREA)
def check_rectangular_norm(instance):
    _, s, _ = load(instance)
    A = s['A']
    pairs = []
    for k in (1, 2):
        spec = spectrum(build_op(A, matrix_power_weight(A, k)))
        pairs.append((math.fsum(spec.eigenvalues ** 2), float(energy_k(A, 2 * k + 1))))
    return pairs


def _make_subgroup(rng):
    p = int(rng.choice(SUBGROUP_PRIMES))
    divisors = [t for t in range(2, min(p - 1, 20) + 1) if (p - 1) % t == 0]
    t = int(rng.choice(divisors))
    sub = mult_subgroup(p, t)
    members = rng.choice(sub.gset.elements, size=int(rng.integers(1, t + 1)), replace=False)
    A = GSet.from_elements(sub.gset.group, members)
    return set_instance(sub.gset.group, {'p': p, 't': t}, Gamma=sub.gset, A=A)


@register('subgroup_eigenvalues', eq_tol(config.TOL_SPECTRAL),
          'characters of Gamma diagonalize T^{Gamma ∘ Gamma}_Gamma and mu_1 = E(Gamma)/|Gamma|',
          _make_subgroup, AREA)
def check_subgroup_eigenvalues(instance):
    _, s, _ = load(instance)
    gamma = s['Gamma']
    op = build_op(gamma, autocorrelation(gamma))
    analytic = subgroup_eigensystem(gamma, op)
    generic = spectrum(op)
    pairs = [(float(a), float(b)) for a, b in zip(analytic.eigenvalues, generic.eigenvalues)]
    mean = energy2(gamma, gamma) / len(gamma)
    pairs.append((analytic.principal, mean))
    pairs.append((principal_character_eigenvalue(gamma, op), mean))
    return pairs


@register('subgroup_energy_ratio', leq_exact(), 'E(Gamma) |A|^2 <= E(A, Gamma) |Gamma|^2 for A ⊆ Gamma',
          _make_subgroup, AREA)
def check_subgroup_energy_ratio(instance):
    _, s, _ = load(instance)
    gamma, A = s['Gamma'], s['A']
    return [(energy2(gamma, gamma) * len(A) ** 2, energy2(A, gamma) * len(gamma) ** 2)]
