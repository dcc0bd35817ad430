#!/usr/bin/env python3
"""
Higher Energies Toolkit - Energies
Additive and multiplicative energy, higher energies E_{k,l}, E_alpha, T_k and sigma_k
"""

import math
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import isprime

import config
from errors import ModeError, PathDisagreementError, ensure_cap
from harmonic import DenseFn, correlate, convolve, kfold_convolve, gen_convolution, autocorrelation, dft
from sets import pack_tuples

logger = logging.getLogger('energy')


@dataclass(frozen=True)
class EnergyValue:
    """A computed energy together with what it measures"""

    kind: str
    value: object
    params: tuple = ()

    def to_json(self):
        kind = self.kind if not self.params else f"{self.kind}({','.join(str(p) for p in self.params)})"
        value = self.value if isinstance(self.value, (int, float)) else float(self.value)
        return {'kind': kind, 'value': value}


def power_sum(values, power):
    """Exact sum of values**power for a nonnegative integer array"""
    values = np.asarray(values)
    if values.size == 0:
        return 0
    if values.dtype != object:
        top = int(np.max(np.abs(values)))
        if top ** power * values.size < 2 ** 62:
            return int(np.sum(values.astype(np.int64) ** power))
    return sum(int(v) ** power for v in values)


def energy2(A, B):
    """E(A, B) = sum_x (A ∘ B)(x)^2"""
    r = correlate(DenseFn.indicator(A), DenseFn.indicator(B))
    return power_sum(r.values, 2)


def is_prime_field(group):
    return group.is_cyclic and isprime(group.order)


def mult_energy(A, B):
    """E^x(A, B): solutions of a1 b1 = a2 b2 in Z/p"""
    A.group.require_same(B.group)
    if not is_prime_field(A.group):
        raise ModeError(f"Multiplicative energy needs a prime field, got {list(A.group.factors)}")
    p = A.group.order
    products = np.multiply.outer(A.elements, B.elements) % p
    counts = np.bincount(products.ravel(), minlength=p)
    return power_sum(counts, 2)


def energy_k(A, k):
    """E_k(A) = sum_x (A ∘ A)(x)^k"""
    return power_sum(autocorrelation(A).values, k)


def energy_kl(A, k, l, use_symmetry=True, cap=None):
    """E_{k,l}(A) = sum over tuples of C_k(A)^l

    With use_symmetry the tensor of min(k, l) is materialized and raised to max(k, l).
    Degenerate orders follow the sum itself: E_{k,1}(A) = |A|^k, and E_{1,l}(A) = |A|^l
    by symmetry.
    """
    if min(k, l) < 1:
        raise ValueError("E_{k,l} needs k, l >= 1")
    size = len(A)
    if k == 1:
        return size ** l
    if l == 1:
        return size ** k
    if use_symmetry:
        k, l = min(k, l), max(k, l)
    ensure_cap(size ** k, config.TUPLE_CAP if cap is None else cap, "E_{k,l} tensor")
    if k == 2:
        return energy_k(A, l)
    tensor = gen_convolution([A] * k)
    return tensor.power_sum(l)


def energy_sets(sets):
    """E_k(A_1, ..., A_k) = sum over tuples of C_k(A_1, ..., A_k)^2"""
    return gen_convolution(list(sets)).power_sum(2)


def energy_alpha(A, alpha):
    """E_alpha(A) = sum over the support of (A ∘ A) of (A ∘ A)(x)^alpha"""
    if alpha <= 0:
        raise ValueError("E_alpha needs alpha > 0")
    r = autocorrelation(A).values
    r = r[r > 0]
    if float(alpha).is_integer():
        return power_sum(r, int(alpha))
    return math.fsum(float(v) ** float(alpha) for v in r)


def t_k_fourier(A, k):
    """(1/N) sum_xi |A^(xi)|^(2k)"""
    spectrum = np.abs(dft(DenseFn.indicator(A)).values) ** (2 * k)
    return math.fsum(spectrum) / A.group.order


def t_k(A, k):
    """T_k(A) by solution counting, cross-checked against the Fourier moment"""
    if k < 1:
        raise ValueError("T_k needs k >= 1")
    r = kfold_convolve(DenseFn.indicator(A), k)
    exact = power_sum(r.values, 2)
    fourier = t_k_fourier(A, k)
    if abs(fourier - exact) > config.TOL_PATH * max(1, exact):
        logger.error(f"T_{k} paths disagree: {exact} vs {fourier}")
        raise PathDisagreementError(f"T_{k}: combinatorial {exact}, Fourier {fourier}")
    return exact


def t_k_function(f, k):
    """T_k(f) = sum_x |(f *_k f)(x)|^2"""
    r = kfold_convolve(f, k)
    if r.is_integer:
        return power_sum(r.values, 2)
    return math.fsum(np.abs(r.values) ** 2)


def sigma_k(A, k):
    """sigma_k(A) = (A *_k A)(0)"""
    if k < 1:
        raise ValueError("sigma_k needs k >= 1")
    return int(kfold_convolve(DenseFn.indicator(A), k).values[0])


def tuple_energy(X, Y, cap=None):
    """E(X, Y) for X, Y ⊆ G^k: pairs with equal differences y - x"""
    X.group.require_same(Y.group)
    if X.arity != Y.arity:
        raise ValueError("Tuple sets of different arity")
    ensure_cap(len(X) * len(Y), config.TUPLE_CAP if cap is None else cap, "tuple energy")
    group = X.group
    xs, ys = X.tuples(), Y.tuples()
    diffs = group.sub_index(ys[None, :, :], xs[:, None, :]).reshape(-1, X.arity)
    _, counts = np.unique(pack_tuples(group, diffs), return_counts=True)
    return power_sum(counts, 2)


def function_energy(f, g):
    """E(f, g) = sum_x (f ∘ f)(x) (g ∘ g)(x) for real-valued functions"""
    ff = correlate(f, f)
    gg = correlate(g, g)
    if ff.is_integer and gg.is_integer:
        return sum(int(a) * int(b) for a, b in zip(ff.values, gg.values))
    return float(np.sum(ff.as_complex().real * gg.as_complex().real))


def critical_parameters(A):
    """K and M with E(A) = |A|^3 / K and E_3(A) = M |A|^4 / K^2"""
    size = len(A)
    E = energy2(A, A)
    K = Fraction(size ** 3, E)
    M = Fraction(energy_k(A, 3)) * K * K / size ** 4
    return K, M


def convolution_sum(A, B):
    """A * B for sets, as an integer DenseFn"""
    return convolve(DenseFn.indicator(A), DenseFn.indicator(B))
