#!/usr/bin/env python3
"""
Higher Energies Toolkit - Constructions
Prime fields, quadratic residues, multiplicative and Heilbronn subgroups,
Heilbronn sums, convex integer sets and decay profiles
"""

import math
import logging
from dataclasses import dataclass, field

import numpy as np
from sympy import isprime, primefactors

import config
from errors import InvarianceError, VerificationError, ensure_cap
from group import GroupSpec, make_group
from harmonic import DenseFn, correlate, dft
from sets import GSet, basis_depth_check, wraparound_guard

logger = logging.getLogger('constructions')

# p^4 work in the energy checks downstream
MAX_HEILBRONN_PRIME = 97
MIN_RESIDUE_PRIME = 7


def multiplicative_order(x, n):
    """Least e >= 1 with x^e = 1 mod n"""
    if math.gcd(int(x), n) != 1:
        raise ValueError(f"{x} is not a unit mod {n}")
    value, e = int(x) % n, 1
    while value != 1 % n:
        value = value * int(x) % n
        e += 1
    return e


@dataclass(frozen=True)
class PrimeField:
    """Z/p with its multiplication and a primitive root"""

    p: int
    generator: int = field(init=False)

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        ensure_cap(self.p, config.CAP_N, "prime field order")
        object.__setattr__(self, 'generator', self._primitive_root())

    def _primitive_root(self):
        if self.p == 2:
            return 1
        prime_divisors = primefactors(self.p - 1)
        for g in range(2, self.p):
            if all(pow(g, (self.p - 1) // q, self.p) != 1 for q in prime_divisors):
                logger.debug(f"Primitive root mod {self.p}: {g}")
                return g
        raise VerificationError(f"No primitive root found mod {self.p}")

    @property
    def group(self):
        return make_group([self.p])

    def multiply(self, x, y):
        return int(x) * int(y) % self.p

    def inverse(self, x):
        return pow(int(x), -1, self.p)

    def order_of(self, x):
        return multiplicative_order(x, self.p)


def quadratic_residues(p):
    """{x^2 mod p : 1 <= x <= p - 1}"""
    if p == 2 or not isprime(p):
        raise ValueError(f"Quadratic residues need an odd prime, got {p}")
    squares = (np.arange(1, p, dtype=np.int64) ** 2) % p
    return GSet.from_elements(make_group([p]), squares)


def residue_basis_depth(p, cap=None):
    """Largest k with k 2^k < sqrt(p), confirmed by an exhaustive basis-depth check

    Supported from p = 7 on. For p = 5 the inequality allows k = 1, yet R - R misses 1 and 4.
    """
    if p < MIN_RESIDUE_PRIME:
        raise ValueError(f"Residue basis depth needs p >= {MIN_RESIDUE_PRIME}, got {p}")
    R = quadratic_residues(p)
    k = 0
    while (k + 1) * 2 ** (k + 1) < math.sqrt(p):
        k += 1
    if k < 1:
        raise ValueError(f"p = {p} is too small for a depth-1 guarantee")
    if not basis_depth_check(R, k, cap):
        logger.error(f"Quadratic residues mod {p} fail depth {k}")
        raise VerificationError(f"Quadratic residues mod {p} are not a basis of depth {k}")
    return k


def multiplicative_generator(gamma):
    """Smallest element generating the cyclic multiplicative group gamma ⊆ (Z/n)^x"""
    n = gamma.group.order
    t = len(gamma)
    for x in gamma.elements:
        if math.gcd(int(x), n) == 1 and multiplicative_order(int(x), n) == t:
            return int(x)
    raise InvarianceError(f"Set of size {t} is not a cyclic multiplicative subgroup mod {n}")


@dataclass(frozen=True)
class MultSubgroup:
    """The order-t subgroup of (Z/p)^x with its character table"""

    field: PrimeField
    order: int
    powers: tuple
    gset: GSet
    table: np.ndarray = field(repr=False, compare=False)


def mult_subgroup(p, t):
    """Gamma = {g^(n l)} for n = (p - 1)/t, with columns e(alpha l / t)/sqrt(t)"""
    prime_field = PrimeField(p)
    if t < 1 or (p - 1) % t:
        raise ValueError(f"{t} does not divide p - 1 = {p - 1}")
    step = pow(prime_field.generator, (p - 1) // t, p)
    powers = tuple(pow(step, l, p) for l in range(t))
    gset = GSet.from_elements(prime_field.group, powers)
    phase = np.outer(np.arange(t), np.arange(t)) % t / t
    table = np.exp(2j * np.pi * phase) / np.sqrt(t)
    return MultSubgroup(prime_field, t, powers, gset, table)


def heilbronn_subgroup(p):
    """Gamma = {m^p mod p^2 : 1 <= m <= p - 1} in Z/p^2"""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p > MAX_HEILBRONN_PRIME:
        raise ValueError(f"Heilbronn subgroup needs p <= {MAX_HEILBRONN_PRIME}, got {p}")
    modulus = p * p
    group = make_group([modulus])
    members = sorted({pow(m, p, modulus) for m in range(1, p)})
    gamma = GSet.from_elements(group, members)
    if len(gamma) != p - 1:
        raise VerificationError(f"Heilbronn subgroup mod {modulus} has size {len(gamma)}")
    for x in members:
        for y in members:
            if x * y % modulus not in gamma:
                raise InvarianceError(f"Heilbronn set mod {modulus} is not multiplicatively closed")
    return gamma


def heilbronn_sum(p, a):
    """S(a) = sum_{n=1}^{p} e(a n^p / p^2)"""
    modulus = p * p
    residues = np.asarray([pow(n, p, modulus) for n in range(1, p + 1)], dtype=np.int64)
    phase = (int(a) % modulus) * residues % modulus / modulus
    return complex(np.sum(np.exp(2j * np.pi * phase)))


def heilbronn_fourier_max(p, gamma=None):
    """The maximizer xi != 0 of |Gamma^(xi)|^2 and that maximum M^2"""
    gamma = gamma if gamma is not None else heilbronn_subgroup(p)
    power = np.abs(dft(DenseFn.indicator(gamma)).values) ** 2
    xi = 1 + int(np.argmax(power[1:]))
    return xi, float(power[xi])


def dilate(gamma, xi):
    """xi * Gamma"""
    return GSet.from_elements(gamma.group, gamma.group.scale_index(gamma.elements, xi))


@dataclass(frozen=True)
class ConvexIntSet:
    """Integers with strictly increasing gaps, embedded in Z/N with N >= 4 a_n"""

    elements: tuple
    kind: str
    host: GroupSpec

    def __post_init__(self):
        values = self.elements
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("Convex set must be strictly increasing")
        gaps = [b - a for a, b in zip(values, values[1:])]
        if any(h <= g for g, h in zip(gaps, gaps[1:])):
            raise ValueError("Convex set must have strictly increasing gaps")
        if values and (values[0] < 0 or self.host.order < 4 * values[-1]):
            raise ValueError(f"Host Z/{self.host.order} is too small for max element {values[-1]}")

    @property
    def gset(self):
        return GSet.from_elements(self.host, self.elements)

    @property
    def gaps(self):
        return tuple(b - a for a, b in zip(self.elements, self.elements[1:]))

    def guard(self, n=1, m=1):
        """Assert nA - mA fits in the host without wraparound"""
        wraparound_guard([self.gset] * n, [self.gset] * m)

    def to_json(self):
        return {'group': self.host.to_json(), 'set': list(self.elements), 'kind': self.kind}


def convex_set(kind, n, seed=None):
    """squares, cubes or a random convex set of size n"""
    if n < 3:
        raise ValueError("Convex sets need n >= 3")
    if kind == 'squares':
        values = [i * i for i in range(1, n + 1)]
    elif kind == 'cubes':
        values = [i ** 3 for i in range(1, n + 1)]
    elif kind == 'random':
        rng = np.random.default_rng(seed)
        gaps = np.sort(rng.choice(np.arange(1, 4 * n + 1), size=n - 1, replace=False))
        start = int(rng.integers(0, n + 1))
        values = [start + int(v) for v in np.concatenate([[0], np.cumsum(gaps)])]
    else:
        raise ValueError(f"Unknown convex kind: {kind}")
    host = make_group([max(4 * values[-1], 2)])
    return ConvexIntSet(tuple(values), kind, host)


@dataclass
class DecayProfile:
    """Positive values of A ∘ B sorted descending, with ranks from 1"""

    ranks: list
    constant: float


def decay_profile(A, B):
    """Ranked values of A ∘ B and sup_j value_j j^(1/3) / (|A||B|^2)^(1/3)"""
    if len(A) == 0 or len(B) == 0:
        raise ValueError("Decay profile needs nonempty sets")
    r = correlate(DenseFn.indicator(A), DenseFn.indicator(B)).values
    values = np.sort(r[r > 0])[::-1]
    ranks = [(j + 1, int(v)) for j, v in enumerate(values)]
    scale = (len(A) * len(B) ** 2) ** (1 / 3)
    constant = max(v * j ** (1 / 3) for j, v in ranks) / scale
    return DecayProfile(ranks, float(constant))
