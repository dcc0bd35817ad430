#!/usr/bin/env python3
"""
Higher Energies Toolkit - Group Core
Finite abelian groups Z/n1 x ... x Z/nd, mixed-radix element packing and characters
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

import config
from errors import GroupMismatchError, CapExceededError, ensure_cap

logger = logging.getLogger('group')


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given by its cyclic factors, first factor fastest-varying"""

    factors: tuple
    order: int = field(init=False, compare=False)
    weights: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if not factors:
            raise ValueError("A group needs at least one cyclic factor")
        for n in factors:
            if n < 2:
                raise ValueError(f"Cyclic factor {n} is smaller than 2")
        order = 1
        weights = []
        for n in factors:
            weights.append(order)
            order *= n
        if order > config.PACKING_LIMIT:
            raise CapExceededError(f"Group order {order} cannot be packed into 64-bit indices")
        object.__setattr__(self, 'factors', factors)
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'weights', tuple(weights))

    @property
    def rank(self):
        return len(self.factors)

    @property
    def is_cyclic(self):
        return len(self.factors) == 1

    @property
    def shape(self):
        """Shape of the value array when viewed as a d-dimensional grid"""
        return self.factors

    def unpack(self, index):
        """Mixed-radix digits of a single element index"""
        index = int(index)
        if not 0 <= index < self.order:
            raise ValueError(f"Index {index} outside [0, {self.order})")
        return tuple((index // w) % n for w, n in zip(self.weights, self.factors))

    def pack(self, digits):
        """Element index of a digit tuple, each digit reduced mod its factor"""
        if len(digits) != self.rank:
            raise ValueError(f"Expected {self.rank} digits, got {len(digits)}")
        return sum((int(x) % n) * w for x, n, w in zip(digits, self.factors, self.weights))

    def digits(self, indices):
        """Vectorized unpack: array of indices -> array of shape (..., d)"""
        indices = np.asarray(indices, dtype=np.int64)
        weights = np.asarray(self.weights, dtype=np.int64)
        factors = np.asarray(self.factors, dtype=np.int64)
        return (indices[..., None] // weights) % factors

    def pack_digits(self, digits):
        """Vectorized pack: array of shape (..., d) -> indices"""
        digits = np.asarray(digits, dtype=np.int64)
        factors = np.asarray(self.factors, dtype=np.int64)
        weights = np.asarray(self.weights, dtype=np.int64)
        return ((digits % factors) * weights).sum(axis=-1)

    def add_index(self, a, b):
        """Sum of element indices, broadcasting over arrays"""
        if self.is_cyclic:
            return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.order
        return self.pack_digits(self.digits(a) + self.digits(b))

    def neg_index(self, a):
        """Negation of element indices"""
        if self.is_cyclic:
            return (-np.asarray(a, dtype=np.int64)) % self.order
        return self.pack_digits(-self.digits(a))

    def sub_index(self, a, b):
        """Difference a - b of element indices"""
        if self.is_cyclic:
            return (np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)) % self.order
        return self.pack_digits(self.digits(a) - self.digits(b))

    def scale_index(self, a, c):
        """Scalar multiple c*a of element indices"""
        if self.is_cyclic:
            return (np.asarray(a, dtype=np.int64) * int(c)) % self.order
        return self.pack_digits(self.digits(a) * int(c))

    def power(self, m):
        """The group G^m, whose packed elements are packed m-tuples of G"""
        if m < 1:
            raise ValueError("Power must be at least 1")
        return GroupSpec(self.factors * m)

    def elem(self, value):
        """Build an Elem from an index or a digit tuple"""
        if isinstance(value, Elem):
            self.require_same(value.group)
            return value
        if isinstance(value, (tuple, list)):
            return Elem(self, self.pack(value))
        index = int(value)
        if not 0 <= index < self.order:
            raise ValueError(f"Index {index} outside [0, {self.order})")
        return Elem(self, index)

    def zero(self):
        return Elem(self, 0)

    def require_same(self, other):
        """Raise GroupMismatchError unless other is this group"""
        if other != self:
            raise GroupMismatchError(f"Group {list(other.factors)} does not match {list(self.factors)}")

    def as_grid(self, values):
        """Reshape a length-N value array to the factor grid"""
        return np.asarray(values).reshape(self.factors, order='F')

    def from_grid(self, grid):
        return np.asarray(grid).reshape(self.order, order='F')

    def to_json(self):
        return list(self.factors)


def make_group(factors, cap=None):
    """Create a GroupSpec, enforcing the desk-scale order cap"""
    group = GroupSpec(tuple(factors))
    ensure_cap(group.order, config.CAP_N if cap is None else cap, "group order")
    logger.debug(f"Created group {list(group.factors)} of order {group.order}")
    return group


@dataclass(frozen=True)
class Elem:
    """A group element stored as its canonical mixed-radix index"""

    group: GroupSpec
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.group.order:
            raise ValueError(f"Index {self.index} outside [0, {self.group.order})")

    @property
    def digits(self):
        return self.group.unpack(self.index)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return subtract(self, other)

    def __neg__(self):
        return negate(self)

    def __mul__(self, scalar):
        return scale(self, scalar)

    __rmul__ = __mul__

    def __int__(self):
        return self.index


def add(x, y):
    x.group.require_same(y.group)
    return Elem(x.group, int(x.group.add_index(x.index, y.index)))


def negate(x):
    return Elem(x.group, int(x.group.neg_index(x.index)))


def subtract(x, y):
    return add(x, negate(y))


def scale(x, c):
    return Elem(x.group, int(x.group.scale_index(x.index, c)))


@dataclass(frozen=True)
class Character:
    """Character x -> e(xi . x), indexed by an element of the same group"""

    xi: Elem

    @property
    def group(self):
        return self.xi.group

    def phase(self, x):
        """Exact phase sum_i xi_i x_i / n_i reduced mod 1"""
        self.group.require_same(x.group)
        total = sum(Fraction((a * b) % n, n) for a, b, n in zip(self.xi.digits, x.digits, self.group.factors))
        return total % 1

    def __call__(self, x):
        return char_eval(self, x)

    def values(self):
        """Character evaluated on every element, as a length-N complex array"""
        return character_values(self.group, self.xi.index)


def char_eval(xi, x):
    """e(xi . x) for a Character (or dual element) and an element"""
    if isinstance(xi, Elem):
        xi = Character(xi)
    return complex(np.exp(2j * np.pi * float(xi.phase(x))))


def character_values(group, xi_index):
    """Vector of e(xi . x) over all x in the group"""
    xi_digits = group.digits(xi_index)
    x_digits = group.digits(np.arange(group.order, dtype=np.int64))
    factors = np.asarray(group.factors, dtype=np.int64)
    phase = (((x_digits * xi_digits) % factors) / factors).sum(axis=-1) % 1.0
    return np.exp(2j * np.pi * phase)
