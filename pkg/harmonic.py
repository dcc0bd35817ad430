#!/usr/bin/env python3
"""
Higher Energies Toolkit - Harmonic Analysis
Dense functions on the group, convolutions, generalized convolutions and the naive DFT
"""

import math
import logging

import numpy as np

import config
from errors import ensure_cap
from sets import GSet, TupleSet, shift_values, pack_tuples, unpack_tuples

logger = logging.getLogger('harmonic')

INT_SAFE = 2 ** 62


def _is_integer_array(values):
    return values.dtype.kind in 'iu' or values.dtype == object


def _max_abs(values):
    if values.size == 0:
        return 0
    if values.dtype == object:
        return max(abs(int(v)) for v in values)
    return int(np.max(np.abs(values)))


class DenseFn:
    """A function on the whole group; integer-valued functions keep an exact path"""

    def __init__(self, group, values):
        values = np.asarray(values)
        if values.shape != (group.order,):
            raise ValueError(f"Expected {group.order} values, got shape {values.shape}")
        if values.dtype == bool:
            values = values.astype(np.int64)
        elif values.dtype.kind in 'iu':
            values = values.astype(np.int64)
        elif values.dtype != object:
            values = values.astype(np.complex128)
        self.group = group
        self.values = values

    @classmethod
    def indicator(cls, A):
        """Characteristic function of a GSet"""
        return cls(A.group, A.indicator())

    @classmethod
    def delta(cls, group, x=0):
        values = np.zeros(group.order, dtype=np.int64)
        values[int(x)] = 1
        return cls(group, values)

    @classmethod
    def zeros(cls, group, dtype=np.int64):
        return cls(group, np.zeros(group.order, dtype=dtype))

    @property
    def is_integer(self):
        return _is_integer_array(self.values)

    def __getitem__(self, x):
        return self.values[int(x)]

    def __len__(self):
        return self.group.order

    def support(self):
        """Indices where the function is nonzero"""
        return np.flatnonzero(self.values != 0).astype(np.int64)

    def support_set(self):
        return GSet(self.group, self.values != 0)

    def as_complex(self):
        return self.values.astype(np.complex128)

    def conj(self):
        if self.is_integer:
            return self
        return DenseFn(self.group, np.conj(self.values))

    def reflect(self):
        """x -> f(-x)"""
        return DenseFn(self.group, self.values[self.group.neg_index(np.arange(self.group.order))])

    def abs2(self):
        """|f|^2 as a real-valued function"""
        if self.is_integer:
            return DenseFn(self.group, self.values * self.values)
        return DenseFn(self.group, np.abs(self.values) ** 2 + 0j)

    def power(self, k):
        """Pointwise k-th power"""
        if self.is_integer and _max_abs(self.values) ** k >= INT_SAFE:
            return DenseFn(self.group, np.array([int(v) ** k for v in self.values], dtype=object))
        return DenseFn(self.group, self.values ** k)

    def __add__(self, other):
        self.group.require_same(other.group)
        return DenseFn(self.group, self.values + other.values)

    def __sub__(self, other):
        self.group.require_same(other.group)
        return DenseFn(self.group, self.values - other.values)

    def __mul__(self, other):
        if isinstance(other, DenseFn):
            self.group.require_same(other.group)
            return DenseFn(self.group, self.values * other.values)
        return DenseFn(self.group, self.values * other)

    __rmul__ = __mul__

    def total(self):
        if self.values.dtype == object:
            return sum(int(v) for v in self.values)
        if self.is_integer:
            return int(self.values.sum())
        return complex(self.values.sum())

    def allclose(self, other, rtol=config.TOL_AGGREGATE, atol=config.TOL_UNIT):
        self.group.require_same(other.group)
        scale = max(1.0, float(np.max(np.abs(self.as_complex()))), float(np.max(np.abs(other.as_complex()))))
        return bool(np.allclose(self.as_complex(), other.as_complex(), rtol=rtol, atol=atol * scale))

    def __eq__(self, other):
        if not isinstance(other, DenseFn):
            return NotImplemented
        return self.group == other.group and bool(np.all(self.values == other.values))

    __hash__ = None

    def __repr__(self):
        kind = 'int' if self.is_integer else 'complex'
        return f"DenseFn({list(self.group.factors)}, {kind})"

    def to_json(self):
        values = self.as_complex()
        return {'group': self.group.to_json(),
                'values': [[float(v.real), float(v.imag)] for v in values]}


def _accumulator(f, g, terms):
    """Exact dtype for a sum of `terms` products of f and g values"""
    if f.is_integer and g.is_integer:
        if _max_abs(f.values) * _max_abs(g.values) * max(terms, 1) < INT_SAFE and f.values.dtype != object \
                and g.values.dtype != object:
            return np.int64
        return object
    return np.complex128


def _values_as(values, dtype):
    if dtype == object:
        return np.array([int(v) for v in values], dtype=object)
    return values.astype(dtype)


def convolve(f, g):
    """(f * g)(x) = sum_y f(y) g(x - y)"""
    f.group.require_same(g.group)
    if len(g.support()) < len(f.support()):
        f, g = g, f
    support = f.support()
    dtype = _accumulator(f, g, len(support))
    out = np.zeros(f.group.order, dtype=dtype)
    gv = _values_as(g.values, dtype)
    for y in support:
        out = out + f.values[y] * shift_values(f.group, gv, int(y))
    return DenseFn(f.group, out)


def correlate(f, g):
    """(f ∘ g)(x) = sum_y f(y) g(y + x)"""
    f.group.require_same(g.group)
    support = f.support()
    dtype = _accumulator(f, g, len(support))
    out = np.zeros(f.group.order, dtype=dtype)
    gv = _values_as(g.values, dtype)
    for y in support:
        out = out + f.values[y] * shift_values(f.group, gv, int(f.group.neg_index(int(y))))
    return DenseFn(f.group, out)


def kfold_convolve(f, k):
    """f *_k f: f for k = 1, f * (f *_{k-1} f) otherwise"""
    if k < 1:
        raise ValueError("k-fold convolution needs k >= 1")
    result = f
    for _ in range(k - 1):
        result = convolve(f, result)
    return result


def autocorrelation(A):
    """A ∘ A for a GSet"""
    f = DenseFn.indicator(A)
    return correlate(f, f)


class SparseTensor:
    """A function on G^m stored sparsely: sorted packed codes with nonzero values"""

    def __init__(self, group, arity, codes, values):
        codes = np.asarray(codes, dtype=np.int64)
        values = np.asarray(values)
        if codes.shape != values.shape:
            raise ValueError("Codes and values must align")
        order = np.argsort(codes, kind='stable')
        codes, values = codes[order], values[order]
        if codes.size and np.any(codes[1:] == codes[:-1]):
            raise ValueError("Duplicate tuple codes")
        keep = values != 0
        self.group = group
        self.arity = int(arity)
        self.codes = codes[keep]
        self.values = values[keep]
        self.power_group = group.power(self.arity)

    @classmethod
    def from_dense(cls, f):
        support = f.support()
        return cls(f.group, 1, support, f.values[support])

    @classmethod
    def from_dict(cls, group, arity, entries):
        items = list(entries.items())
        if not items:
            return cls(group, arity, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
        rows = np.asarray([key for key, _ in items], dtype=np.int64).reshape(-1, arity)
        values = np.asarray([value for _, value in items])
        return cls(group, arity, pack_tuples(group, rows), values)

    @property
    def is_integer(self):
        return _is_integer_array(self.values)

    def __len__(self):
        return int(self.codes.size)

    def tuples(self):
        return unpack_tuples(self.group, self.arity, self.codes)

    def get(self, key):
        code = int(pack_tuples(self.group, np.asarray(key, dtype=np.int64).reshape(1, self.arity))[0])
        pos = np.searchsorted(self.codes, code)
        if pos < self.codes.size and self.codes[pos] == code:
            value = self.values[pos]
            return int(value) if self.is_integer else complex(value)
        return 0

    def to_dict(self):
        cast = int if self.is_integer else complex
        return {tuple(int(v) for v in row): cast(value) for row, value in zip(self.tuples(), self.values)}

    def support(self):
        return TupleSet(self.group, self.arity, self.codes)

    def total(self):
        if self.is_integer:
            return sum(int(v) for v in self.values)
        return complex(self.values.sum())

    def power_sum(self, l):
        """Sum over entries of value^l, exact on the integer path"""
        if self.is_integer:
            return sum(int(v) ** l for v in self.values)
        return complex(np.sum(self.values ** l))

    def __eq__(self, other):
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return (self.group == other.group and self.arity == other.arity
                and np.array_equal(self.codes, other.codes) and bool(np.all(self.values == other.values)))

    __hash__ = None

    def __repr__(self):
        return f"SparseTensor({list(self.group.factors)}, arity={self.arity}, entries={len(self)})"

    def to_json(self):
        cast = (lambda v: int(v)) if self.is_integer else (lambda v: [float(v.real), float(v.imag)])
        return {'group': self.group.to_json(), 'arity': self.arity,
                'entries': [[[int(t) for t in row], cast(v)] for row, v in zip(self.tuples(), self.values)]}


def _as_sparse(f):
    if isinstance(f, SparseTensor):
        return f
    if isinstance(f, GSet):
        return SparseTensor.from_dense(DenseFn.indicator(f))
    return SparseTensor.from_dense(f)


def gen_convolution(fs, cap=None):
    """C_{k+1}(f_1, ..., f_{k+1})(x_1..x_k) = sum_z f_1(z) f_2(z + x_1) ... f_{k+1}(z + x_k)

    Inputs may be DenseFn, GSet or SparseTensor of a common arity m; the sum then runs
    over the group G^m and the result has arity m*k over G.
    """
    if len(fs) < 2:
        raise ValueError("A generalized convolution needs at least two functions")
    tensors = [_as_sparse(f) for f in fs]
    group, m = tensors[0].group, tensors[0].arity
    for t in tensors[1:]:
        group.require_same(t.group)
        if t.arity != m:
            raise ValueError("All inputs of a generalized convolution must share one arity")
    k = len(tensors) - 1
    ensure_cap(math.prod(len(t) for t in tensors), config.TUPLE_CAP if cap is None else cap,
               "generalized convolution")
    base = group.power(m)
    out_group = group.power(m * k)
    integer = all(t.is_integer for t in tensors)
    bound = math.prod(max((abs(int(v)) for v in t.values), default=0) for t in tensors) * max(len(tensors[0]), 1) \
        if integer else 0
    dtype = (np.int64 if bound < INT_SAFE else object) if integer else np.complex128
    chunk_codes, chunk_values = [], []
    for z, fz in zip(tensors[0].codes, tensors[0].values):
        codes = np.zeros(1, dtype=np.int64)
        values = _values_as(np.asarray([fz]), dtype)
        weight = 1
        for t in tensors[1:]:
            shifted = base.sub_index(t.codes, int(z)).astype(np.int64)
            codes = np.add.outer(codes, shifted * weight).ravel()
            values = np.multiply.outer(values, _values_as(t.values, dtype)).ravel()
            weight *= base.order
        chunk_codes.append(codes)
        chunk_values.append(values)
    if not chunk_codes:
        return SparseTensor(group, m * k, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    codes = np.concatenate(chunk_codes)
    values = np.concatenate(chunk_values)
    unique, inverse = np.unique(codes, return_inverse=True)
    totals = np.zeros(unique.size, dtype=dtype)
    np.add.at(totals, inverse.ravel(), values)
    logger.debug(f"C_{k + 1} over order {base.order}: {unique.size} entries, out order {out_group.order}")
    return SparseTensor(group, m * k, unique, totals)


def tensor_inner(F, G):
    """sum over common tuples of F * G (no conjugation)"""
    F.group.require_same(G.group)
    if F.arity != G.arity:
        raise ValueError("Tensors of different arity")
    _, i, j = np.intersect1d(F.codes, G.codes, assume_unique=True, return_indices=True)
    if F.is_integer and G.is_integer:
        return sum(int(a) * int(b) for a, b in zip(F.values[i], G.values[j]))
    return complex(np.sum(F.values[i] * G.values[j]))


def transpose_blocks(T, outer, inner):
    """Reorder an (outer x inner) block layout of coordinates into (inner x outer)"""
    if outer * inner != T.arity:
        raise ValueError(f"Arity {T.arity} is not {outer} x {inner}")
    rows = T.tuples().reshape(-1, outer, inner).transpose(0, 2, 1).reshape(-1, T.arity)
    return SparseTensor(T.group, T.arity, pack_tuples(T.group, rows), T.values)


def tensor_as_function(T):
    """View a SparseTensor of arity m as a sparse function on the group G^m"""
    return SparseTensor(T.power_group, 1, T.codes, T.values)


def _factor_matrix(n, sign):
    x = np.arange(n, dtype=np.int64)
    phase = np.outer(x, x) % n / n
    return np.exp(sign * 2j * np.pi * phase)


def _apply_factors(group, values, sign):
    grid = group.as_grid(values.astype(np.complex128))
    for axis, n in enumerate(group.factors):
        grid = np.moveaxis(np.tensordot(_factor_matrix(n, sign), grid, axes=([1], [axis])), 0, axis)
    return group.from_grid(grid)


def dft(f):
    """f^(xi) = sum_x f(x) e(-xi . x), factor by factor"""
    return DenseFn(f.group, _apply_factors(f.group, f.values, -1))


def inverse_dft(F):
    """f(x) = (1/N) sum_xi F(xi) e(xi . x)"""
    return DenseFn(F.group, _apply_factors(F.group, F.values, 1) / F.group.order)


def inner(f, g):
    """<f, g> = sum_x f(x) conj(g(x))"""
    f.group.require_same(g.group)
    return complex(np.sum(f.as_complex() * np.conj(g.as_complex())))


def lp_norm(f, p):
    """(sum_x |f(x)|^p)^(1/p) with counting measure"""
    values = np.abs(f.as_complex())
    if p == math.inf:
        return float(values.max(initial=0.0))
    return float(np.sum(values ** p) ** (1.0 / p))
