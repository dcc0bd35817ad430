#!/usr/bin/env python3
"""
Higher Energies Toolkit - Instance Generator
Seeded random and structured instances, serialized as plain JSON documents
"""

import hashlib
import logging

import numpy as np

import config
from constructions import convex_set, heilbronn_subgroup, mult_subgroup, quadratic_residues
from group import make_group
from harmonic import DenseFn
from sets import GSet, TupleSet

logger = logging.getLogger('verifier.instances')

ORDERS = (16, 32, 64)
KINDS = ('random_set', 'subgroup', 'residues', 'convex', 'heilbronn')


def derive_seed(master_seed, name, trial):
    """Per-task seed from (master seed, check name, trial index), independent of scheduling"""
    digest = hashlib.sha256(f"{master_seed}:{name}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], 'big') >> 1


def random_subset(rng, group, size):
    """Uniform subset of the given size, drawn without replacement"""
    if not 0 <= size <= group.order:
        raise ValueError(f"Cannot draw {size} elements from a group of order {group.order}")
    return GSet.from_elements(group, rng.choice(group.order, size=size, replace=False))


def random_group(rng, orders=ORDERS):
    return make_group([int(rng.choice(orders))])


def random_size(rng, low=4, high=16):
    return int(rng.integers(low, high + 1))


def set_instance(group, params=None, **sets):
    """JSON-ready instance over one group"""
    return {'group': group.to_json(),
            'sets': {name: [int(x) for x in s.elements] for name, s in sets.items()},
            'params': dict(params or {})}


def random_sets(names, low=4, high=16, orders=ORDERS, params=None):
    """make(rng) for checks that need independent random sets"""
    def make(rng):
        group = random_group(rng, orders)
        sets = {name: random_subset(rng, group, min(random_size(rng, low, high), group.order)) for name in names}
        return set_instance(group, params, **sets)
    return make


def load(instance):
    """(group, {name: GSet}, params) from an instance document"""
    group = make_group(instance['group'])
    sets = {name: GSet.from_elements(group, elements) for name, elements in instance.get('sets', {}).items()}
    return group, sets, instance.get('params', {})


def random_values(rng, size, low=-3, high=3):
    return [int(v) for v in rng.integers(low, high + 1, size=size)]


def function_values(f):
    """Exchange form of a DenseFn: plain integers on the exact path, [re, im] pairs otherwise"""
    if f.is_integer:
        return [int(v) for v in f.values]
    return [[float(v.real), float(v.imag)] for v in f.as_complex()]


def load_function(group, values):
    if values and isinstance(values[0], list):
        pairs = np.asarray(values, dtype=np.float64).reshape(-1, 2)
        return DenseFn(group, pairs[:, 0] + 1j * pairs[:, 1])
    return DenseFn(group, np.asarray(values, dtype=np.int64))


def random_tuple_set(rng, group, arity, size):
    """Uniform subset of G^arity of the given size"""
    total = group.order ** arity
    codes = rng.choice(total, size=min(size, total), replace=False)
    return TupleSet(group, arity, codes)


def tuple_set_doc(T):
    return {'arity': T.arity, 'tuples': [[int(v) for v in row] for row in T.tuples()]}


def load_tuple_set(group, doc):
    return TupleSet.from_tuples(group, doc['arity'], doc['tuples'])


def add_entries(instance, functions=None, tuple_sets=None):
    """Attach functions and tuple sets to an instance document"""
    if functions:
        instance.setdefault('functions', {}).update({name: function_values(f) for name, f in functions.items()})
    if tuple_sets:
        instance.setdefault('tuple_sets', {}).update({name: tuple_set_doc(T) for name, T in tuple_sets.items()})
    return instance


def load_all(instance):
    """(group, sets, params, functions, tuple_sets) from an instance document"""
    group, sets, params = load(instance)
    functions = {name: load_function(group, values) for name, values in instance.get('functions', {}).items()}
    tuple_sets = {name: load_tuple_set(group, doc) for name, doc in instance.get('tuple_sets', {}).items()}
    return group, sets, params, functions, tuple_sets


def gen_instance(kind, seed=config.DEFAULT_SEED, **params):
    """One instance in the set exchange format"""
    rng = np.random.default_rng(seed)
    if kind == 'random_set':
        n, m = int(params.get('n', 64)), int(params.get('m', 8))
        if m > n:
            raise ValueError(f"Cannot draw {m} elements from Z/{n}")
        A = random_subset(rng, make_group([n]), m)
    elif kind == 'subgroup':
        A = mult_subgroup(int(params.get('p', 13)), int(params.get('t', 4))).gset
    elif kind == 'residues':
        A = quadratic_residues(int(params.get('p', 7)))
    elif kind == 'convex':
        return convex_set(params.get('shape', 'squares'), int(params.get('n', 5)), seed).to_json()
    elif kind == 'heilbronn':
        A = heilbronn_subgroup(int(params.get('p', 5)))
    else:
        raise ValueError(f"Unknown instance kind: {kind}")
    logger.debug(f"Generated {kind} instance with {len(A)} elements")
    return A.to_json()
