#!/usr/bin/env python3
"""
Higher Energies Toolkit - Serialization
JSON exchange formats for sets, tuple sets, functions, tensors and spectra
"""

import json
import logging

import numpy as np

from group import make_group
from harmonic import DenseFn, SparseTensor
from sets import GSet, TupleSet, pack_tuples
from spectral import Spectrum

logger = logging.getLogger('serialization')


def _group(doc):
    if 'group' not in doc:
        raise ValueError("Document has no 'group' field")
    return make_group(doc['group'])


def encode(obj):
    """JSON-ready dict for any exchange type"""
    if hasattr(obj, 'to_json'):
        return obj.to_json()
    raise TypeError(f"No exchange format for {type(obj).__name__}")


def decode_set(doc):
    """{"group": [...], "set": [...]} -> GSet"""
    group = _group(doc)
    elements = doc.get('set', [])
    for e in elements:
        if not 0 <= int(e) < group.order:
            raise ValueError(f"Element {e} outside [0, {group.order})")
    return GSet.from_elements(group, elements)


def decode_tuple_set(doc):
    group = _group(doc)
    arity = int(doc['arity'])
    rows = np.asarray(doc.get('tuples', []), dtype=np.int64).reshape(-1, arity)
    if rows.size and (rows.min() < 0 or rows.max() >= group.order):
        raise ValueError("Tuple coordinate outside the group")
    return TupleSet(group, arity, pack_tuples(group, rows))


def decode_dense(doc):
    """Values given as [re, im] pairs; all-integer real parts come back on the integer path"""
    group = _group(doc)
    pairs = np.asarray(doc['values'], dtype=np.float64).reshape(-1, 2)
    if np.all(pairs[:, 1] == 0) and np.all(pairs[:, 0] == np.round(pairs[:, 0])):
        return DenseFn(group, pairs[:, 0].astype(np.int64))
    return DenseFn(group, pairs[:, 0] + 1j * pairs[:, 1])


def decode_tensor(doc):
    group = _group(doc)
    arity = int(doc['arity'])
    entries = doc.get('entries', [])
    rows = np.asarray([key for key, _ in entries], dtype=np.int64).reshape(-1, arity)
    raw = [value for _, value in entries]
    if all(isinstance(v, int) for v in raw):
        values = np.asarray(raw, dtype=np.int64) if raw else np.zeros(0, dtype=np.int64)
    else:
        values = np.asarray([complex(*v) if isinstance(v, list) else complex(v) for v in raw])
    return SparseTensor(group, arity, pack_tuples(group, rows), values)


def decode_spectrum(doc):
    """Eigenvalues only; eigenvectors are not part of the exchange format"""
    values = np.asarray(doc['eigenvalues'], dtype=np.float64)
    return Spectrum(values, np.zeros((values.size, 0)), float(doc.get('residual_max', 0.0)))


def decode(doc):
    """Dispatch on the fields present in the document"""
    if 'eigenvalues' in doc:
        return decode_spectrum(doc)
    if 'entries' in doc:
        return decode_tensor(doc)
    if 'tuples' in doc:
        return decode_tuple_set(doc)
    if 'values' in doc:
        return decode_dense(doc)
    if 'set' in doc:
        return decode_set(doc)
    raise ValueError(f"Unrecognized document with fields {sorted(doc)}")


def dumps(obj):
    return json.dumps(encode(obj), separators=(',', ':'))


def load_file(path):
    with open(path) as handle:
        doc = json.load(handle)
    logger.debug(f"Loaded {path}")
    return decode(doc)


def save_file(obj, path):
    with open(path, 'w') as handle:
        handle.write(dumps(obj) + '\n')
