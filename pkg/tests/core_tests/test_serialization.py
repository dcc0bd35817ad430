"""
Tests for the JSON exchange formats
"""

import numpy as np
import pytest

import serialization
from harmonic import DenseFn, SparseTensor, gen_convolution
from sets import GSet, TupleSet
from spectral import Spectrum


def test_set_document(progression):
    assert serialization.dumps(progression) == '{"group":[8],"set":[0,1,2]}'
    assert serialization.decode({'group': [8], 'set': [2, 0, 1]}) == progression


def test_set_element_out_of_range():
    with pytest.raises(ValueError):
        serialization.decode_set({'group': [8], 'set': [8]})


def test_missing_group():
    with pytest.raises(ValueError):
        serialization.decode({'set': [1]})


def test_tuple_set_document(pair):
    T = TupleSet.from_tuples(pair.group, 2, [(0, 1), (4, 4)])
    doc = serialization.encode(T)
    assert doc == {'group': [5], 'arity': 2, 'tuples': [[0, 1], [4, 4]]}
    assert serialization.decode(doc) == T


def test_dense_function_document(z5):
    f = serialization.decode({'group': [5], 'values': [[1, 0], [2, 0], [0, 0], [0, 0], [-1, 0]]})
    assert f.is_integer
    assert list(f.values) == [1, 2, 0, 0, -1]
    g = serialization.decode({'group': [5], 'values': [[0.5, 1.0]] * 5})
    assert not g.is_integer
    assert g.values[0] == 0.5 + 1j


def test_tensor_document(pair):
    T = gen_convolution([pair, pair, pair])
    decoded = serialization.decode(serialization.encode(T))
    assert isinstance(decoded, SparseTensor)
    assert decoded == T


def test_spectrum_document():
    doc = {'eigenvalues': [3.0, 1.0], 'residual_max': 1e-12}
    spec = serialization.decode(doc)
    assert isinstance(spec, Spectrum)
    assert spec.principal == 3.0
    assert spec.to_json() == doc


def test_unknown_document():
    with pytest.raises(ValueError):
        serialization.decode({'group': [5]})
    with pytest.raises(TypeError):
        serialization.encode(object())


def test_file_round_trip(tmp_path, progression):
    path = tmp_path / 'A.json'
    serialization.save_file(progression, str(path))
    assert serialization.load_file(str(path)) == progression
    f = DenseFn(progression.group, np.arange(8))
    serialization.save_file(f, str(path))
    assert serialization.load_file(str(path)) == f
