"""
Shared pytest fixtures: seeded generators and a few small sets with known energies
"""

import numpy as np
import pytest

import config
from group import make_group
from sets import GSet


@pytest.fixture
def rng():
    """Generator seeded with the verifier's default master seed"""
    return np.random.default_rng(config.DEFAULT_SEED)


@pytest.fixture
def z5():
    return make_group([5])


@pytest.fixture
def z8():
    return make_group([8])


@pytest.fixture
def pair(z5):
    """{0, 1} in Z/5: A ∘ A = [2, 1, 0, 0, 1]"""
    return GSet.from_elements(z5, [0, 1])


@pytest.fixture
def progression(z8):
    """{0, 1, 2} in Z/8, small enough that no difference wraps"""
    return GSet.from_elements(z8, [0, 1, 2])


@pytest.fixture
def random_set(rng):
    """Factory for seeded random subsets of Z/n"""
    def build(n, m):
        group = make_group([n])
        return GSet.from_elements(group, rng.choice(n, size=m, replace=False))
    return build
