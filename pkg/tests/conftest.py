"""Shared fixtures: small shapes, the sign conventions and a seeded generator."""

import random

import pytest

from orthotl.combinatorics.shapes import OneFactor, Shape
from orthotl.core.qscalars import bracket, vpow

SEED = 20240101


@pytest.fixture(scope="module")
def v():
    return vpow(1)


@pytest.fixture(scope="module")
def q2():
    """[2] = v + v^-1."""
    return bracket(2)


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture(scope="module")
def shape_21():
    return Shape(2, 1)


@pytest.fixture(scope="module")
def alpha_33():
    """(1,1,1,-1,-1,-1)."""
    return OneFactor((1, 1, 1, -1, -1, -1))
