import random

import pytest

from ddca_verify.ddca.seeds import new_algebra
from ddca_verify.liealg import frame_for
from ddca_verify.scalarring import BETA, LAM, RING
from ddca_verify.uea import enveloping


@pytest.fixture(scope='session')
def sl4():
    return frame_for('A', 3)


@pytest.fixture(scope='session')
def sl5():
    return frame_for('A', 4)


@pytest.fixture(scope='session')
def b3():
    return frame_for('B', 3)


@pytest.fixture(scope='session')
def c3():
    return frame_for('C', 3)


@pytest.fixture(scope='session')
def d4():
    return frame_for('D', 4)


@pytest.fixture(params=['sl4', 'sl5', 'b3', 'c3', 'd4'])
def any_frame(request):
    return request.getfixturevalue(request.param)


@pytest.fixture(params=['b3', 'c3', 'd4'])
def general_frame(request):
    return request.getfixturevalue(request.param)


@pytest.fixture(scope='session')
def U4(sl4):
    return enveloping(sl4)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def random_scalar(rng):
    def make():
        value = RING.zero
        for _ in range(rng.randint(1, 3)):
            value += RING(rng.randint(-5, 5)) * LAM ** rng.randint(0, 2) * BETA ** rng.randint(0, 2) / rng.randint(1, 4)
        return value
    return make


@pytest.fixture
def random_lie(rng):
    def make(frame, terms=3):
        coords = {rng.randrange(frame.dim): rng.randint(-3, 3) or 1 for _ in range(terms)}
        return frame.element(coords)
    return make


@pytest.fixture
def random_word(rng):
    """Products of up to ``length`` random basis letters with small integer coefficients."""
    def make(algebra, length=3, terms=2, max_degree=0):
        total = algebra.zero()
        for _ in range(terms):
            word = algebra.one()
            for _ in range(rng.randint(1, length)):
                word = word * algebra.basis_element(rng.randrange(algebra.dim), rng.randint(0, max_degree))
            total = total + word * rng.randint(1, 3)
        return total
    return make


@pytest.fixture
def two_param(sl4):
    """A fresh two-parameter algebra over sl_4; its knowledge base holds the defining relations only."""
    return new_algebra(sl4, 'two-parameter')


@pytest.fixture
def general(b3):
    return new_algebra(b3, 'general')


@pytest.fixture(scope='session')
def index_of():
    def index(x):
        (i,) = x.coords()
        return i
    return index
