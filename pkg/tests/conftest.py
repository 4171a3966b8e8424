import numpy as np
import pytest

from conjlogic.clifford.gates import CzChoice, TheoryVariant
from conjlogic.pauli.parser import parse_conjunction, parse_prop


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture(params=list(TheoryVariant), ids=lambda v: v.value)
def variant(request):
    return request.param


@pytest.fixture(params=list(CzChoice), ids=lambda c: c.value)
def cz(request):
    return request.param


def prop(text):
    return parse_prop(text)


def conjunction(text):
    return parse_conjunction(text)


def random_prop(rng, n, nontrivial=True):
    from conjlogic.pauli.proposition import Proposition

    while True:
        x = rng.integers(2, size=n, dtype=np.uint8)
        z = rng.integers(2, size=n, dtype=np.uint8)
        p = Proposition.from_bits(x, z, int(rng.integers(2)))
        if not nontrivial or not p.is_trivial:
            return p
