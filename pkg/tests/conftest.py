import itertools

import pytest
from hypothesis import strategies as st

from mtop import Mset, Universe, enumerate_submsets, full_mset, make_mset


@pytest.fixture
def xyz4():
    return Universe(("x", "y", "z"), 4)


@pytest.fixture
def example1(xyz4):
    m = lambda **c: make_mset(xyz4, c)
    return {
        "U": m(x=4, y=3, z=2),
        "V": m(x=4, y=4, z=4),
        "M1": m(x=4, y=3),
        "M2": m(x=2, y=3),
    }


def small_universes(max_n=2, max_omega=3):
    for n in range(1, max_n + 1):
        for w in range(1, max_omega + 1):
            yield Universe(tuple("xyz"[:n]), w)


def all_msets(u):
    return list(enumerate_submsets(full_mset(u)))


def all_pairs(max_n=2, max_omega=3):
    for u in small_universes(max_n, max_omega):
        ms = all_msets(u)
        yield from itertools.product(ms, repeat=2)


def all_triples(max_n=2, max_omega=2):
    for u in small_universes(max_n, max_omega):
        ms = all_msets(u)
        yield from itertools.product(ms, repeat=3)


@st.composite
def universes(draw, max_n=5, max_omega=8):
    n = draw(st.integers(1, max_n))
    w = draw(st.integers(1, max_omega))
    return Universe(tuple(f"e{i}" for i in range(n)), w)


def msets_over(u):
    return st.tuples(*[st.integers(0, u.omega) for _ in u.elements]).map(lambda v: Mset(u, v))


@st.composite
def mset_tuples(draw, k=2, max_n=5, max_omega=8):
    u = draw(universes(max_n, max_omega))
    return tuple(draw(msets_over(u)) for _ in range(k))
