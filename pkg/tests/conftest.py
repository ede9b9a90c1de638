import hypothesis.strategies as st
import pytest
from hypothesis import settings

from normhilb.closure import ClosureCache
from normhilb.monomial import MonomialIdeal, minimalize

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def ideals(draw, max_dim=3, max_gens=4, max_exp=4, nonzero_gens=True):
    d = draw(st.integers(1, max_dim))
    lo = 1 if nonzero_gens else 0
    gens = draw(
        st.lists(
            st.lists(st.integers(0, max_exp), min_size=d, max_size=d).filter(lambda g: sum(g) >= lo),
            min_size=1,
            max_size=max_gens,
        )
    )
    return minimalize(gens, d)


@st.composite
def ideal_pairs(draw, max_dim=3, max_gens=4, max_exp=3):
    d = draw(st.integers(1, max_dim))
    vec = st.lists(st.integers(0, max_exp), min_size=d, max_size=d)
    gens = st.lists(vec, min_size=1, max_size=max_gens)
    return minimalize(draw(gens), d), minimalize(draw(gens), d)


@st.composite
def parameter_ideals(draw, max_dim=3, max_exp=3):
    d = draw(st.integers(1, max_dim))
    return MonomialIdeal.pure_powers(draw(st.lists(st.integers(1, max_exp), min_size=d, max_size=d)))


def ideal(*gens):
    return minimalize(gens, len(gens[0]))


@pytest.fixture
def xy2():
    """(x^2, y^2)"""
    return ClosureCache(MonomialIdeal.pure_powers([2, 2]))


@pytest.fixture
def m2():
    return ClosureCache(MonomialIdeal.maximal(2))
