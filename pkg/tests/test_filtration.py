import pytest
from hypothesis import given

from normhilb.closure import ClosureCache, closure_power
from normhilb.filtration import (
    graded_quotient_lengths,
    hi_check,
    quotient_lengths_by_colength,
    reduction_number,
)
from normhilb.hilbert import InfiniteLength
from normhilb.monomial import MonomialIdeal, contains_monomial, intersect, multiply

from conftest import ideal, parameter_ideals

# An HI_1 failure found by search: I = (y z^2, x^3 z, x^3 y^2)
HI1_FAILURE = ideal((0, 1, 2), (3, 0, 1), (3, 2, 0))


def test_hi_examples(xy2, m2):
    assert hi_check(m2, 1, 5).passed
    report = hi_check(xy2, 1, 5)
    assert report.passed and report.witness is None
    assert report.to_json() == {"r": 1, "n_range": [0, 5], "passed": True, "witness": None}


def test_hi_failure_witness():
    cache = ClosureCache(HI1_FAILURE)
    report = hi_check(cache, 1, 3)
    assert not report.passed
    n, mono = report.witness
    assert (n, mono) == (1, (4, 2, 2))
    # the witness really lies in I^n ∩ closure(I^(n+1)) but not in I^n closure(I)
    assert contains_monomial(intersect(cache.power(n), closure_power(cache, n + 1)), mono)
    assert not contains_monomial(multiply(cache.power(n), closure_power(cache, 1)), mono)


def test_hi_rejects_bad_arguments(xy2):
    with pytest.raises(ValueError):
        hi_check(xy2, 0, 3)


def test_reduction_examples(xy2, m2):
    assert reduction_number(m2, 5).r_bar == 0
    rep = reduction_number(xy2, 6)
    assert rep.r_bar == 1 and rep.failures == (0,) and rep.at_most(1) and not rep.at_most(0)
    assert reduction_number(ClosureCache(MonomialIdeal.pure_powers((3, 3, 3))), 5).r_bar == 2


def test_reduction_with_explicit_reduction_ideal():
    cache = ClosureCache(ideal((2, 0), (1, 1), (0, 2)))
    J = ideal((2, 0), (0, 2))
    # closure(I^n) = m^(2n) and J m^(2n) = m^(2n+2) for n >= 1, not for n = 0
    assert reduction_number(cache, 5, J).r_bar == 1
    with pytest.raises(ValueError):
        reduction_number(cache, 5, MonomialIdeal.maximal(2))


def test_reduction_window_exhausted():
    rep = reduction_number(ClosureCache(MonomialIdeal.pure_powers((3, 3, 3))), 2)
    assert rep.r_bar is None and not rep.at_most(5)
    assert rep.to_json()["certified_up_to"] == 2


def test_quotient_lengths_examples(xy2):
    assert graded_quotient_lengths(xy2, 4) == [1, 0, 0, 0, 0]
    cube = ClosureCache(MonomialIdeal.pure_powers((3, 3, 3)))
    assert graded_quotient_lengths(cube, 4) == [17, 1, 0, 0, 0]


def test_quotient_lengths_need_m_primary():
    with pytest.raises(InfiniteLength):
        graded_quotient_lengths(ClosureCache(ideal((1, 1))), 2)


@given(parameter_ideals(max_dim=3, max_exp=3))
def test_lengths_agree_both_ways(I):
    cache = ClosureCache(I)
    assert graded_quotient_lengths(cache, 3) == quotient_lengths_by_colength(cache, 3)


@given(parameter_ideals(max_dim=3, max_exp=3))
def test_reduction_number_matches_vanishing_lengths(I):
    # closure(I^(n+1)) = I closure(I^n) exactly when the n-th quotient length is zero
    cache = ClosureCache(I)
    rep = reduction_number(cache, 5)
    lengths = graded_quotient_lengths(cache, 4)
    assert rep.failures == tuple(i for i, v in enumerate(lengths) if v)


@given(parameter_ideals(max_dim=2, max_exp=3))
def test_small_reduction_number_gives_hi(I):
    # r_bar <= 1 forces closure(I^(n+1)) = I^n closure(I), hence HI_1
    cache = ClosureCache(I)
    if reduction_number(cache, 5).at_most(1):
        assert hi_check(cache, 1, 4).passed
