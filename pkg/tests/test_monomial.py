from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from normhilb.monomial import (
    DimensionError,
    MonomialIdeal,
    add,
    colon_variable,
    contains_monomial,
    equals,
    intersect,
    is_m_primary,
    is_subset,
    minimalize,
    multiply,
    power,
)

from conftest import ideal, ideal_pairs, ideals

UNIT2 = MonomialIdeal.unit(2)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ([(2, 0), (0, 2), (2, 1)], ((0, 2), (2, 0))),
        ([(0, 0)], ((0, 0),)),
        ([(1, 2), (2, 1), (3, 3)], ((1, 2), (2, 1))),
    ],
)
def test_minimalize_examples(raw, expected):
    assert minimalize(raw, 2).gens == expected


def test_minimalize_rejects_mixed_dimensions():
    with pytest.raises(DimensionError):
        minimalize([(1, 0), (1, 0, 0)], 2)


def test_contains_examples():
    I = MonomialIdeal.pure_powers([2, 2])
    assert not contains_monomial(I, (1, 1))
    assert contains_monomial(I, (2, 5))
    assert contains_monomial(UNIT2, (0, 0))
    with pytest.raises(DimensionError):
        contains_monomial(I, (1, 1, 1))


def test_multiply_examples():
    x, y = ideal((1, 0)), ideal((0, 1))
    assert multiply(x, y) == ideal((1, 1))
    I = MonomialIdeal.pure_powers([2, 2])
    assert multiply(I, UNIT2) == I
    assert power(MonomialIdeal.maximal(2), 2) == ideal((2, 0), (1, 1), (0, 2))
    assert power(I, 0) == UNIT2


def test_intersect_examples():
    I = MonomialIdeal.pure_powers([2, 2])
    J = ideal((1, 1))
    expected = ideal((2, 1), (1, 2))
    # brute-force membership oracle over the box [0, 4]^2
    brute = [a for a in product(range(5), repeat=2) if a in I and a in J]
    assert all(a in expected for a in brute)
    assert all(a not in expected for a in product(range(5), repeat=2) if a not in brute)
    assert intersect(I, J) == expected
    assert intersect(I, UNIT2) == I
    assert intersect(ideal((1, 0)), ideal((0, 1))) == ideal((1, 1))


def test_equals_examples():
    assert equals(MonomialIdeal.pure_powers([2, 2]), minimalize([(2, 0), (0, 2), (3, 3)], 2))
    assert not equals(ideal((1, 0), (0, 1)), ideal((2, 0), (0, 1)))
    assert equals(UNIT2, UNIT2)


def test_m_primary_examples():
    assert is_m_primary(MonomialIdeal.pure_powers([2, 2]))
    assert not is_m_primary(ideal((1, 1)))
    assert is_m_primary(MonomialIdeal.maximal(3))


def test_zero_and_unit_edge_cases():
    Z = MonomialIdeal.zero(2)
    I = MonomialIdeal.pure_powers([2, 3])
    assert intersect(I, Z).is_zero
    assert multiply(I, Z).is_zero
    assert add(I, Z) == I
    assert not contains_monomial(Z, (0, 0))
    assert UNIT2.is_unit and not I.is_unit


def test_colon_variable():
    I = ideal((2, 0), (1, 1), (0, 3))
    assert colon_variable(I, 0) == ideal((1, 0), (0, 1))


def test_json_round_trip():
    I = MonomialIdeal.from_json({"dim": 3, "gens": [[2, 0, 0], [0, 2, 0], [3, 3, 0], [0, 0, 1]]})
    assert I.gens == ((0, 0, 1), (0, 2, 0), (2, 0, 0))
    assert MonomialIdeal.from_json(I.to_json()) == I
    with pytest.raises(ValueError):
        MonomialIdeal.from_json({"gens": [[1]]})


def _box(I, J, extra=2):
    top = max(I.max_exponent(), J.max_exponent()) * 2 + extra
    return product(range(top + 1), repeat=I.dim)


@given(ideal_pairs())
def test_intersection_membership_oracle(pair):
    I, J = pair
    K = intersect(I, J)
    for a in _box(I, J):
        assert (a in K) == (a in I and a in J)


@given(ideal_pairs(max_dim=2))
def test_product_membership_decomposes(pair):
    I, J = pair
    P = multiply(I, J)
    for a in _box(I, J):
        split = any(
            b in I and tuple(x - y for x, y in zip(a, b)) in J
            for b in product(*(range(x + 1) for x in a))
        )
        assert (a in P) == split


@given(ideals(max_dim=3, max_gens=3, max_exp=2), st.integers(0, 3), st.integers(0, 3))
def test_power_law(I, m, n):
    assert multiply(power(I, m), power(I, n)) == power(I, m + n)


@given(st.lists(st.lists(st.integers(0, 4), min_size=2, max_size=2), min_size=1, max_size=6))
def test_minimalize_idempotent_and_membership_preserving(raw):
    I = minimalize(raw, 2)
    assert minimalize(I.gens, 2) == I
    for g in raw:
        assert tuple(g) in I
    for a in I.gens:
        assert any(all(x >= y for x, y in zip(a, g)) for g in raw)
    assert list(I.gens) == sorted(I.gens)


@given(ideals(max_dim=3, max_exp=3))
def test_subset_matches_membership(I):
    J = multiply(I, MonomialIdeal.maximal(I.dim))
    assert is_subset(J, I)
    assert is_subset(I, J) == (I == J)
