from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_monomials, extremal_rays
from vgit_pairs.errors import InputError, ParseError
from vgit_pairs.monomials import (
    Monomial,
    OneParamSubgroup,
    enumerate_monomials,
    mukai_leq,
    mukai_min_variable,
    pairing,
    parse_monomial,
)


def M(*e):
    return Monomial(e)


def x(i, n):
    return Monomial.variable(i, n + 2)


def test_enumerate_n0_k2():
    assert enumerate_monomials(0, 2) == [M(2, 0), M(1, 1), M(0, 2)]


def test_enumerate_n1_k1():
    assert enumerate_monomials(1, 1) == [M(1, 0, 0), M(0, 1, 0), M(0, 0, 1)]


def test_enumerate_cubic_surfaces_count():
    assert len(enumerate_monomials(2, 3)) == 20


@pytest.mark.parametrize("n,k", [(n, k) for n in range(4) for k in range(1, 5)])
def test_enumerate_count_and_order(n, k):
    mons = enumerate_monomials(n, k)
    assert len(mons) == comb(n + 1 + k, k)
    assert [m.exponents for m in mons] == sorted(brute_monomials(n, k), reverse=True)
    assert mons == sorted(mons)


def test_pairing_examples():
    assert pairing(M(1, 1), OneParamSubgroup((1, -1))) == 0
    assert pairing(M(2, 0), OneParamSubgroup((1, -1))) == 2


def test_pairing_top_monomial_positive():
    lam = OneParamSubgroup((3, 1, -4))
    assert pairing(M(3, 0, 0), lam) == 3 * 3 > 0


def test_pairing_length_mismatch():
    with pytest.raises(InputError):
        pairing(M(1, 1), OneParamSubgroup((1, 0, -1)))


weights3 = st.lists(st.integers(-6, 6), min_size=3, max_size=3)


@given(st.sampled_from(brute_monomials(1, 3)), weights3, weights3)
def test_pairing_bilinear(e, a, b):
    m = Monomial(e)
    assert pairing(m, [x + y for x, y in zip(a, b)]) == pairing(m, a) + pairing(m, b)


@given(st.integers(-6, 6), st.integers(-6, 6).filter(bool))
def test_pairing_with_variable_is_weight(a, b):
    w = (a, b, -a - b)
    lam = OneParamSubgroup(tuple(w))
    for i in range(3):
        assert pairing(x(i, 1), lam) == w[i]


def test_one_param_subgroup_validation():
    with pytest.raises(InputError):
        OneParamSubgroup((1, 1))
    with pytest.raises(InputError):
        OneParamSubgroup((0, 0, 0))
    assert OneParamSubgroup((2, -1, -1)).is_normalized
    assert not OneParamSubgroup((-1, 2, -1)).is_normalized


def test_mukai_chain_n0():
    assert mukai_leq(M(0, 2), M(1, 1))
    assert mukai_leq(M(1, 1), M(2, 0))


def test_mukai_incomparable():
    a, b = M(1, 0, 2), M(0, 3, 0)
    assert not mukai_leq(a, b)
    assert not mukai_leq(b, a)


def test_mukai_reflexive_example():
    assert mukai_leq(M(1, 2, 0), M(1, 2, 0))


def test_mukai_degree_mismatch():
    with pytest.raises(InputError):
        mukai_leq(M(1, 0), M(1, 1))


@pytest.mark.parametrize("n,d", [(n, d) for n in range(3) for d in range(1, 4)])
def test_mukai_partial_order(n, d):
    mons = enumerate_monomials(n, d)
    for a in mons:
        assert mukai_leq(a, a)
        for b in mons:
            if a != b and mukai_leq(a, b):
                assert not mukai_leq(b, a)
            for c in mons:
                if mukai_leq(a, b) and mukai_leq(b, c):
                    assert mukai_leq(a, c)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(2) for d in range(1, 4)])
def test_mukai_matches_extremal_rays(n, d):
    rays = extremal_rays(n)
    mons = brute_monomials(n, d)
    for a, b in product(mons, repeat=2):
        direct = all(sum(p * q for p, q in zip(a, r)) <= sum(p * q for p, q in zip(b, r)) for r in rays)
        assert mukai_leq(Monomial(a), Monomial(b)) == direct


@pytest.mark.parametrize("n", range(4))
def test_mukai_extremes(n):
    for d in (1, 2, 3):
        mons = enumerate_monomials(n, d)
        top, bottom = mons[0], mons[-1]
        assert top.exponents[0] == d and bottom.exponents[-1] == d
        assert all(mukai_leq(m, top) and mukai_leq(bottom, m) for m in mons)


def test_mukai_total_on_variables():
    vs = enumerate_monomials(2, 1)
    for a in vs:
        for b in vs:
            assert mukai_leq(a, b) or mukai_leq(b, a)


def test_mukai_min_variable():
    assert mukai_min_variable({x(0, 1), x(1, 1)}) == x(1, 1)
    assert mukai_min_variable({x(2, 1)}) == x(2, 1)
    assert mukai_min_variable(enumerate_monomials(3, 1)) == x(4, 3)
    with pytest.raises(InputError):
        mukai_min_variable(set())


def test_text_form():
    assert str(M(2, 1, 0)) == "x0^2*x1"
    assert str(M(0, 0, 3)) == "x2^3"
    assert str(M(1, 1, 1)) == "x0*x1*x2"


@pytest.mark.parametrize("e", brute_monomials(2, 3))
def test_text_round_trip(e):
    m = Monomial(e)
    assert parse_monomial(str(m), 4) == m


def test_parse_monomial_errors():
    with pytest.raises(ParseError) as exc:
        parse_monomial("x0^2*y1", 3)
    assert exc.value.column == 6
    with pytest.raises(ParseError):
        parse_monomial("x5", 3)
    with pytest.raises(ParseError):
        parse_monomial("x0 x1", 3)
