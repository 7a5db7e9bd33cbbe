import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berkdisc.errors import NegativeValuation
from berkdisc.polynomial import (
    FpPoly,
    Poly,
    derivative,
    evaluate,
    from_roots,
    hasse_derivative,
    recenter,
    reduce_residue,
    taylor_shift,
)
from berkdisc.valued_field import FieldParams, pi_power

from helpers import elements

K = FieldParams(3, 2)
pi = K.pi()
cubic = Poly(K, [0, -3, 0, 1])


def test_trim_and_degree():
    assert Poly(K, [1, 0, 0]).degree == 0
    assert Poly(K).degree == -1
    assert Poly(K, [0, 0]).is_zero()


def test_recenter_example():
    g = recenter(cubic, pi)
    assert g == Poly(K, [0, 6, 3 * pi, 1])


def test_hasse_matches_binomials():
    f = Poly(K, [1, 2, 3, 4, 5])
    assert hasse_derivative(f, 2) == Poly(K, [3 * comb(2, 2), 4 * comb(3, 2), 5 * comb(4, 2)])
    assert hasse_derivative(f, 9).is_zero()
    with pytest.raises(ValueError):
        hasse_derivative(f, -1)


def test_from_roots():
    f = from_roots([0, pi, -pi], 1, K)
    assert f == cubic
    assert from_roots([], 5, K) == Poly(K, [5])


def test_fp_poly():
    assert str(FpPoly(3, (1, 0, 2))) == "1 + 2*T^2"
    assert str(FpPoly(3, (0, 0, 0, 1))) == "T^3"
    assert FpPoly(3, (0, 0, 0, 1)).derivative().is_zero()
    assert reduce_residue(cubic) == FpPoly(3, (0, 0, 0, 1))
    with pytest.raises(NegativeValuation):
        reduce_residue(Poly(K, [pi_power(K, -1)]))


def test_json_round_trip():
    f = Poly(K, [0, pi, 0, 1])
    assert Poly.from_json(K, f.to_json()) == f


polys = st.lists(elements(K, -2, 4), min_size=0, max_size=6).map(lambda cs: Poly(K, cs))


@settings(max_examples=50, deadline=None)
@given(polys, elements(K, 0, 4), elements(K, 0, 4))
def test_taylor_shift_is_substitution(f, a, x):
    assert evaluate(taylor_shift(f, a), x) == evaluate(f, x + a)


@settings(max_examples=50, deadline=None)
@given(polys, elements(K, 0, 4))
def test_recenter_coefficients_are_hasse_values(f, a):
    g = recenter(f, a)
    for i in range(1, f.degree + 1):
        assert g.coeff(i) == evaluate(hasse_derivative(f, i), a)
    assert g.coeff(0) == 0


@settings(max_examples=30, deadline=None)
@given(polys, polys, elements(K, 0, 4))
def test_product_rule(f, g, x):
    assert evaluate(derivative(f * g), x) == evaluate(derivative(f) * g + f * derivative(g), x)


def test_roots_vanish():
    rng = random.Random(0)
    roots = [pi_power(K, rng.randint(0, 4)) * rng.randint(1, 5) for _ in range(5)]
    f = from_roots(roots, 1, K)
    assert all(evaluate(f, r) == 0 for r in roots)
