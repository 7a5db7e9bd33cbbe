import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berkdisc.errors import EmptyInput, NotInvertible, OutOfDomain
from berkdisc.polygon import Domain, NewtonPolygon, from_lines, polygon_of
from berkdisc.valued_field import INF

F = Fraction


def test_cubic_envelope():
    P = from_lines([(0, 3), (1, 1)], Domain.POS)
    assert P.breaks == (F(1, 2),)
    assert P.slopes == (3, 1)
    assert P.eval(F(1, 2)) == F(3, 2)
    assert P.slope_left(F(1, 2)) == 3 and P.slope_right(F(1, 2)) == 1
    assert P.root_count_at(F(1, 2)) == 2
    assert P.vertices == ((F(1, 2), F(3, 2)),)


def test_domain_cuts_breaks():
    P = polygon_of([F(-1), 0, F(1, 2)], Domain.POS)  # hull break at lambda = 1 (-1 -> 0) kept, others cut
    assert all(b > 0 for b in P.breaks)
    with pytest.raises(OutOfDomain):
        P.eval(0)
    Q = polygon_of([F(1), 0], Domain.REAL)
    assert Q.breaks == (F(1),)


def test_infinite_lines_and_empty():
    P = from_lines([(INF, 1), (F(0), 2)], Domain.POS)
    assert P.slopes == (2,)
    with pytest.raises(EmptyInput):
        from_lines([(INF, 1)])


def test_invert():
    P = from_lines([(0, 3), (1, 1)], Domain.POS)
    Q = P.invert()
    assert Q.breaks == (F(3, 2),)
    assert Q.pieces == ((F(1, 3), 0), (1, -1))
    assert Q.eval(2) == 1
    with pytest.raises(NotInvertible):
        from_lines([(1, 2)], Domain.POS).invert()


def test_json_round_trip():
    P = from_lines([(0, 6), (F(1, 2), 3), (F(3, 4), 1)], Domain.POS)
    assert NewtonPolygon.from_json(P.to_json()) == P


def test_discontinuous_pieces_rejected():
    with pytest.raises(ValueError):
        NewtonPolygon(Domain.REAL, [1], [(2, 0), (1, 5)])


def _brute_min(lines, lam):
    return min(v + i * lam for v, i in lines if v is not INF)


lines_st = st.lists(
    st.tuples(st.fractions(min_value=-3, max_value=5, max_denominator=12), st.integers(0, 10)),
    min_size=1,
    max_size=8,
)


@settings(max_examples=80, deadline=None)
@given(lines_st, st.fractions(min_value=F(1, 24), max_value=6, max_denominator=24))
def test_envelope_equals_pointwise_min(lines, lam):
    P = from_lines(lines, Domain.POS)
    assert P.eval(lam) == _brute_min(lines, lam)


@settings(max_examples=80, deadline=None)
@given(lines_st)
def test_concave_and_breaks_are_crossings(lines):
    P = from_lines(lines, Domain.REAL)
    assert all(a > b for a, b in zip(P.slopes, P.slopes[1:]))
    for b in P.breaks:
        active = {i for v, i in lines if v + i * b == P.eval(b)}
        assert len(active) >= 2
        assert P.slope_left(b) == max(active) and P.slope_right(b) == min(active)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(min_value=0, max_value=4, max_denominator=6), min_size=1, max_size=6))
def test_invert_round_trip(vals):
    # lines through a first slope with zero intercept keep the inverse on the same domain
    lines = [(F(0), len(vals) + 1)] + [(v + F(1, 6), i + 1) for i, v in enumerate(vals)]
    P = from_lines(lines, Domain.POS)
    Q = P.invert()
    rng = random.Random(len(vals))
    for _ in range(5):
        lam = F(rng.randint(1, 300), 60)
        assert Q.eval(P.eval(lam)) == lam
    assert Q.invert() == P
