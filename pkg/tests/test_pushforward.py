from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berkdisc.disc_morphism import DiscMorphism
from berkdisc.errors import BranchedFiber, InconsistentCount, NotRealizable
from berkdisc.fiber import CountFunction, count_function, validate_fiber
from berkdisc.polygon import Domain, from_lines
from berkdisc.polynomial import Poly
from berkdisc.pushforward import (
    Multiradius,
    check_main_theorem_disc,
    multiradius_bruteforce,
    multiradius_from_count,
    multiradius_multi_component,
    reconstruct_profile_from_count,
    star_product,
)
from berkdisc.radiality import Status
from berkdisc.valued_field import FieldParams

F = Fraction
K = FieldParams(3, 2)
pi = K.pi()
cubic = DiscMorphism(Poly(K, [0, -3, 0, 1]))
cubic_nf = CountFunction((F(3, 2),), (1, 3))


def test_block_formula():
    assert multiradius_from_count(CountFunction((), (1,)), 1).entries == (0,)
    assert multiradius_from_count(cubic_nf, 3).entries == (F(3, 2), F(3, 2), 0)
    assert multiradius_from_count(CountFunction((), (1,)), 3).entries == (0, 0, 0)
    nf = CountFunction((F(1, 3), F(7, 6)), (1, 2, 4))
    assert multiradius_from_count(nf, 4).entries == (F(7, 6), F(7, 6), F(1, 3), 0)


def test_block_formula_rejects():
    with pytest.raises(InconsistentCount):
        multiradius_from_count(CountFunction((1,), (2, 3)), 3)
    with pytest.raises(InconsistentCount):
        multiradius_from_count(CountFunction((1,), (1, 5)), 3)
    with pytest.raises(InconsistentCount):
        multiradius_from_count(CountFunction((1, 2), (1, 3, 2)), 3)


def test_display():
    mr = multiradius_from_count(cubic_nf, 3)
    js = mr.to_json(3)
    assert js["entries_lambda"] == ["3/2", "3/2", "0/1"]
    assert js["entries_radius_p"][-1] == "1"


def test_bruteforce_cubic():
    fd = validate_fiber(cubic, 0, [0, pi, -pi])
    assert multiradius_bruteforce(fd).entries == (F(3, 2), F(3, 2), 0)
    Fid = DiscMorphism(Poly(K, [0, 1]))
    assert multiradius_bruteforce(validate_fiber(Fid, 0, [0])).entries == (0,)
    with pytest.raises(BranchedFiber):
        multiradius_bruteforce(validate_fiber(DiscMorphism(Poly(K, [0, 0, 1])), 0, [0, 0]))


def test_formula_matches_bruteforce_on_fixtures(fixture_set):
    n = 0
    for fx in fixture_set.values():
        for fd in fx.fibers:
            mr = multiradius_from_count(count_function(fd), fd.d)
            assert multiradius_bruteforce(fd) == mr
            assert mr.entries.count(0) == 1  # exactly one entry of radius 1
            assert len(mr) == fd.d
            n += 1
    assert n >= 15


def test_star_product():
    one = Multiradius((0,))
    assert star_product(one, one).entries == (0, 0)
    assert star_product(Multiradius((F(1, 2), 0)), Multiradius((F(3, 2),))).entries == (F(3, 2), F(1, 2), 0)


mr_st = st.lists(st.fractions(min_value=0, max_value=5, max_denominator=6), max_size=5).map(
    lambda xs: Multiradius(tuple(sorted(xs, reverse=True)))
)


@settings(max_examples=60, deadline=None)
@given(mr_st, mr_st, mr_st)
def test_star_product_laws(u, v, w):
    assert star_product(u, v) == star_product(v, u)
    assert star_product(star_product(u, v), w) == star_product(u, star_product(v, w))
    assert len(star_product(u, v)) == len(u) + len(v)


def test_multi_component():
    sq = multiradius_multi_component([(cubic_nf, 3), (cubic_nf, 3)])
    assert sq.entries == (F(3, 2),) * 4 + (0, 0)
    assert sq.entries.count(0) == 2
    assert multiradius_multi_component([(cubic_nf, 3)]) == multiradius_from_count(cubic_nf, 3)


def test_reconstruct():
    assert reconstruct_profile_from_count(CountFunction((), (1,)), 1) == from_lines([(0, 1)], Domain.POS)
    P = reconstruct_profile_from_count(cubic_nf, 3)
    assert P == cubic.local_polygon(0)
    with pytest.raises(NotRealizable):
        reconstruct_profile_from_count(CountFunction((1,), (1, 2)), 3)


def test_main_theorem_reports(fixture_set):
    rep = check_main_theorem_disc(cubic, fixture_set["cubic_radial"].fibers)
    assert rep.verdict.status is Status.CERTIFIED and rep.equal
    rep = check_main_theorem_disc(fixture_set["pte4_two_scales"].F, fixture_set["pte4_two_scales"].fibers)
    assert rep.verdict.status is Status.REFUTED and not rep.equal
    assert rep.to_json(3)["consistent"]
    with pytest.raises(ValueError):
        check_main_theorem_disc(cubic, fixture_set["cubic_radial"].fibers[:1])
