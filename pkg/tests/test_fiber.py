import random
from fractions import Fraction

import pytest

from berkdisc.disc_morphism import DiscMorphism
from berkdisc.errors import NotConverged, RootMismatch, RootOutsideDisc, WrongCount
from berkdisc.fiber import (
    CountFunction,
    check_mult_sum,
    count_at,
    count_function,
    distinct_preimages,
    newton_refine,
    preimage_points,
    validate_fiber,
)
from berkdisc.polynomial import Poly, evaluate, from_roots
from berkdisc.valued_field import FieldParams, pi_power

F = Fraction
K = FieldParams(3, 2)
pi = K.pi()
cubic = DiscMorphism(Poly(K, [0, -3, 0, 1]))
fd0 = validate_fiber(cubic, 0, [0, pi, -pi])


def test_validate():
    Fid = DiscMorphism(Poly(K, [0, 1]))
    assert validate_fiber(Fid, 0, [0]).roots == (K.zero(),)
    with pytest.raises((WrongCount, RootMismatch)):
        validate_fiber(cubic, 0, [0, pi, pi])
    with pytest.raises(WrongCount):
        validate_fiber(cubic, 0, [0, pi])
    with pytest.raises(RootOutsideDisc):
        validate_fiber(cubic, 0, [0, pi, K.one()])
    with pytest.raises(RootMismatch):
        validate_fiber(cubic, 0, [0, pi, 2 * pi])


def test_preimages_and_counts():
    assert [p.lam for p in preimage_points(fd0, 2)] == [1, 1, 1]
    assert [p.lam for p in preimage_points(fd0, F(3, 4))] == [F(1, 4)] * 3
    assert count_at(fd0, 1) == 1
    assert count_at(fd0, 2) == 3
    assert count_at(fd0, F(3, 2)) == 1  # left-continuity at the jump
    with pytest.raises(ValueError):
        preimage_points(fd0, 0)


def test_count_function_cubic():
    nf = count_function(fd0)
    assert nf.jumps == (F(3, 2),) and nf.values == (1, 3)
    assert nf.at(F(3, 2)) == 1 and nf.at(F(8, 5)) == 3
    assert CountFunction.from_json(nf.to_json()) == nf


def test_count_function_identity():
    Fid = DiscMorphism(Poly(K, [0, 1]))
    nf = count_function(validate_fiber(Fid, 0, [0]))
    assert nf.jumps == () and nf.values == (1,)


def test_two_jump_fixture(fixture_set):
    fd = fixture_set["two_jumps"].fibers[0]
    nf = count_function(fd)
    assert len(nf.jumps) == 2
    assert nf.values == (1, 2, 4)


def test_mult_sum_cubic():
    r = check_mult_sum(fd0, 1)
    assert r.multiplicities == (3,) and r.count == 1
    r = check_mult_sum(fd0, 2)
    assert r.multiplicities == (1, 1, 1) and r.count == 3


def test_count_function_matches_count_at(fixture_set):
    # oracle equivalence: jump thresholds vs direct deduplication
    rng = random.Random(3)
    for fx in fixture_set.values():
        for fd in fx.fibers:
            nf = count_function(fd)
            lams = [F(rng.randint(1, 600), 100) for _ in range(20)] + list(nf.jumps)
            lams += [j + F(1, 1000) for j in nf.jumps]
            prev = None
            for lam in sorted(lams):
                n = count_at(fd, lam)
                assert nf.at(lam) == n
                assert prev is None or n >= prev
                prev = n
            if nf.jumps:
                assert count_at(fd, nf.jumps[0] / 2) == 1


def test_radial_fixtures_share_count_functions(fixture_set):
    for name in ("identity", "cubic_radial", "quadratic_p2", "pte3_p3"):
        fibers = fixture_set[name].fibers
        nfs = [count_function(fd) for fd in fibers]
        assert all(nf == nfs[0] for nf in nfs), name


def test_distinct_preimages_are_distinct():
    pts = distinct_preimages(fd0, 2)
    assert all(a != b for i, a in enumerate(pts) for b in pts[i + 1 :])


def test_newton_refine():
    # T^3 - 3T = c with a simple root near pi
    c = evaluate(cubic.f, pi + 9)
    r = newton_refine(cubic, c, pi, 12)
    assert (evaluate(cubic.f, r) - c).valuation() >= 6
    with pytest.raises(NotConverged):
        newton_refine(DiscMorphism(Poly(K, [0, 0, 1])), 3, 0, 4)


def test_branched_fiber_counts():
    sq = DiscMorphism(Poly(K, [0, 0, 1]))
    fd = validate_fiber(sq, 0, [0, 0])
    assert fd.is_branched()
    assert count_function(fd).values == (1,)
    r = check_mult_sum(fd, 1)
    assert r.multiplicities == (2,) and r.total == 2


def test_from_roots_fiber_validates():
    K12 = FieldParams(3, 12)
    roots = [K12.zero(), pi_power(K12, 6), K12.pi(), K12.pi() + pi_power(K12, 6)]
    F_ = DiscMorphism(from_roots(roots, 1, K12))
    assert validate_fiber(F_, 0, roots).d == 4
