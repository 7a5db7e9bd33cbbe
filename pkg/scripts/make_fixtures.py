"""Regenerate fixtures/*.json.

Second fibers come from equal-power-sum root sets: if A and B share their
first d-1 power sums then prod(T - a) - prod(T - b) is a constant, so the
polynomial with roots A also splits over a point with roots B.
"""

import sys
from fractions import Fraction
from pathlib import Path

from berkdisc.disc_morphism import DiscMorphism
from berkdisc.fiber import validate_fiber
from berkdisc.io import Fixture, dump_fixture
from berkdisc.polynomial import Poly, evaluate, from_roots
from berkdisc.valued_field import FieldParams, pi_power


def split_pair(p, N, A, B):
    K = FieldParams(p, N)
    pi = K.pi()
    RA, RB = [pi * a for a in A], [pi * b for b in B]
    F = DiscMorphism(from_roots(RA, 1, K))
    return F, [validate_fiber(F, 0, RA), validate_fiber(F, evaluate(F.f, RB[0]), RB)]


def build():
    out = {}
    K = FieldParams(3, 2)
    pi = K.pi()
    F = DiscMorphism(Poly(K, [0, 1]))
    out["identity"] = Fixture(F, [validate_fiber(F, 0, [0]), validate_fiber(F, pi, [pi])], meta={"expect": "radial"})

    F = DiscMorphism(Poly(K, [0, -3, 0, 1]))
    b = K(Fraction(6, 5))
    u, w = K(Fraction(-3, 5)), pi * Fraction(4, 5)
    fibers = [validate_fiber(F, 0, [0, pi, -pi]), validate_fiber(F, evaluate(F.f, b), [b, u + w, u - w])]
    out["cubic_radial"] = Fixture(F, fibers, meta={"expect": "radial"})

    K2 = FieldParams(2, 2)
    q = K2.pi()
    F = DiscMorphism(Poly(K2, [0, q, 1]))
    r = q * q
    fibers = [validate_fiber(F, 0, [0, -q]), validate_fiber(F, evaluate(F.f, r), [r, -q - r])]
    out["quadratic_p2"] = Fixture(F, fibers, meta={"expect": "radial"})

    F, fibers = split_pair(3, 2, [0, 4, 5], [1, 2, 6])
    out["pte3_p3"] = Fixture(F, fibers, meta={"expect": "radial"})
    F, fibers = split_pair(5, 2, [0, 4, 5], [1, 2, 6])
    out["pte3_p5"] = Fixture(F, fibers, meta={"expect": "refuted"})
    # distances 3*pi inside A but 9*pi inside B: two scales, differing N
    F, fibers = split_pair(3, 2, [0, 4, 7, 11], [1, 2, 9, 10])
    out["pte4_two_scales"] = Fixture(F, fibers, meta={"expect": "refuted"})

    F = DiscMorphism(Poly(K, [0, 0, 1]))
    fibers = [validate_fiber(F, 3, [pi, -pi]), validate_fiber(F, 9, [pi * pi, -pi * pi])]
    out["square_p3"] = Fixture(F, fibers, meta={"expect": "refuted"})

    K12 = FieldParams(3, 12)
    p1, p6 = K12.pi(), pi_power(K12, 6)
    roots = [K12.zero(), p6, p1, p1 + p6]
    F = DiscMorphism(from_roots(roots, 1, K12))
    out["two_jumps"] = Fixture(F, [validate_fiber(F, 0, roots)])

    F = DiscMorphism(Poly(K12, [0, p6, 0, 0, 0, 0, 1]))
    out["only_weakly"] = Fixture(F, [], meta={"expect": "refuted"})
    return out


def main(directory="fixtures"):
    d = Path(directory)
    d.mkdir(exist_ok=True)
    for name, fx in build().items():
        fx.name = name
        dump_fixture(fx, d / f"{name}.json")


if __name__ == "__main__":
    main(*sys.argv[1:])
