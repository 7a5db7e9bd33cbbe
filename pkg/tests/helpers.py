"""Seeded generators shared by the tests."""

import random
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from berkdisc.disc_morphism import DiscMorphism
from berkdisc.polynomial import Poly
from berkdisc.valued_field import FieldElement, FieldParams, pi_power, random_unit

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"

FIELDS = [FieldParams(3, 2), FieldParams(3, 12), FieldParams(5, 4)]


def random_element(params, rng, vmin=0, vmax=None, zero_ok=True):
    """``u * pi^k`` plus a higher-order tail, with ``vmin <= k <= vmax`` (in units of 1/N)."""
    if vmax is None:
        vmax = vmin + 2 * params.N
    if zero_ok and rng.random() < 0.15:
        return params.zero()
    k = rng.randint(vmin, vmax)
    x = random_unit(params, rng) * pi_power(params, k)
    if rng.random() < 0.5:
        x = x + random_unit(params, rng) * pi_power(params, k + rng.randint(1, params.N))
    return x


def random_morphism(params, d, rng) -> DiscMorphism:
    """A valid disc morphism of degree ``d``: ``a_0 = 0``, unit leading term, ``v(a_i) > 0`` between."""
    coeffs = [params.zero()]
    for _ in range(1, d):
        coeffs.append(random_element(params, rng, 1, 3 * params.N))
    coeffs.append(random_unit(params, rng))
    return DiscMorphism(Poly(params, coeffs))


def random_center(params, rng):
    return random_element(params, rng, 1, 2 * params.N)


def random_lambda(params, rng, hi=3):
    return Fraction(rng.randint(1, hi * params.N), params.N)


@st.composite
def elements(draw, params, vmin=-4, vmax=8, zero_ok=True):
    if zero_ok and draw(st.booleans()) and draw(st.booleans()):
        return params.zero()
    coeffs = draw(st.lists(st.fractions(min_value=-30, max_value=30, max_denominator=7), min_size=params.N, max_size=params.N))
    x = FieldElement(params, coeffs)
    if x.is_zero():
        return params.one() if not zero_ok else x
    return x * pi_power(params, draw(st.integers(vmin, vmax)))


@st.composite
def morphisms(draw, params, dmax=6):
    seed = draw(st.integers(0, 2**32 - 1))
    d = draw(st.integers(1, dmax))
    return random_morphism(params, d, random.Random(seed))
