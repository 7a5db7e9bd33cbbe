"""Finite polynomial self-maps of the open unit disc and their local invariants.

For a center ``a`` in the disc the local valuation polygon is the envelope
of the lines ``v(f^[i](a)) + i*lambda`` (``i = 1..d``) on ``lambda > 0``.
Reading it at ``lambda`` gives the image radius of the disc of radius
``p^-lambda`` around ``a``; its left slope is the multiplicity of ``f`` at
``zeta_{a, lambda}`` and its right slope the degree on the open disc.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundaryZeros, LambdaNotInValueGroup, NotCompatible, NotFinite, NotInDisc
from .polygon import Domain, NewtonPolygon, from_lines, polygon_of
from .polynomial import Poly, derivative, evaluate, recenter
from .valued_field import INF, FieldElement, Valuation, coerce, pi_power, random_unit


@dataclass(frozen=True, eq=False)
class DiscPoint:
    """The point ``zeta_{center, p^-lam}``; ``lam = INF`` is the rational point itself."""

    center: FieldElement
    lam: Valuation

    def __post_init__(self):
        v = self.center.valuation()
        if not (v is INF or v > 0):
            raise NotInDisc(f"center {self.center} has valuation {v}, not in the open unit disc")
        if self.lam is not INF:
            lam = Fraction(self.lam)
            if lam < 0:
                raise ValueError("lambda must be >= 0")
            object.__setattr__(self, "lam", lam)

    def __eq__(self, other):
        if not isinstance(other, DiscPoint):
            return NotImplemented
        if self.lam != other.lam:
            return False
        return (self.center - other.center).valuation() >= self.lam

    def __hash__(self):
        return hash(self.lam)

    def __repr__(self):
        return f"DiscPoint({self.center}, lam={self.lam})"


class DiscMorphism:
    """A validated finite morphism ``f: D(0,1^-) -> D(0,1^-)`` given by a polynomial.

    Requires ``a_0 = 0``, ``v(a_d) = 0`` and ``v(a_i) > 0`` for ``0 < i < d``.
    """

    def __init__(self, f: Poly):
        if f.is_zero() or f.degree < 1:
            raise NotFinite("a constant polynomial is not a finite morphism")
        if not f.coeffs[0].is_zero():
            raise NotCompatible(f"a_0 = {f.coeffs[0]} is nonzero; coordinates are not compatible")
        d = f.degree
        vd = f.coeffs[d].valuation()
        if vd != 0:
            raise NotFinite(f"leading coefficient has valuation {vd}, expected 0")
        for i in range(1, d):
            v = f.coeffs[i].valuation()
            if v is INF or v > 0:
                continue
            if v < 0:
                raise NotFinite(f"a_{i} has negative valuation {v}; f does not preserve the disc")
            raise BoundaryZeros(f"a_{i} is a unit; f has degree < {d} on the open disc")
        self.f = f
        self.params = f.params
        self.d = d
        self._polygons: dict = {}
        self._expansions: dict = {}

    def __repr__(self):
        return f"DiscMorphism({self.f}; p={self.params.p}, N={self.params.N})"

    def _center(self, a) -> FieldElement:
        a = coerce(self.params, a)
        v = a.valuation()
        if not (v is INF or v > 0):
            raise NotInDisc(f"{a} has valuation {v}, not in the open unit disc")
        return a

    def expansion(self, a) -> Poly:
        """The ``(T_a, S_f(a))`` expansion ``sum_{i>=1} f^[i](a) T^i``."""
        a = self._center(a)
        g = self._expansions.get(a)
        if g is None:
            g = self._expansions[a] = recenter(self.f, a)
        return g

    def local_polygon(self, a) -> NewtonPolygon:
        a = self._center(a)
        P = self._polygons.get(a)
        if P is None:
            g = self.expansion(a)
            P = from_lines(((g.coeff(i).valuation(), i) for i in range(1, self.d + 1)), Domain.POS)
            self._polygons[a] = P
        return P

    def profile(self, a) -> NewtonPolygon:
        """The profile at ``a`` in valuation coordinates: the same envelope as
        :meth:`local_polygon`, read as radius ``p^-lam`` -> image radius."""
        return self.local_polygon(a)

    def _finite_lambda(self, lam) -> Fraction:
        if lam is INF:
            raise ValueError("lambda must be finite")
        lam = Fraction(lam)
        if lam <= 0:
            raise ValueError(f"lambda must be > 0, got {lam}")
        return lam

    def multiplicity(self, pt: DiscPoint) -> int:
        """Geometric ramification index at ``pt``: the left slope there."""
        lam = self._finite_lambda(pt.lam)
        return int(self.local_polygon(pt.center).slope_left(lam))

    def restriction_degree(self, pt: DiscPoint) -> int:
        """Degree of ``f`` on the open disc ``D(center, p^-lam -)``: the right slope."""
        lam = self._finite_lambda(pt.lam)
        return int(self.local_polygon(pt.center).slope_right(lam))

    def image_lambda(self, a, lam) -> Fraction:
        """``f(D(a, p^-lam)) = D(f(a), p^-image_lambda)``."""
        return self.local_polygon(a).eval(self._finite_lambda(lam))

    def is_etale(self) -> bool:
        """True iff ``f'`` has no zero in the open unit disc."""
        df = derivative(self.f)
        if df.coeff(0).is_zero():
            return False
        P = polygon_of(df.valuations(), Domain.REAL)
        return not any(b > 0 for b in P.breaks)

    def generic_eval_valuation(self, a, lam, seed=0, trials: int = 8) -> Valuation:
        """Monte Carlo estimate of ``v_a(f, lam)``.

        Returns ``min v(f(a+t) - f(a))`` over ``t = u * pi^(lam*N)`` with random
        units ``u``.  Always ``>=`` the polygon value; equal for generic ``u``.
        """
        lam = self._finite_lambda(lam)
        N = self.params.N
        if (lam * N).denominator != 1:
            raise LambdaNotInValueGroup(f"lambda = {lam} is not in (1/{N})Z")
        rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        g = self.expansion(a)
        scale = pi_power(self.params, int(lam * N))
        best = INF
        for _ in range(trials):
            t = random_unit(self.params, rng) * scale
            v = evaluate(g, t).valuation()
            if v < best:
                best = v
        return best


def validate(f: Poly) -> DiscMorphism:
    return DiscMorphism(f)
