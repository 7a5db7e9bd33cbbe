"""Concave piecewise-affine envelopes ``lambda -> min_i (v_i + i*lambda)``.

A :class:`NewtonPolygon` is stored as a sorted tuple of break abscissae and
one ``(slope, intercept)`` piece per interval between them, left to right.
Envelopes are concave (slopes strictly decrease); their inverses, also
represented by this class, are convex.  The envelope is built
from the lower convex hull of the points ``(i, v_i)``: hull edges of slope
``s`` become breaks at ``lambda = -s``.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptyInput, NotInvertible, OutOfDomain
from .valued_field import INF, format_rational


class Domain(enum.Enum):
    REAL = "real"  # all of R: counts every root in an algebraic closure
    NONNEG = "nonneg"  # lambda >= 0: the closed unit disc
    POS = "pos"  # lambda > 0: the open unit disc

    def contains(self, lam) -> bool:
        if lam is INF:
            return False
        if self is Domain.REAL:
            return True
        if self is Domain.NONNEG:
            return lam >= 0
        return lam > 0


def _lower_hull(points):
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (x1 - x0) * (pt[1] - y0) - (y1 - y0) * (pt[0] - x0) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


class NewtonPolygon:
    __slots__ = ("domain", "breaks", "pieces", "lines")

    def __init__(self, domain: Domain, breaks: Sequence, pieces: Sequence, lines: Sequence = ()):
        breaks = tuple(Fraction(b) for b in breaks)
        pieces = tuple((Fraction(s), Fraction(c)) for s, c in pieces)
        if len(pieces) != len(breaks) + 1:
            raise ValueError("need exactly one more piece than breaks")
        # merge pieces that do not actually break
        bs, ps = [], [pieces[0]]
        for b, piece in zip(breaks, pieces[1:]):
            if piece == ps[-1]:
                continue
            if ps[-1][0] * b + ps[-1][1] != piece[0] * b + piece[1]:
                raise ValueError(f"pieces disagree at break {b}")
            bs.append(b)
            ps.append(piece)
        if any(b2 <= b1 for b1, b2 in zip(bs, bs[1:])):
            raise ValueError("breaks must be strictly increasing")
        for b in bs:
            if not domain.contains(b):
                raise ValueError(f"break {b} outside domain {domain.value}")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "breaks", tuple(bs))
        object.__setattr__(self, "pieces", tuple(ps))
        object.__setattr__(self, "lines", tuple(lines))

    def __setattr__(self, name, value):
        raise AttributeError("NewtonPolygon is immutable")

    # -- derived data -------------------------------------------------------
    @property
    def slopes(self) -> tuple:
        return tuple(s for s, _ in self.pieces)

    @property
    def vertices(self) -> tuple:
        return tuple((b, self.eval(b)) for b in self.breaks)

    @property
    def slope_before_first_break(self):
        return self.pieces[0][0]

    @property
    def slope_after_last_break(self):
        return self.pieces[-1][0]

    def _check(self, lam):
        if not self.domain.contains(lam):
            raise OutOfDomain(f"lambda = {lam} outside domain {self.domain.value}")
        return Fraction(lam)

    def eval(self, lam) -> Fraction:
        lam = self._check(lam)
        s, c = self.pieces[bisect_left(self.breaks, lam)]
        return s * lam + c

    __call__ = eval

    def slope_left(self, lam):
        lam = self._check(lam)
        return self.pieces[bisect_left(self.breaks, lam)][0]

    def slope_right(self, lam):
        lam = self._check(lam)
        return self.pieces[bisect_right(self.breaks, lam)][0]

    def root_count_at(self, lam) -> int:
        """``d^- - d^+`` at ``lam``: the number of roots of valuation ``lam``."""
        n = self.slope_left(lam) - self.slope_right(lam)
        return int(n) if Fraction(n).denominator == 1 else n

    def equals(self, other: "NewtonPolygon") -> bool:
        """Equality of envelopes (not of the lines they were built from)."""
        return self.domain == other.domain and self.breaks == other.breaks and self.pieces == other.pieces

    def __eq__(self, other):
        if not isinstance(other, NewtonPolygon):
            return NotImplemented
        return self.equals(other)

    def __hash__(self):
        return hash((self.domain, self.breaks, self.pieces))

    def __repr__(self):
        segs = ", ".join(f"{c}+{s}*l" if c else f"{s}*l" for s, c in self.pieces)
        return f"NewtonPolygon({self.domain.value}; min({segs}); breaks={[str(b) for b in self.breaks]})"

    def invert(self) -> "NewtonPolygon":
        """Inverse function of a strictly increasing polygon.

        On ``pos``/``nonneg`` domains the polygon must tend to 0 at 0 so the
        inverse lives on the same domain.
        """
        breaks, pieces = list(self.breaks), list(self.pieces)
        if self.domain is Domain.NONNEG and breaks and breaks[0] == 0:
            breaks, pieces = breaks[1:], pieces[1:]
        if any(s <= 0 for s, _ in pieces):
            raise NotInvertible("polygon is not strictly increasing")
        if self.domain is not Domain.REAL and pieces[0][1] != 0:
            raise NotInvertible("polygon does not vanish at 0; image is not the whole domain")
        new_breaks = [s * b + c for b, (s, c) in zip(breaks, pieces)]
        new_pieces = [(1 / s, -c / s) for s, c in pieces]
        return NewtonPolygon(self.domain, new_breaks, new_pieces)

    def to_json(self) -> dict:
        return {
            "domain": self.domain.value,
            "vertices": [[format_rational(b), format_rational(v)] for b, v in self.vertices],
            "slopes": [format_rational(s) for s in self.slopes],
            "pieces": [[format_rational(s), format_rational(c)] for s, c in self.pieces],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NewtonPolygon":
        domain = Domain(data["domain"])
        pieces = [(Fraction(s), Fraction(c)) for s, c in data["pieces"]]
        breaks = [Fraction(b) for b, _ in data["vertices"]]
        return cls(domain, breaks, pieces)


def from_lines(lines: Iterable, domain: Domain = Domain.REAL) -> NewtonPolygon:
    """Lower envelope of the lines ``v + i*lambda`` restricted to ``domain``.

    ``lines`` holds ``(valuation, slope)`` pairs; lines with infinite
    valuation are ignored.
    """
    lines = tuple(lines)
    best: dict = {}
    for v, i in lines:
        if v is INF:
            continue
        v = Fraction(v)
        if i not in best or v < best[i]:
            best[i] = v
    if not best:
        raise EmptyInput("no line with finite valuation")
    hull = _lower_hull(sorted((Fraction(i), v) for i, v in best.items()))
    # walk from the steepest line (active as lambda -> -inf) downwards
    hull.reverse()
    pieces = [(i, v) for i, v in hull]
    breaks = [(v1 - v0) / (i0 - i1) for (i0, v0), (i1, v1) in zip(hull, hull[1:])]
    start = 0
    while start < len(breaks) and not domain.contains(breaks[start]):
        start += 1
    return NewtonPolygon(domain, breaks[start:], pieces[start:], lines)


def from_pieces(domain: Domain, breaks: Sequence, pieces: Sequence) -> NewtonPolygon:
    return NewtonPolygon(domain, breaks, pieces)


def polygon_of(coeff_valuations: Sequence, domain: Domain = Domain.REAL) -> NewtonPolygon:
    """Valuation polygon of a polynomial given its coefficient valuations."""
    return from_lines(((v, i) for i, v in enumerate(coeff_valuations)), domain)
