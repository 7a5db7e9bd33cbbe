"""Dense polynomials over K_N with Hasse derivatives and Taylor recentering."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import NegativeValuation
from .valued_field import INF, FieldElement, FieldParams, coerce, element_from_json


class Poly:
    """``sum a_i T^i`` with coefficients in K_N, trailing zeros trimmed.

    The zero polynomial has ``coeffs == ()`` and ``degree == -1``.
    """

    __slots__ = ("params", "coeffs")

    def __init__(self, params: FieldParams, coeffs: Sequence = ()):
        cs = [coerce(params, c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.params.zero()

    def valuations(self) -> list:
        return [c.valuation() for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.params, self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.params, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return Poly(self.params, [-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = coerce(self.params, other)
            return Poly(self.params, [a * c for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly(self.params)
        out = [self.params.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.params, out)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            if not mono:
                terms.append(f"({c})")
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, params: FieldParams, data) -> "Poly":
        coeffs = data["coeffs"] if isinstance(data, dict) else data
        return cls(params, [element_from_json(params, c) for c in coeffs])

    @classmethod
    def monomial(cls, params: FieldParams, i: int, c=1) -> "Poly":
        return cls(params, [0] * i + [c])


def evaluate(f: Poly, x) -> FieldElement:
    """Horner evaluation."""
    x = coerce(f.params, x)
    acc = f.params.zero()
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def hasse_derivative(f: Poly, i: int) -> Poly:
    """``f^[i] = (1/i!) d^i f / dT^i``; coefficient of ``T^j`` is ``C(i+j, i) a_{i+j}``."""
    if i < 0:
        raise ValueError("order of a Hasse derivative must be nonnegative")
    return Poly(f.params, [c * comb(k, i) for k, c in enumerate(f.coeffs) if k >= i])


def derivative(f: Poly) -> Poly:
    return hasse_derivative(f, 1)


def taylor_shift(f: Poly, a) -> Poly:
    """Coefficients of ``f(T + a)`` by repeated synthetic division."""
    a = coerce(f.params, a)
    c = list(f.coeffs)
    n = len(c)
    if a.is_zero():
        return Poly(f.params, c)
    for k in range(n - 1):
        for j in range(n - 2, k - 1, -1):
            c[j] = c[j] + a * c[j + 1]
    return Poly(f.params, c)


def recenter(f: Poly, a) -> Poly:
    """``g(T) = f(T + a) - f(a)``, whose ``T^i`` coefficient is ``f^[i](a)``."""
    g = taylor_shift(f, a)
    if g.is_zero():
        return g
    return Poly(f.params, [f.params.zero()] + list(g.coeffs[1:]))


def from_roots(roots: Sequence[FieldElement], leading=1, params: FieldParams | None = None) -> Poly:
    """``leading * prod (T - r)``."""
    if params is None:
        if isinstance(leading, FieldElement):
            params = leading.params
        elif roots:
            params = roots[0].params
        else:
            raise ValueError("params required for an empty root list with a rational leading coefficient")
    out = Poly(params, [leading])
    for r in roots:
        out = out * Poly(params, [-coerce(params, r), 1])
    return out


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p, coefficients in ``range(p)``, trailing zeros trimmed."""

    p: int
    coeffs: tuple

    def __post_init__(self):
        cs = [int(c) % self.p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __str__(self):
        """Ascending-degree form, e.g. ``1 + 2*T^2``."""
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "T" if i == 1 else f"T^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def reduce_residue(f: Poly) -> FpPoly:
    """Coefficientwise reduction to F_p[T]."""
    for c in f.coeffs:
        v = c.valuation()
        if v is not INF and v < 0:
            raise NegativeValuation(f"coefficient {c} has valuation {v} < 0")
    return FpPoly(f.params.p, tuple(c.residue() for c in f.coeffs))
