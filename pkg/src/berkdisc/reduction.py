"""Residual data at the Gauss point.

The residue field of K_N is always F_p, so the Frobenius twist on
coefficients is trivial and the split ``f~ = g(T^{p^r})`` is a reindexing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstantInput, DegreeDrop, NotIntegral
from .polynomial import FpPoly, Poly
from .valued_field import INF


def reduce_at_gauss(f: Poly) -> FpPoly:
    if f.is_zero():
        raise DegreeDrop("zero polynomial")
    for i, c in enumerate(f.coeffs):
        v = c.valuation()
        if v is not INF and v < 0:
            raise NotIntegral(f"a_{i} has valuation {v} < 0")
    if f.coeffs[-1].valuation() != 0:
        raise DegreeDrop("leading coefficient is not a unit")
    return FpPoly(f.params.p, tuple(c.residue() for c in f.coeffs))


def insep_sep_split(ft: FpPoly):
    """``(r, g)`` with ``r`` maximal such that ``ft = g(T^{p^r})``."""
    if ft.degree < 1:
        raise ConstantInput("constant reduction has no separable part")
    p, cs, r = ft.p, ft.coeffs, 0
    while all(c == 0 for i, c in enumerate(cs) if i % p):
        cs = cs[::p]
        r += 1
    return r, FpPoly(p, cs)


@dataclass(frozen=True)
class ResidualReport:
    f_tilde: FpPoly
    r: int
    g: FpPoly
    s_deg: int
    i_deg: int
    classification: str
    uniformly_ramified: bool

    @property
    def radicial(self) -> bool:
        return self.s_deg == 1

    @property
    def separable(self) -> bool:
        return self.i_deg == 1

    def to_json(self) -> dict:
        return {
            "f_tilde": str(self.f_tilde),
            "r": self.r,
            "g": str(self.g),
            "s": self.s_deg,
            "i": self.i_deg,
            "class": self.classification,
            "uniform": self.uniformly_ramified,
        }


def classify(ft: FpPoly, r: int | None = None, g: FpPoly | None = None) -> ResidualReport:
    if r is None or g is None:
        r, g = insep_sep_split(ft)
    s_deg, i_deg = g.degree, ft.p**r
    dg = g.derivative()
    uniform = dg.degree == 0
    if i_deg == 1 and uniform:
        label = "etale"
    elif s_deg == 1:
        label = "radicial"
    elif i_deg == 1:
        label = "separable"
    else:
        label = "mixed"
    return ResidualReport(ft, r, g, s_deg, i_deg, label, uniform)


def residual_report(f: Poly) -> ResidualReport:
    return classify(reduce_at_gauss(f))
