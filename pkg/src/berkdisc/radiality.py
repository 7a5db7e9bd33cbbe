"""Radiality detection: dominating slopes, exact n-boundaries and a certificate.

A morphism is radial when its local polygon does not depend on the center.
:func:`radial_certificate` decides this exactly in the favourable case and
otherwise looks for a concrete pair of centers with different polygons.
Weak n-radiality for ``n >= 2`` is only ever refuted or supported by
sampling, never proved.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .disc_morphism import DiscMorphism
from .errors import NotCertified, NotWeaklyNRadial, ThetaIsZero
from .polygon import NewtonPolygon
from .polynomial import hasse_derivative
from .valued_field import INF, FieldParams, Valuation, pi_power, random_unit

DEFAULT_SEED = 20240617


def default_probes(params: FieldParams, seed=DEFAULT_SEED, units: int = 3) -> list:
    """``0`` and ``u * pi^j`` for ``j = 1..min(3N, 36)`` and a few seeded units ``u``."""
    rng = random.Random(seed)
    us = [random_unit(params, rng) for _ in range(units)]
    probes = [params.zero()]
    for j in range(1, min(3 * params.N, 36) + 1):
        pj = pi_power(params, j)
        probes.extend(u * pj for u in us)
    return probes


def _signature(P: NewtonPolygon, n: int):
    return P.slopes[:n], P.breaks[: n - 1]


@dataclass(frozen=True)
class NRadialReport:
    n: int
    dominating_slopes: tuple
    border: Valuation  # lambda of the shared (n-1)-th break; 0 for n = 1
    probes_checked: int


@dataclass(frozen=True)
class Refutation:
    n: int
    witness: tuple  # (a, a') with differing local data
    polygons: tuple


def weak_n_radial(F: DiscMorphism, n: int, probes: Optional[Sequence] = None):
    """Check that the first ``n`` slopes and ``n-1`` breaks agree on ``probes``.

    Returns an :class:`NRadialReport` or a :class:`Refutation`.  A report is
    evidence, not a proof.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if probes is None:
        probes = default_probes(F.params)
    probes = list(probes)
    if not probes:
        raise ValueError("empty probe set")
    ref = probes[0]
    P0 = F.local_polygon(ref)
    sig0 = _signature(P0, n)
    for a in probes[1:]:
        P = F.local_polygon(a)
        if _signature(P, n) != sig0:
            return Refutation(n, (ref, a), (P0, P))
    slopes, breaks = sig0
    if n == 1:
        border = Fraction(0)
    else:
        border = breaks[n - 2] if len(breaks) >= n - 1 else INF
    return NRadialReport(n, tuple(int(s) for s in slopes), border, len(probes))


def _theta_from_ratios(F: DiscMorphism, a, n: int, P: NewtonPolygon):
    """The n-th break via the ratio of Hasse-derivative valuations."""
    g = F.expansion(a)
    i_n = int(P.slopes[n - 1])
    v_n = g.coeff(i_n).valuation()
    best = INF
    for i in range(1, i_n):
        v = g.coeff(i).valuation()
        if v is INF:
            continue
        lam = (v - v_n) / (i_n - i)
        if lam < best:
            best = lam
    return best


def theta_n(F: DiscMorphism, a, n: int, probes: Optional[Sequence] = None, check: bool = True) -> Valuation:
    """The exact n-boundary at ``a`` in lambda-coordinates (``INF`` encodes 0).

    With ``check`` the morphism is first tested for weak n-radiality on the
    probe set.
    """
    if check:
        res = weak_n_radial(F, n, probes)
        if isinstance(res, Refutation):
            raise NotWeaklyNRadial(f"not weakly {n}-radial: witnesses {res.witness[0]} and {res.witness[1]}")
    P = F.local_polygon(a)
    if len(P.slopes) < n:
        raise NotWeaklyNRadial(f"polygon at {a} has only {len(P.slopes)} slopes")
    lam = P.breaks[n - 1] if len(P.breaks) >= n else INF
    alt = _theta_from_ratios(F, a, n, P)
    if alt != lam:
        raise AssertionError(f"envelope break {lam} disagrees with ratio formula {alt} at {a}")
    return lam


def i_next(F: DiscMorphism, a, n: int) -> int:
    """The slope right after the n-th break of the local polygon at ``a``."""
    P = F.local_polygon(a)
    if len(P.breaks) < n:
        raise ThetaIsZero(f"no {n}-th break at {a}")
    return int(P.slopes[n])


class Status(str, enum.Enum):
    CERTIFIED = "CertifiedRadial"
    REFUTED = "Refuted"
    UNDETERMINED = "Undetermined"


@dataclass
class RadialityVerdict:
    status: Status
    witness: Optional[tuple] = None
    profile: Optional[NewtonPolygon] = None
    c1_failures: list = field(default_factory=list)
    c2_failures: list = field(default_factory=list)
    evidence: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "witness": [w.to_json() for w in self.witness] if self.witness else [],
            "profile": self.profile.to_json() if self.profile is not None else None,
            "c1_failures": list(self.c1_failures),
            "c2_failures": list(self.c2_failures),
            "evidence": self.evidence,
        }


def _line_below(m: Fraction, i: int, P: NewtonPolygon) -> bool:
    """Does ``m + i*lambda`` dip strictly below ``P`` somewhere on ``lambda > 0``?

    ``line - P`` is convex, so it suffices to look near 0, at the breaks and
    at infinity.
    """
    s0, c0 = P.pieces[0]
    if m < c0 or (m == c0 and i < s0):
        return True
    if any(m + i * b < P.eval(b) for b in P.breaks):
        return True
    return i < P.pieces[-1][0]


def radial_certificate(
    F: DiscMorphism, probes: Optional[Sequence] = None, seed=DEFAULT_SEED, extra_probes: Sequence = ()
) -> RadialityVerdict:
    """Decide radiality of ``F`` where possible.

    With ``P`` the polygon at 0 and ``g_i = f^[i]``:

    * C1: for each slope ``i`` of ``P`` the constant term of ``g_i`` has the
      smallest valuation among its coefficients, so ``v(g_i(a))`` is the
      same for every ``a`` in the disc;
    * C2: for every ``i``, the line ``min_j v(coeff_j g_i) + i*lambda`` is
      ``>= P`` on ``lambda > 0``, so no other term can undercut ``P``.

    C1 and C2 together force every local polygon to equal ``P``, ties
    included.  If either fails, centers from ``probes`` are searched for a
    polygon different from ``P``; finding one refutes radiality, otherwise
    the verdict is Undetermined.  ``extra_probes`` (fiber roots, say) are
    searched before the default probes.
    """
    f, d = F.f, F.d
    P = F.local_polygon(0)
    active = {int(s) for s in P.slopes}
    c1, c2 = [], []
    for i in range(1, d + 1):
        g = hasse_derivative(f, i)
        vals = g.valuations()
        finite = [v for v in vals if v is not INF]
        if not finite:
            continue
        if i in active and any(v < vals[0] for v in vals[1:]):
            c1.append(i)
        if _line_below(min(finite), i, P):
            c2.append(i)
    if not c1 and not c2:
        return RadialityVerdict(Status.CERTIFIED, profile=P)

    if probes is None:
        probes = default_probes(F.params, seed)
    probes = list(extra_probes) + list(probes)
    zero = F.params.zero()
    for a in probes:
        if not F.local_polygon(a).equals(P):
            witness = (zero, a)
            if F.local_polygon(witness[0]).equals(F.local_polygon(witness[1])):
                raise AssertionError("witness pair does not differ")
            return RadialityVerdict(Status.REFUTED, witness=witness, c1_failures=c1, c2_failures=c2)
    return RadialityVerdict(
        Status.UNDETERMINED,
        c1_failures=c1,
        c2_failures=c2,
        evidence=f"certificate conditions failed (C1 {c1}, C2 {c2}) but all {len(probes)} probes share the polygon at 0",
    )


def profile_of_radial(F: DiscMorphism, verdict: Optional[RadialityVerdict] = None) -> NewtonPolygon:
    if verdict is None:
        verdict = radial_certificate(F)
    if verdict.status is not Status.CERTIFIED:
        raise NotCertified(f"radiality not certified ({verdict.status.value})")
    return verdict.profile
