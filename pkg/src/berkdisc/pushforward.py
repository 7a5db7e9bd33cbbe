"""Multiradius of the pushforward of the constant connection, from count functions.

Radii are kept as exponents: an entry ``lam`` means radius ``p^-lam``, so
``lam = 0`` is radius 1.  Entries are sorted by nondecreasing radius, i.e.
nonincreasing ``lam``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .disc_morphism import DiscMorphism
from .errors import BranchedFiber, InconsistentCount, InvariantViolation, NotRealizable
from .fiber import CountFunction, FiberData, UnionFind, count_function
from .polygon import Domain, NewtonPolygon
from .radiality import RadialityVerdict, Status, radial_certificate
from .valued_field import format_rational


@dataclass(frozen=True)
class Multiradius:
    entries: tuple  # lambda exponents, nonincreasing

    def __post_init__(self):
        es = tuple(Fraction(e) for e in self.entries)
        if any(e < 0 for e in es):
            raise ValueError("multiradius exponents must be >= 0")
        if any(b > a for a, b in zip(es, es[1:])):
            raise ValueError("multiradius entries must be nondecreasing in radius")
        object.__setattr__(self, "entries", es)

    def __len__(self):
        return len(self.entries)

    def radii(self, p: int) -> list:
        """Decimal radii ``p^-lam``; for display only."""
        return [float(p) ** -float(e) for e in self.entries]

    def to_json(self, p: int | None = None) -> dict:
        out = {"entries_lambda": [format_rational(e) for e in self.entries]}
        if p is not None:
            out["entries_radius_p"] = [f"{r:.6g}" for r in self.radii(p)]
        return out


def multiradius_from_count(nf: CountFunction, d: int) -> Multiradius:
    """Block formula: the ``k``-th largest jump (smallest radius ``b_k``) fills
    ``N_k - N_{k+1}`` slots, with ``N_1`` replaced by ``d``.

    The remaining slots have radius 1: one slot when there are jumps, all
    ``d`` of them for a constant count function.
    """
    if d < 1:
        raise InconsistentCount("degree must be positive")
    vals = nf.values
    if vals[0] != 1:
        raise InconsistentCount(f"count is {vals[0]} near the boundary, expected 1")
    if any(b < a for a, b in zip(vals, vals[1:])):
        raise InconsistentCount("count function must be nondecreasing in lambda")
    if vals[-1] > d:
        raise InconsistentCount(f"count {vals[-1]} exceeds degree {d}")
    entries = []
    upper = d  # N_1 is replaced by d in the first block
    for k in range(len(nf.jumps) - 1, -1, -1):
        lower = vals[k]  # N at the jump itself (left-continuous in lambda)
        entries.extend([nf.jumps[k]] * (upper - lower))
        upper = lower
    entries.extend([Fraction(0)] * upper)
    if len(entries) != d:
        raise InconsistentCount(f"block formula produced {len(entries)} entries for degree {d}")
    return Multiradius(tuple(entries))


def _open_components(fd: FiberData, mu: Fraction) -> int:
    """Connected components of ``f^-1(D(c, p^-mu -))``.

    Each root ``r_i`` lies in the open disc of radius ``p^-lam_i`` with
    ``lam_i`` the source lambda over ``mu``; two roots share a component
    iff ``v(r_i - r_j) > lam_i``.
    """
    n = len(fd.roots)
    if mu == 0:
        return 1  # preimage of the whole disc is the whole disc
    lams = [fd.F.profile(r).invert().eval(mu) for r in fd.roots]
    uf = UnionFind(n)
    for i, j in combinations(range(n), 2):
        if (fd.roots[i] - fd.roots[j]).valuation() > lams[i]:
            uf.union(i, j)
    return uf.classes()


def multiradius_bruteforce(fd: FiberData, d: int | None = None) -> Multiradius:
    """``R_i = sup{s : #components of f^-1(D(c, s^-)) >= d - i + 1}`` by direct clustering.

    The component count only changes at the images of pairwise root
    distances, and the set of good ``s`` is closed at its upper end, so the
    supremum is attained on that finite candidate set.
    """
    if d is None:
        d = fd.d
    if fd.is_branched():
        raise BranchedFiber("fiber has repeated roots; the oracle needs an unbranched fiber")
    cands = {Fraction(0)}
    for i, j in combinations(range(len(fd.roots)), 2):
        cands.add(fd.F.image_lambda(fd.roots[i], (fd.roots[i] - fd.roots[j]).valuation()))
    ordered = sorted(cands)
    counts = [(mu, _open_components(fd, mu)) for mu in ordered]
    entries = []
    for i in range(1, d + 1):
        need = d - i + 1
        # largest radius = smallest mu with enough components
        hit = next((mu for mu, c in counts if c >= need), None)
        if hit is None:
            raise InvariantViolation(f"no radius with {need} components")
        entries.append(hit)
    return Multiradius(tuple(entries))


def star_product(u: Multiradius, v: Multiradius) -> Multiradius:
    return Multiradius(tuple(sorted(u.entries + v.entries, reverse=True)))


def multiradius_multi_component(parts: Sequence) -> Multiradius:
    out = Multiradius(())
    for nf, d in parts:
        out = star_product(out, multiradius_from_count(nf, d))
    return out


def reconstruct_profile_from_count(nf: CountFunction, d: int) -> NewtonPolygon:
    """Recover the profile from ``N``.

    Over target ``mu`` the source lambda grows with slope ``N(mu)/d``
    starting from 0; the profile is the inverse of that function.
    """
    for v in nf.values:
        if v < 1 or d % v:
            raise NotRealizable(f"count value {v} does not divide degree {d}")
    pieces, c = [], Fraction(0)
    slopes = [Fraction(v, d) for v in nf.values]
    for k, s in enumerate(slopes):
        pieces.append((s, c))
        if k < len(nf.jumps):
            mu = nf.jumps[k]
            c = s * mu + c - slopes[k + 1] * mu
    source = NewtonPolygon(Domain.POS, nf.jumps, pieces)
    return source.invert()


@dataclass
class MainTheoremReport:
    verdict: RadialityVerdict
    multiradii: list
    equal: bool

    def to_json(self, p: int | None = None) -> dict:
        return {
            "status": self.verdict.status.value,
            "multiradii": [m.to_json(p) for m in self.multiradii],
            "equal": self.equal,
            "consistent": not (self.verdict.status is Status.CERTIFIED and not self.equal),
        }


def check_main_theorem_disc(F: DiscMorphism, fibers: Sequence[FiberData], verdict=None) -> MainTheoremReport:
    """Radiality against constancy of the multiradius, in the decidable direction.

    A certified-radial morphism with differing multiradii is a contradiction
    and raises :class:`InvariantViolation`.
    """
    if len(fibers) < 2:
        raise ValueError("need at least two fibers")
    if verdict is None:
        roots = [r for fd in fibers for r in fd.roots]
        verdict = radial_certificate(F, extra_probes=roots)
    mrs = [multiradius_from_count(count_function(fd), F.d) for fd in fibers]
    equal = all(m == mrs[0] for m in mrs[1:])
    if verdict.status is Status.CERTIFIED and not equal:
        raise InvariantViolation("certified radial morphism with differing multiradii")
    return MainTheoremReport(verdict, mrs, equal)
