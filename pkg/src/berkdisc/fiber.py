"""Fibers of a disc morphism over points ``zeta_{c, lam}`` of the target disc.

Roots are supplied, never computed: K_N is not algebraically closed, so a
fiber is only usable when ``f - c`` splits over K_N and the caller provides
the factorisation.  :func:`validate_fiber` checks it exactly.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .disc_morphism import DiscMorphism, DiscPoint
from .errors import InvariantViolation, NotConverged, NotInDisc, RootMismatch, RootOutsideDisc, WrongCount
from .polynomial import Poly, derivative, evaluate, from_roots
from .valued_field import INF, FieldElement, coerce, format_rational, pi_power


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> int:
        return sum(1 for i in range(len(self.parent)) if self.find(i) == i)


@dataclass(frozen=True, eq=False)
class FiberData:
    F: DiscMorphism
    center: FieldElement
    roots: tuple

    @property
    def d(self) -> int:
        return self.F.d

    def is_branched(self) -> bool:
        return len(set(self.roots)) < len(self.roots)

    def to_json(self) -> dict:
        return {"center": self.center.to_json(), "roots": [r.to_json() for r in self.roots]}


@dataclass(frozen=True)
class CountFunction:
    """``lam -> N(lam)`` for target points ``zeta_{c, p^-lam}``.

    ``values[0]`` holds for ``lam <= jumps[0]``, ``values[k]`` on
    ``(jumps[k-1], jumps[k]]`` and ``values[-1]`` above the last jump
    (right-continuity in the radius is left-continuity in ``lam``).
    """

    jumps: tuple
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.jumps) + 1:
            raise ValueError("need one more value than jumps")
        if any(b <= a for a, b in zip(self.jumps, self.jumps[1:])):
            raise ValueError("jumps must be strictly increasing")

    def at(self, lam) -> int:
        return self.values[bisect_left(self.jumps, Fraction(lam))]

    __call__ = at

    def to_json(self) -> dict:
        return {"jumps": [format_rational(j) for j in self.jumps], "values": list(self.values)}

    @classmethod
    def from_json(cls, data) -> "CountFunction":
        return cls(tuple(Fraction(j) for j in data["jumps"]), tuple(int(v) for v in data["values"]))


def validate_fiber(F: DiscMorphism, c, roots: Sequence) -> FiberData:
    """Check ``f - c = a_d * prod (T - r)`` exactly, with every root in the disc."""
    params = F.params
    c = coerce(params, c)
    roots = tuple(coerce(params, r) for r in roots)
    if len(roots) != F.d:
        raise WrongCount(f"expected {F.d} roots (with multiplicity), got {len(roots)}")
    for r in roots:
        v = r.valuation()
        if not (v is INF or v > 0):
            raise RootOutsideDisc(f"root {r} has valuation {v}")
    for r in roots:
        if evaluate(F.f, r) != c:
            raise RootMismatch(f"f({r}) != {c}")
    if from_roots(roots, F.f.coeffs[-1], params) != F.f - Poly(params, [c]):
        raise RootMismatch("roots do not account for f - c with multiplicity")
    return FiberData(F, c, roots)


def preimage_points(fd: FiberData, lam_target) -> list:
    """The ``d`` points ``zeta_{r_i, lam_i}`` over ``zeta_{c, lam_target}``, before deduplication."""
    lam_target = Fraction(lam_target)
    if lam_target <= 0:
        raise ValueError("target lambda must be > 0")
    return [DiscPoint(r, fd.F.profile(r).invert().eval(lam_target)) for r in fd.roots]


def _dedupe(points: Sequence[DiscPoint]) -> list:
    uf = UnionFind(len(points))
    for i, j in combinations(range(len(points)), 2):
        if points[i] == points[j]:
            uf.union(i, j)
    return [points[i] for i in range(len(points)) if uf.find(i) == i]


def distinct_preimages(fd: FiberData, lam_target) -> list:
    return _dedupe(preimage_points(fd, lam_target))


def count_at(fd: FiberData, lam_target) -> int:
    """``N_c`` at ``lam_target``: preimage points counted without multiplicity."""
    return len(distinct_preimages(fd, lam_target))


def merge_thresholds(fd: FiberData) -> dict:
    """For each pair of distinct roots, the target lambda up to which their preimages coincide."""
    out = {}
    for i, j in combinations(range(len(fd.roots)), 2):
        diff = (fd.roots[i] - fd.roots[j]).valuation()
        if diff is INF:
            out[(i, j)] = INF
        else:
            out[(i, j)] = fd.F.image_lambda(fd.roots[i], diff)
    return out


def _components(n: int, edges) -> int:
    uf = UnionFind(n)
    for i, j in edges:
        uf.union(i, j)
    return uf.classes()


def count_function(fd: FiberData) -> CountFunction:
    """Exact jump list of ``N_c`` from the pairwise merge thresholds.

    Preimages through ``r_i`` and ``r_j`` coincide exactly when the target
    lambda is at most the image of ``v(r_i - r_j)`` under the profile at
    ``r_i``; the count between jumps is the number of clusters.
    """
    th = merge_thresholds(fd)
    jumps = sorted({t for t in th.values() if t is not INF})
    n = len(fd.roots)

    def clusters(lam):
        return _components(n, [e for e, t in th.items() if t >= lam])

    # a threshold is a jump only if the cluster count changes just above it
    keep_j = []
    vals = [clusters(jumps[0] / 2 if jumps else Fraction(1))]
    for k, j in enumerate(jumps):
        nxt = jumps[k + 1] if k + 1 < len(jumps) else j + 1
        v = clusters((j + nxt) / 2)
        if v != vals[-1]:
            keep_j.append(j)
            vals.append(v)
    return CountFunction(tuple(keep_j), tuple(vals))


@dataclass(frozen=True)
class MultSumReport:
    lam_target: Fraction
    points: tuple
    multiplicities: tuple
    total: int
    count: int
    uniform: bool


def check_mult_sum(fd: FiberData, lam_target) -> MultSumReport:
    """Assert ``sum nu = d`` over the distinct preimages, and ``#fiber = d/nu``
    when all multiplicities agree."""
    pts = distinct_preimages(fd, lam_target)
    mults = tuple(fd.F.multiplicity(pt) for pt in pts)
    total = sum(mults)
    if total != fd.d:
        raise InvariantViolation(f"sum of multiplicities {total} != degree {fd.d} at lambda {lam_target}")
    uniform = len(set(mults)) == 1
    if uniform and len(pts) * mults[0] != fd.d:
        raise InvariantViolation(f"{len(pts)} preimages of multiplicity {mults[0]} for degree {fd.d}")
    return MultSumReport(Fraction(lam_target), tuple(pts), mults, total, len(pts), uniform)


def _truncate(x: FieldElement, M: int) -> FieldElement:
    """``x mod pi^M`` via its pi-adic digit expansion; requires ``v(x) >= 0``."""
    params = x.params
    pinv = pi_power(params, -1)
    out = params.zero()
    for k in range(M):
        if x.is_zero():
            break
        digit = x.residue()
        if digit:
            out = out + pi_power(params, k) * digit
        x = (x - digit) * pinv
    return out


def newton_refine(F: DiscMorphism, c, approx_root, target_precision: int, max_iter: int = 64) -> FieldElement:
    """Newton iteration for ``f(r) = c`` with truncation mod ``pi^M``.

    Certifies ``v(f(r) - c) >= M/N`` (``M = target_precision``) or raises
    :class:`NotConverged`.  Intended to check near-roots, not to find roots.
    """
    params = F.params
    c = coerce(params, c)
    r = coerce(params, approx_root)
    goal = Fraction(target_precision, params.N)
    v = r.valuation()
    if not (v is INF or v > 0):
        raise NotInDisc(f"approximate root {r} is outside the disc")
    df = derivative(F.f)
    for _ in range(max_iter):
        err = evaluate(F.f, r) - c
        if err.valuation() >= goal:
            return r
        slope = evaluate(df, r)
        if slope.is_zero():
            raise NotConverged("derivative vanishes at the approximation")
        r = _truncate(r - err / slope, target_precision + 1)
    err = evaluate(F.f, r) - c
    if err.valuation() >= goal:
        return r
    raise NotConverged(f"v(f(r) - c) = {err.valuation()} < {goal} after {max_iter} steps")
