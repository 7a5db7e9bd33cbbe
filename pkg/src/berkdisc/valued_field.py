"""Exact arithmetic in the totally ramified extension K_N = Q(pi), pi^N = p.

Elements are stored as ``(numerators, denominator)`` over the power basis
``1, pi, ..., pi^(N-1)``; every operation is exact.  Valuations are
normalised so that ``v(p) = 1`` and therefore take values in ``(1/N)Z``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, NegativeValuation


@total_ordering
class _Infinity:
    """The valuation of zero.  Absorbing under addition, above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("berkdisc.INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

#: a finite exact rational or :data:`INF`
Valuation = Union[Fraction, _Infinity]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def vp_int(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("vp_int(0) is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_rational(x: Fraction, p: int) -> Valuation:
    x = Fraction(x)
    if x == 0:
        return INF
    return Fraction(vp_int(x.numerator, p) - vp_int(x.denominator, p))


def parse_rational(text) -> Fraction:
    """Parse ``"3/2"``, ``"-3/1"``, ints or Fractions; ``"inf"`` is rejected."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_valuation(v: Valuation) -> str:
    return "inf" if v is INF else str(Fraction(v))


class FieldParams:
    """The pair ``(p, N)`` fixing the field ``Q(pi)``, ``pi^N = p``.

    ``x^N - p`` is Eisenstein at ``p`` and hence irreducible, so the quotient
    ring is a field of degree ``N`` over Q with value group ``(1/N)Z``.
    """

    __slots__ = ("p", "N")

    def __init__(self, p: int, N: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if N < 1:
            raise ValueError(f"ramification index must be >= 1, got {N}")
        object.__setattr__(self, "p", int(p))
        object.__setattr__(self, "N", int(N))

    def __setattr__(self, name, value):
        raise AttributeError("FieldParams is immutable")

    def __eq__(self, other):
        return isinstance(other, FieldParams) and self.p == other.p and self.N == other.N

    def __hash__(self):
        return hash((self.p, self.N))

    def __repr__(self):
        return f"FieldParams(p={self.p}, N={self.N})"

    # convenience constructors
    def zero(self) -> "FieldElement":
        return FieldElement.from_int(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement.from_int(self, 1)

    def pi(self) -> "FieldElement":
        return pi_power(self, 1)

    def __call__(self, value) -> "FieldElement":
        """Coerce an int, Fraction or FieldElement into this field."""
        return coerce(self, value)


def _normalise(nums: Sequence[int], den: int):
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = den
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            break
    if g > 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


class FieldElement:
    """An element ``sum c_e pi^e`` of ``K_N``; immutable and hashable."""

    __slots__ = ("params", "_nums", "_den", "_val")

    def __init__(self, params: FieldParams, coeffs: Iterable = ()):
        coeffs = [Fraction(c) for c in coeffs]
        N = params.N
        if len(coeffs) > N:
            raise ValueError(f"expected at most {N} coefficients, got {len(coeffs)}")
        coeffs += [Fraction(0)] * (N - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coeffs]
        self._set(params, nums, den)

    def _set(self, params, nums, den):
        nums, den = _normalise(nums, den)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "_nums", nums)
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_val", None)

    @classmethod
    def _raw(cls, params: FieldParams, nums, den) -> "FieldElement":
        obj = object.__new__(cls)
        obj._set(params, nums, den)
        return obj

    @classmethod
    def from_int(cls, params: FieldParams, n) -> "FieldElement":
        x = Fraction(n)
        nums = [0] * params.N
        nums[0] = x.numerator
        return cls._raw(params, nums, x.denominator)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(n, self._den) for n in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def __bool__(self):
        return not self.is_zero()

    # -- valuation ------------------------------------------------------
    def valuation(self) -> Valuation:
        if self._val is None:
            p, N = self.params.p, self.params.N
            best = INF
            dv = vp_int(self._den, p)
            for e, n in enumerate(self._nums):
                if n:
                    v = Fraction(vp_int(n, p) - dv) + Fraction(e, N)
                    if v < best:
                        best = v
            object.__setattr__(self, "_val", best)
        return self._val

    def residue(self) -> int:
        """Image in the residue field F_p (requires ``v >= 0``)."""
        v = self.valuation()
        if v is INF or v > 0:
            return 0
        if v < 0:
            raise NegativeValuation(f"residue of an element of valuation {v}")
        p = self.params.p
        # v == 0 forces v_p(c_0) == 0, and the other terms lie in the maximal ideal
        return self._nums[0] * pow(self._den, -1, p) % p

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.params != self.params:
                raise ValueError(f"mixing elements of {self.params} and {other.params}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.from_int(self.params, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._den, other._den
        nums = [x * b + y * a for x, y in zip(self._nums, other._nums)]
        return FieldElement._raw(self.params, nums, a * b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.params, [-n for n in self._nums], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N, p = self.params.N, self.params.p
        a, b = self._nums, other._nums
        out = [0] * N
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                k = i + j
                if k >= N:
                    out[k - N] += p * x * y
                else:
                    out[k] += x * y
        return FieldElement._raw(self.params, out, self._den * other._den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.params.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in K_N")
        N = self.params.N
        if not any(self._nums[1:]):
            return FieldElement.from_int(self.params, Fraction(self._den, self._nums[0]))
        # solve (x * y) = 1 for y: column j of the matrix is x * pi^j
        cols = []
        col = self
        pi = self.params.pi()
        for _ in range(N):
            cols.append(col.coeffs)
            col = col * pi
        rows = [[cols[j][i] for j in range(N)] + [Fraction(int(i == 0))] for i in range(N)]
        for c in range(N):
            piv = next(r for r in range(c, N) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            inv = 1 / rows[c][c]
            rows[c] = [x * inv for x in rows[c]]
            for r in range(N):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return FieldElement(self.params, [rows[i][N] for i in range(N)])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement.from_int(self.params, other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.params == other.params and self._den == other._den and self._nums == other._nums

    def __hash__(self):
        return hash((self.params, self._nums, self._den))

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = "pi" if e == 1 else f"pi^{e}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list:
        return [[format_rational(c), e] for e, c in enumerate(self.coeffs) if c != 0]


def pi_power(params: FieldParams, k: int) -> FieldElement:
    """``pi^k`` for any integer ``k`` (using ``pi^N = p``)."""
    q, r = divmod(k, params.N)
    coeffs = [Fraction(0)] * params.N
    coeffs[r] = Fraction(params.p) ** q
    return FieldElement(params, coeffs)


def coerce(params: FieldParams, value) -> FieldElement:
    if isinstance(value, FieldElement):
        if value.params != params:
            raise ValueError(f"element of {value.params} used where {params} expected")
        return value
    if isinstance(value, (int, Fraction)):
        return FieldElement.from_int(params, value)
    if isinstance(value, str):
        return FieldElement.from_int(params, parse_rational(value))
    raise TypeError(f"cannot coerce {type(value).__name__} into K_N")


def element_from_json(params: FieldParams, pairs) -> FieldElement:
    """Decode ``[["-3/1", 0], ["1/1", 6]]``; exponents may be any integer."""
    if isinstance(pairs, (int, str)):
        return coerce(params, pairs)
    x = params.zero()
    for pair in pairs:
        if len(pair) != 2:
            raise ValueError(f"element terms must be [rational, pi_exponent] pairs, got {pair!r}")
        c, e = pair
        x = x + pi_power(params, int(e)) * parse_rational(c)
    return x


def valuation(x: FieldElement) -> Valuation:
    return x.valuation()


def residue(x: FieldElement) -> int:
    return x.residue()


def random_unit(params: FieldParams, seed) -> FieldElement:
    """A valuation-0 element, deterministic in ``seed`` (an int or a Random)."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    p, N = params.p, params.N
    coeffs = [Fraction(rng.randrange(1, p) + p * rng.randint(-2, 2))]
    for _ in range(1, N):
        coeffs.append(Fraction(rng.randint(-p, p)))
    return FieldElement(params, coeffs)
