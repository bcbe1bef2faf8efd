"""Exact arithmetic: binomials, surd comparison, rational polynomials, Sturm isolation.

Rationals are :class:`fractions.Fraction`; nothing in this module touches
floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

DEFAULT_TOL = Fraction(1, 10**6)


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def binom(n: int, r: int) -> int:
    """Binomial coefficient with ``binom(n, r) = 0`` for ``r < 0`` or ``r > n``."""
    if n < 0:
        raise ValueError(f"binom: negative n={n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def cmp_rational_vs_surd(q: Number, r: Number, n: int) -> Cmp:
    """Exact sign of ``q - r*sqrt(n)``."""
    if n < 0:
        raise ValueError("cmp_rational_vs_surd: n must be >= 0")
    q = Fraction(q)
    r = Fraction(r)
    sq = _sign(q)
    sr = _sign(r) if n else 0
    if sr == 0:
        return Cmp(sq)
    if sq != sr:
        # opposite signs, or q == 0
        return Cmp.GT if sq > sr else Cmp.LT
    lhs, rhs = q * q, r * r * n
    if lhs == rhs:
        return Cmp.EQ
    # same sign: for negatives the larger magnitude is smaller
    return Cmp(sq if lhs > rhs else -sq)


def floor_surd(p: Number, q: Number, n: int) -> int:
    """``floor(p + q*sqrt(n))`` computed exactly."""
    p = Fraction(p)
    q = Fraction(q)
    # integer guess from isqrt, then correct by at most a couple of steps
    den = p.denominator * q.denominator
    scaled = math.isqrt(int(q * q * n * den * den))
    approx = p + (scaled if q >= 0 else -scaled) / Fraction(den)
    m = math.floor(approx)
    # m <= p + q*sqrt(n)  <=>  (m - p) - q*sqrt(n) <= 0
    while cmp_rational_vs_surd(m - p, q, n) == Cmp.GT:
        m -= 1
    while cmp_rational_vs_surd(m + 1 - p, q, n) != Cmp.GT:
        m += 1
    return m


def surd_decimal(p: Number, q: Number, n: int, places: int = 6) -> str:
    """Decimal string of ``p + q*sqrt(n)`` truncated toward minus infinity."""
    scale = 10**places
    v = floor_surd(Fraction(p) * scale, Fraction(q) * scale, n)
    return _fixed(v, places)


def _fixed(v: int, places: int) -> str:
    sign = "-" if v < 0 else ""
    v = abs(v)
    if places == 0:
        return f"{sign}{v}"
    whole, frac = divmod(v, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def fraction_decimal(x: Number, places: int = 6) -> str:
    """Round-half-even decimal rendering of an exact rational."""
    x = Fraction(x)
    return _fixed(round(x * 10**places), places)


class RatPoly:
    """Univariate polynomial with rational coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other: "RatPoly | Number") -> "RatPoly":
        if not isinstance(other, RatPoly):
            other = RatPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other: "RatPoly | Number") -> "RatPoly":
        if not isinstance(other, RatPoly):
            other = RatPoly([other])
        return self + (-other)

    def __rsub__(self, other: Number) -> "RatPoly":
        return RatPoly([other]) - self

    def __mul__(self, other: "RatPoly | Number") -> "RatPoly":
        if not isinstance(other, RatPoly):
            return RatPoly(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        out = RatPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        lead = other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * oc
        return RatPoly(quot), RatPoly(rem[:dq])

    def monic(self) -> "RatPoly":
        return self * (1 / self.lead) if self.coeffs else self

    def compose(self, other: "RatPoly") -> "RatPoly":
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic()


def squarefree_part(p: RatPoly) -> RatPoly:
    """``p / gcd(p, p')``, made monic."""
    if p.is_zero():
        raise ValueError("squarefree_part of the zero polynomial")
    g = poly_gcd(p, p.derivative())
    return p.divmod(g)[0].monic()


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = seq[-2].divmod(seq[-1])[1]
        seq.append(-r)
    seq.pop()
    return seq


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _variations_at(seq: Sequence[RatPoly], x: Number) -> int:
    return _variations(_sign(s(x)) for s in seq)


def _variations_at_inf(seq: Sequence[RatPoly], positive: bool) -> int:
    signs = []
    for s in seq:
        sg = _sign(s.lead)
        if not positive and s.degree % 2:
            sg = -sg
        signs.append(sg)
    return _variations(signs)


def count_real_roots(p: RatPoly) -> int:
    """Number of distinct real roots of ``p``."""
    seq = sturm_sequence(squarefree_part(p))
    return _variations_at_inf(seq, False) - _variations_at_inf(seq, True)


def cauchy_bound(p: RatPoly) -> Fraction:
    lead = abs(p.lead)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    """Open interval ``(lo, hi)`` holding exactly one simple root."""

    lo: Fraction
    hi: Fraction
    sign_change: str  # "down-up" or "up-down"

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x: Number) -> bool:
        return self.lo < x < self.hi


_SPLITS = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4)]


def _split_point(p: RatPoly, lo: Fraction, hi: Fraction) -> Fraction:
    # a non-root split point keeps every interval endpoint off the roots
    k = 5
    for frac in _SPLITS:
        m = lo + (hi - lo) * frac
        if p(m) != 0:
            return m
    while True:
        k += 1
        m = lo + (hi - lo) / k
        if p(m) != 0:
            return m


def _root_interval(p: RatPoly, lo: Fraction, hi: Fraction) -> RootInterval:
    s = _sign(p(lo))
    return RootInterval(lo, hi, "down-up" if s < 0 else "up-down")


def _refine(p: RatPoly, lo: Fraction, hi: Fraction, tol: Fraction) -> RootInterval:
    """Bisect ``(lo, hi)``, which has one simple root and nonzero endpoint signs."""
    slo = _sign(p(lo))
    while hi - lo > tol:
        m = (lo + hi) / 2
        sm = _sign(p(m))
        if sm == 0:
            half = min(tol, m - lo, hi - m) / 2
            return _root_interval(p, m - half, m + half)
        if sm == slo:
            lo = m
        else:
            hi = m
    return _root_interval(p, lo, hi)


def sturm_isolate(p: RatPoly, tol: Number = DEFAULT_TOL) -> list[RootInterval]:
    """Isolate every distinct real root of ``p`` in an interval of width <= ``tol``.

    ``p`` is replaced by its squarefree part first, so repeated roots yield a
    single interval. Results are sorted ascending and pairwise disjoint.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    q = squarefree_part(p)
    if q.degree < 1:
        return []
    seq = sturm_sequence(q)
    bound = cauchy_bound(q) + 1

    def count(a: Fraction, b: Fraction) -> int:
        return _variations_at(seq, a) - _variations_at(seq, b)

    out: list[RootInterval] = []
    stack = [(-bound, bound, count(-bound, bound))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_refine(q, lo, hi, tol))
            continue
        m = _split_point(q, lo, hi)
        # right half pushed first so the left half pops first
        stack.append((m, hi, count(m, hi)))
        stack.append((lo, m, count(lo, m)))
    out.sort(key=lambda r: r.lo)
    return out


def floor_rational_surd(p: Number, q: Number, r: Number) -> int:
    """``floor(p + q*sqrt(r))`` for a rational ``r >= 0``."""
    r = Fraction(r)
    if r < 0:
        raise ValueError("negative radicand")
    # sqrt(N/D) = sqrt(N*D)/D
    return floor_surd(p, Fraction(q) / r.denominator, r.numerator * r.denominator)
