"""Analysis of quadratic numerical functions ``h(j) = a j^2 + b j + e``.

The auxiliary functions are ``f(x) = beta_2^x(h) / e`` and
``g(x) = beta_3^x(h) / e`` written in terms of ``alpha = a/e`` and
``beta = b/e``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .exact import (
    DEFAULT_TOL,
    Cmp,
    Number,
    RatPoly,
    RootInterval,
    cmp_rational_vs_surd,
    floor_rational_surd,
    floor_surd,
    surd_decimal,
    sturm_isolate,
)
from .numfn import HdepthReport, NumFn, PreconditionFailed, c_bound, hdepth, validate

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class QuadParams:
    a: int
    b: int
    e: int

    @classmethod
    def from_numfn(cls, h: NumFn) -> "QuadParams":
        if h.degree != 2:
            raise ValueError(f"expected a quadratic, got degree {h.degree}")
        e, b, a = h.coeffs
        return cls(a, b, e)

    @classmethod
    def from_ratios(cls, alpha: Number, beta: Number) -> "QuadParams":
        """Integer triple with the given ``a/e`` and ``b/e`` (``e`` minimal)."""
        alpha, beta = Fraction(alpha), Fraction(beta)
        e = lcm(alpha.denominator, beta.denominator)
        return cls(int(alpha * e), int(beta * e), e)

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.a, self.e)

    @property
    def beta(self) -> Fraction:
        return Fraction(self.b, self.e)

    @property
    def t(self) -> Fraction:
        return self.alpha + self.beta

    @property
    def delta(self) -> int:
        return self.b * self.b - 4 * self.a * self.e

    @property
    def coeffs(self) -> list[int]:
        return [self.e, self.b, self.a]

    def __call__(self, j: Number):
        return self.a * j * j + self.b * j + self.e


class QuadCase(enum.Enum):
    B_NONNEG = "BNonneg"
    A_NONNEG_B_NEG = "ANonnegBNeg"
    SUM_NEG_DELTA_NEG = "SumNegDeltaNeg"
    SUM_NEG_DELTA_ZERO = "SumNegDeltaZero"
    SUM_NEG_DELTA_POS = "SumNegDeltaPos"


@dataclass(frozen=True)
class QuadClassification:
    case: QuadCase
    valid: bool
    strictly_positive: bool
    root_interval: Optional[tuple[str, str]] = None
    ell: Optional[int] = None
    zero_at: Optional[int] = None

    def to_dict(self) -> dict:
        ri = self.root_interval
        return {
            "case": self.case.value,
            "valid": self.valid,
            "strictly_positive": self.strictly_positive,
            "root_interval": None if ri is None else {"lo": ri[0], "hi": ri[1]},
            "ell": self.ell,
            "zero_at": self.zero_at,
        }


def classify(p: QuadParams) -> QuadClassification:
    """Decide whether ``h`` is nonnegative on the naturals, by sign of ``a+b`` and ``Delta``."""
    a, b = p.a, p.b
    if a <= 0 or p.e <= 0:
        raise PreconditionFailed("classify needs a > 0 and e > 0")
    if b >= 0:
        return QuadClassification(QuadCase.B_NONNEG, True, True)
    if a + b >= 0:
        # both roots (if any) lie in (0, 1)
        return QuadClassification(QuadCase.A_NONNEG_B_NEG, True, True)
    delta = p.delta
    if delta < 0:
        return QuadClassification(QuadCase.SUM_NEG_DELTA_NEG, True, True)
    # roots (-b -+ sqrt(delta)) / 2a, both positive since b < 0
    base, half = Fraction(-b, 2 * a), Fraction(1, 2 * a)
    interval = (surd_decimal(base, -half, delta), surd_decimal(base, half, delta))
    if delta == 0:
        root = Fraction(-b, 2 * a)
        zero_at = int(root) if root.denominator == 1 else None
        return QuadClassification(
            QuadCase.SUM_NEG_DELTA_ZERO, True, zero_at is None, interval, None, zero_at
        )
    ell = floor_surd(base, -half, delta)
    # hi <= ell + 1  <=>  (ell + 1 - base) - half*sqrt(delta) >= 0
    inside = cmp_rational_vs_surd(ell + 1 - base, half, delta) != Cmp.LT
    valid = inside and delta <= a * a
    positive = valid and all(p(j) > 0 for j in (ell, ell + 1))
    return QuadClassification(QuadCase.SUM_NEG_DELTA_POS, valid, positive, interval, ell)


def f2_poly(p: QuadParams) -> RatPoly:
    al, be = p.alpha, p.beta
    return RatPoly([5 * al + 3 * be + 2, -(al + be + Fraction(3, 2)), Fraction(1, 2)])


def f2(p: QuadParams, x: Number) -> Fraction:
    x = Fraction(x)
    al, be = p.alpha, p.beta
    return x * x / 2 - (al + be + Fraction(3, 2)) * x + (5 * al + 3 * be + 2)


def disc2(p: QuadParams) -> Fraction:
    al, be = p.alpha, p.beta
    return (al + be) ** 2 - 7 * al - 3 * be - Fraction(7, 4)


def f2_roots(
    p: QuadParams, tol: Number = DEFAULT_TOL
) -> Optional[tuple[RootInterval, RootInterval]]:
    """Isolating intervals for the roots ``x1 <= x2`` of ``f``; ``None`` if it has none."""
    if disc2(p) < 0:
        return None
    roots = sturm_isolate(f2_poly(p), tol)
    if len(roots) == 1:
        return roots[0], roots[0]
    return roots[0], roots[1]


def first_negative_integer(shift: Fraction, disc: Fraction, lo: int, hi: int, fn) -> Optional[int]:
    """Smallest integer ``d`` in ``[lo, hi]`` with ``fn(d) < 0``.

    ``fn`` is a convex quadratic with roots ``shift -+ sqrt(disc)``; it is
    negative exactly strictly between them.
    """
    if disc <= 0 or lo > hi:
        return None
    d = max(lo, floor_rational_surd(shift, -1, disc) + 1)
    if d <= hi and fn(d) < 0:
        return d
    return None


def upper_via_f2(h: NumFn) -> Optional[int]:
    """Smallest ``d`` in ``[3, c(h)+1]`` with ``f(d) < 0``; then ``hdepth(h) < d``."""
    p = QuadParams.from_numfn(h)
    if p.t < 2:
        raise PreconditionFailed(f"needs alpha + beta >= 2, got {p.t}")
    shift = p.t + Fraction(3, 2)
    return first_negative_integer(shift, disc2(p), 3, c_bound(h) + 1, lambda d: f2(p, d))


def g2(p: QuadParams, x: Number) -> Fraction:
    x = Fraction(x)
    al, be = p.alpha, p.beta
    return (
        al * (x * x / 2 - Fraction(11, 2) * x + 18)
        + be * (x * x / 2 - Fraction(7, 2) * x + 8)
        + (-(x**3) / 6 + x * x - Fraction(17, 6) * x + 4)
    )


def _choose(x: Fraction, r: int) -> Fraction:
    out = Fraction(1)
    for i in range(r):
        out *= (x - i) / (i + 1)
    return out


def g2_binomial(p: QuadParams, x: Number) -> Fraction:
    """``g`` in its defining form, before expansion."""
    x = Fraction(x)
    al, be = p.alpha, p.beta
    return (
        -_choose(x, 3)
        + _choose(x - 1, 2) * (al + be + 1)
        - (x - 2) * (4 * al + 2 * be + 1)
        + (9 * al + 3 * be + 1)
    )


def g2_t_alpha(p: QuadParams, x: Number) -> Fraction:
    """``g`` with ``beta`` eliminated in favour of ``t = alpha + beta``."""
    x = Fraction(x)
    return (
        -2 * p.alpha * (x - 5)
        + p.t * (x * x - 7 * x + 16) / 2
        + (-(x**3) / 6 + x * x - Fraction(17, 6) * x + 4)
    )


def g2_at_14(p: QuadParams) -> Fraction:
    return 3 * (19 * p.t - 6 * p.alpha - 99)


def bound_quadratic(p: QuadParams) -> int:
    if p.b >= 0:
        return 8
    if p.delta <= 0:
        return 11
    return 13


def quad_case_label(p: QuadParams) -> str:
    """Which bound applies: ``b_nonneg``, ``b_neg_small_disc`` or ``b_neg_large_disc``."""
    if p.b >= 0:
        return "b_nonneg"
    return "b_neg_small_disc" if p.delta <= 0 else "b_neg_large_disc"


def family_coeffs(k: int) -> list[int]:
    return [1, k - k * k, k * k]


def family_beta36(k: int) -> int:
    """``beta_3^6`` of the family member at ``k``."""
    return -2 * k * k + 5 * k - 13


def family_delta(k: int) -> int:
    return k**4 - 2 * k**3 - 3 * k**2


def family_disc2(k: int) -> Fraction:
    return -3 * k * k - 3 * k - Fraction(7, 4)


def family_member(k: int) -> tuple[NumFn, HdepthReport]:
    """The member ``k^2 j^2 + (k - k^2) j + 1`` and its hdepth report."""
    if k < 4:
        raise PreconditionFailed(f"family is defined for k >= 4, got {k}")
    h = validate(family_coeffs(k))
    return h, hdepth(h)
