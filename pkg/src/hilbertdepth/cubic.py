"""Analysis of cubic numerical functions ``h(j) = a j^3 + b j^2 + c j + e``."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .exact import Cmp, Number, cmp_rational_vs_surd, surd_decimal
from .numfn import NumFn, PreconditionFailed, c_bound
from .quadratic import first_negative_integer

QUARTER = Fraction(1, 4)

# s0 = 39 + 16*sqrt(3)
S0_RATIONAL, S0_SURD_COEFF, S0_RADICAND = 39, 16, 3

GSCAN_MAX_D = 67


@dataclass(frozen=True)
class CubicParams:
    a: int
    b: int
    c: int
    e: int

    @classmethod
    def from_numfn(cls, h: NumFn) -> "CubicParams":
        if h.degree != 3:
            raise ValueError(f"expected a cubic, got degree {h.degree}")
        e, c, b, a = h.coeffs
        return cls(a, b, c, e)

    @classmethod
    def from_ratios(cls, alpha: Number, beta: Number, gamma: Number) -> "CubicParams":
        alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
        e = lcm(alpha.denominator, beta.denominator, gamma.denominator)
        return cls(int(alpha * e), int(beta * e), int(gamma * e), e)

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.a, self.e)

    @property
    def beta(self) -> Fraction:
        return Fraction(self.b, self.e)

    @property
    def gamma(self) -> Fraction:
        return Fraction(self.c, self.e)

    @property
    def t(self) -> Fraction:
        return self.alpha + self.beta + self.gamma

    @property
    def delta_prime(self) -> int:
        return 4 * self.b * self.b - 12 * self.a * self.c

    @property
    def coeffs(self) -> list[int]:
        return [self.e, self.c, self.b, self.a]


def is_nondecreasing(p: CubicParams) -> bool:
    """True when ``h'`` has no two distinct real roots, i.e. ``b^2 <= 3ac``."""
    return p.b * p.b <= 3 * p.a * p.c


def f3(p: CubicParams, x: Number) -> Fraction:
    x = Fraction(x)
    return (
        x * x / 2
        - (p.t + Fraction(3, 2)) * x
        + (9 * p.alpha + 5 * p.beta + 3 * p.gamma + 2)
    )


def disc3(p: CubicParams) -> Fraction:
    return p.t**2 - 15 * p.alpha - 7 * p.beta - 3 * p.gamma - Fraction(7, 4)


def upper_via_f3(h: NumFn) -> Optional[int]:
    """Smallest ``d`` in ``[3, c(h)+1]`` with ``f(d) < 0``; then ``hdepth(h) < d``."""
    p = CubicParams.from_numfn(h)
    if p.t < 2:
        raise PreconditionFailed(f"needs alpha + beta + gamma >= 2, got {p.t}")
    shift = p.t + Fraction(3, 2)
    return first_negative_integer(shift, disc3(p), 3, c_bound(h) + 1, lambda d: f3(p, d))


def _require_small_disc(p: CubicParams) -> None:
    if not (p.b < 0 and is_nondecreasing(p)):
        raise PreconditionFailed("needs b < 0 and b^2 <= 3ac")


def t0_inequality_holds(p: CubicParams) -> bool:
    """Decide ``15 alpha + 7 beta + 3 gamma <= s0 * t`` exactly."""
    _require_small_disc(p)
    lhs = 15 * p.alpha + 7 * p.beta + 3 * p.gamma
    t = p.t
    # lhs - 39 t - 16 t sqrt(3) <= 0
    return cmp_rational_vs_surd(lhs - S0_RATIONAL * t, S0_SURD_COEFF * t, S0_RADICAND) != Cmp.GT


def exceeds_t0(t: Number) -> bool:
    """Exact test of ``t > (s0 + sqrt(s0^2 + 8)) / 2``.

    For ``t > 0`` this is ``t^2 - s0 t > 2``, i.e.
    ``(t^2 - 39 t - 2) - 16 t sqrt(3) > 0``.
    """
    t = Fraction(t)
    if t <= 0:
        return False
    return cmp_rational_vs_surd(t * t - S0_RATIONAL * t - 2, S0_SURD_COEFF * t, S0_RADICAND) == Cmp.GT


def s0_decimal(places: int = 6) -> str:
    return surd_decimal(S0_RATIONAL, S0_SURD_COEFF, S0_RADICAND, places)


def t0_implication_holds(p: CubicParams) -> bool:
    """The implication ``t > t0  =>  disc3 > 1/4``; covers every ``t >= 67``."""
    _require_small_disc(p)
    return not exceeds_t0(p.t) or disc3(p) > QUARTER


def g3(p: CubicParams, x: Number) -> Fraction:
    x = Fraction(x)
    return (
        p.alpha * (x * x / 2 - Fraction(19, 2) * x + 44)
        + p.beta * (x * x / 2 - Fraction(11, 2) * x + 18)
        + p.gamma * (x * x / 2 - Fraction(7, 2) * x + 8)
        + (-(x**3) / 6 + x * x - Fraction(17, 6) * x + 4)
    )


def g3_at_11(p: CubicParams) -> Fraction:
    return 18 * p.beta + 30 * p.gamma - 128


class CubicCase(enum.Enum):
    NONNEG_BC = "NonnegBC"
    NEG_B_SMALL_DISC = "NegBSmallDisc"
    UNCOVERED = "Uncovered"


CASE_LABELS = {
    CubicCase.NONNEG_BC: "bc_nonneg",
    CubicCase.NEG_B_SMALL_DISC: "b_neg_small_disc",
    CubicCase.UNCOVERED: "uncovered",
}

CASE_BOUNDS = {CubicCase.NONNEG_BC: 16, CubicCase.NEG_B_SMALL_DISC: 67}


@dataclass(frozen=True)
class CubicBoundVerdict:
    case: CubicCase
    bound: Optional[int]
    gscan_bound: Optional[int] = None  # hdepth <= this
    gscan_d: Optional[int] = None  # the d with g(d) < 0

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "bound": self.bound,
            "gscan_bound": self.gscan_bound,
            "gscan_d": self.gscan_d,
        }


def cubic_case(p: CubicParams) -> CubicCase:
    if p.b >= 0 and p.c >= 0:
        return CubicCase.NONNEG_BC
    if p.b < 0 and is_nondecreasing(p):
        return CubicCase.NEG_B_SMALL_DISC
    return CubicCase.UNCOVERED


def g3_scan(p: CubicParams, max_d: int = GSCAN_MAX_D) -> Optional[int]:
    """Smallest ``d`` in ``[3, min(c(h)+1, max_d)]`` with ``g(d) < 0``."""
    cb = (p.a + p.b + p.c + p.e) // p.e
    for d in range(3, min(cb + 1, max_d) + 1):
        if g3(p, d) < 0:
            return d
    return None


def bound_cubic(p: CubicParams, max_d: int = GSCAN_MAX_D) -> CubicBoundVerdict:
    case = cubic_case(p)
    d = g3_scan(p, max_d)
    return CubicBoundVerdict(
        case,
        CASE_BOUNDS.get(case),
        None if d is None else d - 1,
        d,
    )
