"""The two parabolas in the (alpha, beta) plane and the compact region between them.

``F(x, y) = (x + y)^2 - 7x - 3y - 7/4`` bounds ``D = {F < 0}`` and
``G(x, y) = y^2 - 4x`` bounds ``D1 = {G > 0}``.

``K`` is taken as ``{F <= 0} & {G <= 0}``: the pairs ``(alpha, beta)`` with a
nonpositive discriminant ``b^2 - 4ae``. That side of ``G = 0`` is what makes
the region compact; ``cl(D) & cl(D1)`` runs off to infinity along the axis of
the first parabola (e.g. through ``(757, -805)``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Number, RatPoly, RootInterval, fraction_decimal, sturm_isolate

# 16 * F(y^2/4, y)
QUARTIC = RatPoly([-28, -48, -12, 8, 1])

VERTEX = (Fraction(-3, 4), Fraction(13, 4))
FOCUS = (Fraction(-1, 2), Fraction(3))


def F(x: Number, y: Number) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    return (x + y) ** 2 - 7 * x - 3 * y - Fraction(7, 4)


def G(x: Number, y: Number) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    return y * y - 4 * x


def quartic_from_substitution() -> RatPoly:
    """Rebuild the quartic by substituting ``x = y^2/4`` into ``16 F``."""
    y = RatPoly.x()
    x = y * y * Fraction(1, 4)
    s = x + y
    return (s * s - x * 7 - y * 3 - Fraction(7, 4)) * 16


@dataclass(frozen=True)
class Membership:
    in_d: bool
    in_d1: bool
    in_k: bool


def membership(x: Number, y: Number) -> Membership:
    f, g = F(x, y), G(x, y)
    return Membership(f < 0, g > 0, f <= 0 and g <= 0)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction
    y_interval: RootInterval

    @property
    def sum(self) -> Fraction:
        return self.x + self.y


@dataclass(frozen=True)
class KDomain:
    points: tuple[Point, ...]
    max_sum: Fraction
    tol: Fraction

    def to_dict(self, places: int = 6) -> dict:
        return {
            "points": [
                {"x": fraction_decimal(p.x, places), "y": fraction_decimal(p.y, places)}
                for p in self.points
            ],
            "max_sum": fraction_decimal(self.max_sum, places),
            "tol": fraction_decimal(self.tol, places),
        }


def k_intersections(tol: Number = Fraction(1, 100)) -> KDomain:
    """The four points where ``F = 0`` meets ``G = 0``, ordered by ``x``.

    Each ``y`` is the midpoint of an isolating interval for the quartic;
    ``x = y^2 / 4`` so ``G`` vanishes exactly at the reported point.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    # |dx/dy| = |y|/2 <= 5 near the roots, so tighten y well below tol
    roots = sturm_isolate(QUARTIC, tol / 1000)
    if len(roots) != 4:
        raise RuntimeError(f"expected 4 intersection points, found {len(roots)}")
    pts = tuple(sorted((Point(r.mid**2 / 4, r.mid, r) for r in roots), key=lambda p: p.x))
    return KDomain(pts, max(p.sum for p in pts), tol)


def max_sum_on_k(tol: Number = Fraction(1, 100)) -> Fraction:
    """Largest ``x + y`` on ``K``, attained at an intersection point."""
    return k_intersections(tol).max_sum
