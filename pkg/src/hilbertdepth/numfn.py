"""Numerical functions given by integer polynomials, their beta sums, and hdepth."""

from __future__ import annotations

import json
import operator
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import binom

DEFAULT_CAP = 10**6


class NumFnError(ValueError):
    """Base class for rejected inputs and failed scans."""


class NonPositiveConstantTerm(NumFnError):
    pass


class NegativeLeading(NumFnError):
    pass


class NegativeValue(NumFnError):
    def __init__(self, j: int, value: int):
        super().__init__(f"h({j}) = {value} < 0")
        self.j = j
        self.value = value


class CapExceeded(NumFnError):
    def __init__(self, cap: int, c_bound: int):
        super().__init__(f"hdepth scan reached cap={cap} below c(h)={c_bound}")
        self.cap = cap
        self.c_bound = c_bound


class PreconditionFailed(ValueError):
    """An analysis was called outside the hypothesis it is stated under."""


def _horner(coeffs: Sequence[int], j: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * j + c
    return acc


def cauchy_limit(coeffs: Sequence[int]) -> int:
    """``ceil(1 + max |a_i| / a_n)`` over the non-leading coefficients."""
    lead = coeffs[-1]
    top = max((abs(c) for c in coeffs[:-1]), default=0)
    return 1 + -(-top // lead)


@dataclass(frozen=True)
class NumFn:
    """``h(j) = a_0 + a_1 j + ... + a_n j^n`` with ``h(0) > 0`` and ``h >= 0`` on the naturals.

    Build instances with :func:`validate`; the constructor does not check.
    """

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, j: int) -> int:
        return _horner(self.coeffs, j)

    def scaled(self, m: int) -> "NumFn":
        return validate([m * c for c in self.coeffs])


def validate(coeffs: Sequence[int]) -> NumFn:
    """Certify membership of the polynomial in the class of numerical functions.

    Checks ``h(j) >= 0`` for ``0 <= j <= M`` with ``M`` the Cauchy root bound;
    past ``M`` the polynomial has no real roots and a positive leading term.
    """
    cs = []
    for c in coeffs:
        if isinstance(c, bool):
            raise NumFnError("coefficients must be integers, got a bool")
        try:
            cs.append(operator.index(c))
        except TypeError:
            raise NumFnError(f"coefficients must be integers, got {c!r}") from None
    if not cs:
        raise NumFnError("coefficient list must be nonempty")
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    if cs[0] <= 0:
        raise NonPositiveConstantTerm(f"h(0) = {cs[0]} must be positive")
    if cs[-1] < 0:
        raise NegativeLeading(f"leading coefficient {cs[-1]} is negative")
    if len(cs) > 1:
        for j in range(1, cauchy_limit(cs) + 1):
            v = _horner(cs, j)
            if v < 0:
                raise NegativeValue(j, v)
    return NumFn(tuple(cs))


def evaluate(h: NumFn, j: int) -> int:
    if j < 0:
        raise ValueError("j must be >= 0")
    return h(j)


def beta_direct(h: NumFn, d: int, k: int) -> int:
    """The alternating sum ``sum_j (-1)^(k-j) C(d-j, k-j) h(j)`` for ``j = 0..k``."""
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k}, d={d}")
    return sum((-1) ** (k - j) * binom(d - j, k - j) * h(j) for j in range(k + 1))


@dataclass(frozen=True)
class BetaTable:
    d: int
    values: tuple[int, ...]

    def nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def first_negative(self) -> Optional[int]:
        for k, v in enumerate(self.values):
            if v < 0:
                return k
        return None


def _next_row(h: NumFn, prev: Sequence[int]) -> list[int]:
    # beta_k^d = beta_k^{d-1} - beta_{k-1}^{d-1};  beta_d^d = h(d) - beta_{d-1}^{d-1}
    d = len(prev)
    row = [prev[0]]
    for k in range(1, d):
        row.append(prev[k] - prev[k - 1])
    row.append(h(d) - prev[d - 1])
    return row


def beta_rows(h: NumFn):
    """Yield the rows ``[beta_0^d, ..., beta_d^d]`` for ``d = 0, 1, 2, ...``."""
    row = [h(0)]
    while True:
        yield row
        row = _next_row(h, row)


def beta_table(h: NumFn, d: int) -> BetaTable:
    if d < 0:
        raise ValueError("d must be >= 0")
    rows = beta_rows(h)
    for _ in range(d):
        next(rows)
    return BetaTable(d, tuple(next(rows)))


def c_bound(h: NumFn) -> int:
    """``floor(h(1) / h(0))``, an upper bound for hdepth."""
    return h(1) // h(0)


@dataclass(frozen=True)
class Failure:
    d: int
    k: int
    value: int


@dataclass(frozen=True)
class HdepthReport:
    coeffs: tuple[int, ...]
    hdepth: int
    c_bound: int
    first_failure: Optional[Failure]
    certificate: BetaTable

    def to_dict(self) -> dict:
        ff = self.first_failure
        return {
            "coeffs": [str(c) for c in self.coeffs],
            "hdepth": self.hdepth,
            "c_bound": self.c_bound,
            "first_failure": None if ff is None else {"d": ff.d, "k": ff.k, "beta": str(ff.value)},
            "certificate": [str(v) for v in self.certificate.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "HdepthReport":
        ff = data["first_failure"]
        cert = [int(v) for v in data["certificate"]]
        return cls(
            coeffs=tuple(int(c) for c in data["coeffs"]),
            hdepth=int(data["hdepth"]),
            c_bound=int(data["c_bound"]),
            first_failure=None if ff is None else Failure(int(ff["d"]), int(ff["k"]), int(ff["beta"])),
            certificate=BetaTable(len(cert) - 1, tuple(cert)),
        )


def hdepth(h: NumFn, cap: int = DEFAULT_CAP) -> HdepthReport:
    """Largest ``d`` with every ``beta_k^d(h) >= 0``.

    The valid ``d`` form an initial segment of the naturals, so the scan
    stops at the first row holding a negative entry.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    cb = c_bound(h)
    limit = min(cb, cap)
    best = None
    for d, row in enumerate(beta_rows(h)):
        k = next((i for i, v in enumerate(row) if v < 0), None)
        if k is not None:
            return HdepthReport(h.coeffs, d - 1, cb, Failure(d, k, row[k]), best)
        best = BetaTable(d, tuple(row))
        if d >= limit:
            break
    if limit < cb:
        raise CapExceeded(cap, cb)
    return HdepthReport(h.coeffs, limit, cb, None, best)


def valid_depths_full_scan(h: NumFn) -> list[int]:
    """Every ``d <= c(h)`` whose whole beta row is nonnegative, without early exit."""
    cb = c_bound(h)
    out = []
    for d, row in enumerate(beta_rows(h)):
        if d > cb:
            break
        if all(v >= 0 for v in row):
            out.append(d)
    return out
