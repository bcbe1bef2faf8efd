"""Property suites for every lemma and theorem, run over coefficient boxes.

Each suite returns a :class:`SuiteResult` listing counterexamples per
property. Properties marked empirical are claims whose failure is reported
as a finding rather than an engine defect.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from . import cubic, geometry, quadratic
from .numfn import NumFn, NumFnError, beta_direct, beta_rows, hdepth, validate

EXAMPLE_LIMIT = 10

QUAD_BOX = {"a": (1, 30), "b": (-110, 110), "e": (1, 30)}
CUBIC_BOX = {"a": (1, 12), "b": (-20, 20), "c": (-20, 20), "e": (1, 8)}
QUICK_QUAD_BOX = {"a": (1, 8), "b": (-40, 40), "e": (1, 8)}
QUICK_CUBIC_BOX = {"a": (1, 4), "b": (-10, 10), "c": (-10, 10), "e": (1, 4)}

REFERENCE_POINTS = [(0.19, -0.87), (0.39, -1.26), (2.12, 2.91), (19.29, -8.78)]
REFERENCE_MAX_SUM = 10.51


@dataclass
class Check:
    name: str
    empirical: bool = False
    tested: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, example=None) -> None:
        self.tested += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < EXAMPLE_LIMIT:
                self.examples.append(example)

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class SuiteResult:
    name: str
    checks: dict = field(default_factory=dict)

    def check(self, name: str, empirical: bool = False) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name, empirical)
        return self.checks[name]

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks.values() if not c.passed and not c.empirical]

    @property
    def findings(self) -> list[Check]:
        return [c for c in self.checks.values() if not c.passed and c.empirical]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.findings

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checks": {
                c.name: {
                    "empirical": c.empirical,
                    "tested": c.tested,
                    "failures": c.failures,
                    "examples": [[str(v) for v in ex] for ex in c.examples],
                }
                for c in self.checks.values()
            },
        }


def brute_nonneg(coeffs) -> bool:
    """``h(j) >= 0`` for ``j = 0..M`` with ``M`` the Cauchy bound, by direct evaluation."""
    lead = coeffs[-1]
    m = 1 + -(-max(abs(c) for c in coeffs[:-1]) // lead)
    return all(sum(c * j**i for i, c in enumerate(coeffs)) >= 0 for j in range(m + 1))


def random_valid(rng: random.Random, max_degree: int = 5, lo: int = -50, hi: int = 50) -> NumFn:
    """Rejection-sample a valid numerical function with coefficients in ``[lo, hi]``."""
    while True:
        n = rng.randint(0, max_degree)
        cs = [rng.randint(max(lo, 1), hi)] + [rng.randint(lo, hi) for _ in range(n)]
        if n and cs[-1] <= 0:
            continue
        try:
            return validate(cs)
        except NumFnError:
            continue


def _quad_grid(box) -> Iterator[tuple[int, int, int]]:
    (a0, a1), (b0, b1), (e0, e1) = box["a"], box["b"], box["e"]
    return itertools.product(range(a0, a1 + 1), range(b0, b1 + 1), range(e0, e1 + 1))


def _cubic_grid(box) -> Iterator[tuple[int, int, int, int]]:
    return itertools.product(*(range(lo, hi + 1) for lo, hi in (box[k] for k in "abce")))


def quadratic_suite(box=QUAD_BOX) -> SuiteResult:
    res = SuiteResult("quadratic")
    cls_check = res.check("classifier_matches_brute_force")
    l22_eq = res.check("small_t_depth_equals_c")
    l22_ge = res.check("large_t_depth_at_least_2")
    l24 = res.check("f2_bound_sound")
    l26 = res.check("nonneg_large_t_disc2_above_quarter")
    l27 = res.check("disc2_above_quarter_depth_le_11")
    t210 = res.check("small_disc2_g14_negative")
    g14 = res.check("g14_identity")
    bound = res.check("bound_quadratic")
    cor = res.check("depth_le_13")
    l21_3 = res.check("sum_negative_depth_zero")
    for a, b, e in _quad_grid(box):
        p = quadratic.QuadParams(a, b, e)
        cls = quadratic.classify(p)
        brute = brute_nonneg(p.coeffs)
        cls_check.record(cls.valid == brute, (a, b, e))
        if not brute:
            continue
        h = validate(p.coeffs)
        rep = hdepth(h)
        hd, t = rep.hdepth, p.t
        if t < 2:
            l22_eq.record(hd == rep.c_bound, (a, b, e, hd))
        else:
            l22_ge.record(hd >= 2, (a, b, e, hd))
            d = quadratic.upper_via_f2(h)
            if d is not None:
                l24.record(hd < d, (a, b, e, hd, d))
        if a + b < 0:
            l21_3.record(hd == 0, (a, b, e, hd))
        dis = quadratic.disc2(p)
        if p.delta <= 0 and t >= 11:
            l26.record(dis > quadratic.QUARTER, (a, b, e))
        if dis > quadratic.QUARTER:
            l27.record(hd <= 11, (a, b, e, hd))
        g = quadratic.g2(p, 14)
        g14.record(g == quadratic.g2_at_14(p), (a, b, e))
        if b < 0 and p.delta > 0 and dis <= quadratic.QUARTER:
            t210.record(g < 0, (a, b, e))
        bound.record(hd <= quadratic.bound_quadratic(p), (a, b, e, hd))
        cor.record(hd <= 13, (a, b, e, hd))
    return res


def cubic_suite(box=CUBIC_BOX) -> SuiteResult:
    res = SuiteResult("cubic")
    l31_eq = res.check("cubic_small_t_depth_equals_c", empirical=True)
    l31_ge = res.check("cubic_large_t_depth_at_least_3", empirical=True)
    mono = res.check("nondecreasing_spot_check")
    amgm = res.check("amgm_step")
    l33 = res.check("f3_bound_sound")
    l34 = res.check("t0_inequality")
    l35 = res.check("t0_implication")
    bound = res.check("bound_cubic")
    gscan = res.check("g_scan_sound")
    g11 = res.check("g11_identity")
    for a, b, c, e in _cubic_grid(box):
        p = cubic.CubicParams(a, b, c, e)
        try:
            h = validate(p.coeffs)
        except NumFnError:
            continue
        rep = hdepth(h)
        hd, t = rep.hdepth, p.t
        if t < 2:
            l31_eq.record(hd == rep.c_bound, (a, b, c, e, hd, rep.c_bound))
        else:
            l31_ge.record(hd >= 3, (a, b, c, e, hd, rep.c_bound))
            d = cubic.upper_via_f3(h)
            if d is not None:
                l33.record(hd < d, (a, b, c, e, hd, d))
        if cubic.is_nondecreasing(p):
            mono.record(all(h(j + 1) >= h(j) for j in range(101)), (a, b, c, e))
        if b < 0 and cubic.is_nondecreasing(p):
            amgm.record(p.beta**2 <= 3 * p.alpha * p.gamma, (a, b, c, e))
            l34.record(cubic.t0_inequality_holds(p), (a, b, c, e))
            l35.record(cubic.t0_implication_holds(p), (a, b, c, e))
        verdict = cubic.bound_cubic(p)
        if verdict.bound is not None:
            bound.record(hd <= verdict.bound, (a, b, c, e, hd, verdict.bound))
        if verdict.gscan_bound is not None:
            gscan.record(hd <= verdict.gscan_bound, (a, b, c, e, hd, verdict.gscan_d))
        g11.record(cubic.g3(p, 11) == cubic.g3_at_11(p), (a, b, c, e))
    return res


def family_suite(k_range=range(4, 201)) -> SuiteResult:
    res = SuiteResult("family")
    depth = res.check("hdepth_is_5")
    b36 = res.check("beta36_formula_negative")
    dpos = res.check("delta_positive")
    d2 = res.check("disc2_formula_negative")
    for k in k_range:
        h, rep = quadratic.family_member(k)
        p = quadratic.QuadParams.from_numfn(h)
        depth.record(rep.hdepth == 5, (k, rep.hdepth))
        v = beta_direct(h, 6, 3)
        b36.record(v == quadratic.family_beta36(k) and v < 0, (k, v))
        dpos.record(p.delta == quadratic.family_delta(k) and p.delta > 0, (k, p.delta))
        dd = quadratic.disc2(p)
        d2.record(dd == quadratic.family_disc2(k) and dd < 0, (k, dd))
    return res


def identity_suite(n: int = 100, seed: int = 0, d_range=range(2, 41)) -> SuiteResult:
    """Closed forms of ``f`` and ``g`` against the defining sums."""
    res = SuiteResult("identities")
    rng = random.Random(seed)
    fq = res.check("quadratic_f")
    gq = res.check("quadratic_g")
    gforms = res.check("quadratic_g_forms")
    fc = res.check("cubic_f")
    gc = res.check("cubic_g")
    for _ in range(n):
        while True:
            try:
                h = validate([rng.randint(1, 50), rng.randint(-50, 50), rng.randint(1, 50)])
                break
            except NumFnError:
                continue
        p = quadratic.QuadParams.from_numfn(h)
        for d in d_range:
            fq.record(p.e * quadratic.f2(p, d) == beta_direct(h, d, 2), (h.coeffs, d))
            if d >= 3:
                gq.record(p.e * quadratic.g2(p, d) == beta_direct(h, d, 3), (h.coeffs, d))
            gforms.record(
                quadratic.g2(p, d) == quadratic.g2_binomial(p, d) == quadratic.g2_t_alpha(p, d),
                (h.coeffs, d),
            )
    for _ in range(n):
        while True:
            try:
                h = validate([rng.randint(1, 50), rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(1, 50)])
                break
            except NumFnError:
                continue
        p = cubic.CubicParams.from_numfn(h)
        for d in d_range:
            fc.record(p.e * cubic.f3(p, d) == beta_direct(h, d, 2), (h.coeffs, d))
            if d >= 3:
                gc.record(p.e * cubic.g3(p, d) == beta_direct(h, d, 3), (h.coeffs, d))
    return res


def core_suite(n: int = 1000, seed: int = 0, d_max: int = 60) -> SuiteResult:
    res = SuiteResult("core")
    rng = random.Random(seed)
    oracle = res.check("beta_table_equals_direct")
    closure = res.check("downward_closure")
    scaling = res.check("scaling_invariance")
    cbound = res.check("hdepth_le_c_bound")
    thm12 = res.check("nonneg_coeff_bound")
    for _ in range(n):
        h = random_valid(rng)
        rep = hdepth(h)
        cb = rep.c_bound
        top = min(cb, d_max)
        for d, row in zip(range(top + 1), beta_rows(h)):
            direct = [beta_direct(h, d, k) for k in range(d + 1)]
            oracle.record(row == direct, (h.coeffs, d))
        valid = [d for d, row in zip(range(cb + 1), beta_rows(h)) if min(row) >= 0]
        closure.record(valid == list(range(rep.hdepth + 1)), (h.coeffs,))
        for m in (2, 7, 1000):
            scaling.record(hdepth(h.scaled(m)).hdepth == rep.hdepth, (h.coeffs, m))
        cbound.record(rep.hdepth <= cb, (h.coeffs,))
        if all(c >= 0 for c in h.coeffs):
            thm12.record(rep.hdepth <= 2 ** (h.degree + 1), (h.coeffs, rep.hdepth))
    return res


def geometry_suite(tol: Fraction = Fraction(1, 100)) -> SuiteResult:
    res = SuiteResult("geometry")
    dom = geometry.k_intersections(tol)
    pts = res.check("intersections_match_reference")
    for pt, (x, y) in zip(dom.points, REFERENCE_POINTS):
        pts.record(abs(float(pt.x) - x) <= 0.01 and abs(float(pt.y) - y) <= 0.01, (pt.x, pt.y))
    res.check("max_sum_matches_reference").record(abs(float(dom.max_sum) - REFERENCE_MAX_SUM) <= 0.01, (dom.max_sum,))
    res.check("quartic_derivation").record(geometry.quartic_from_substitution() == geometry.QUARTIC, ())
    res.check("vertex_on_parabola").record(geometry.F(*geometry.VERTEX) == 0, geometry.VERTEX)
    res.check("focus_in_D").record(geometry.membership(*geometry.FOCUS).in_d, geometry.FOCUS)
    bounded = res.check("k_bounded_sample")
    rng = random.Random(0)
    for _ in range(2000):
        x = Fraction(rng.randint(-10**5, 10**5), 100)
        y = Fraction(rng.randint(-10**5, 10**5), 100)
        if geometry.membership(x, y).in_k:
            bounded.record(0 <= x <= 20 and -9 <= y <= 3, (x, y))
        else:
            bounded.record(True)
    resid = res.check("residuals_small")
    for pt in dom.points:
        resid.record(abs(geometry.F(pt.x, pt.y)) < 10 * tol and abs(geometry.G(pt.x, pt.y)) < 10 * tol, (pt.x, pt.y))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "core": core_suite,
    "quadratic": quadratic_suite,
    "cubic": cubic_suite,
    "family": family_suite,
    "identities": identity_suite,
    "geometry": geometry_suite,
}


def run_suites(names, quick: bool = False) -> list[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    out = []
    for name in names:
        if quick and name == "quadratic":
            out.append(quadratic_suite(QUICK_QUAD_BOX))
        elif quick and name == "cubic":
            out.append(cubic_suite(QUICK_CUBIC_BOX))
        elif quick and name == "core":
            out.append(core_suite(n=100))
        else:
            out.append(SUITES[name]())
    return out


def exit_status(results: list[SuiteResult]) -> int:
    """0 when every property held, 3 on any violation or empirical finding."""
    return 3 if any(not r.ok for r in results) else 0


def first_failure(results: list[SuiteResult]) -> Optional[Check]:
    for r in results:
        for c in r.checks.values():
            if not c.passed:
                return c
    return None
