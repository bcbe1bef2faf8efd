import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertdepth.numfn import PreconditionFailed, beta_direct, hdepth, validate
from hilbertdepth.quadratic import (
    QuadCase,
    QuadParams,
    bound_quadratic,
    classify,
    disc2,
    f2,
    f2_roots,
    family_beta36,
    family_delta,
    family_disc2,
    g2,
    g2_at_14,
    g2_binomial,
    g2_t_alpha,
    family_member,
    upper_via_f2,
)
from hilbertdepth.verify import QUICK_QUAD_BOX, brute_nonneg, quadratic_suite


def test_classify_positive_case():
    c = classify(QuadParams(25, -20, 1))
    assert c.case is QuadCase.A_NONNEG_B_NEG and c.valid and c.strictly_positive


def test_classify_double_root():
    p = QuadParams(1, -2, 1)
    c = classify(p)
    assert c.case is QuadCase.SUM_NEG_DELTA_ZERO and c.valid and c.zero_at == 1
    assert hdepth(validate(p.coeffs)).hdepth == 0


def test_classify_boundary_interval():
    # roots (6 -+ 2)/8 = 1/2 and 1 sit exactly in [0, 1]
    c = classify(QuadParams(4, -6, 2))
    assert c.case is QuadCase.SUM_NEG_DELTA_POS and c.valid and c.ell == 0
    assert c.root_interval == ("0.500000", "1.000000")
    assert not c.strictly_positive


def test_classify_invalid():
    c = classify(QuadParams(1, -3, 1))
    assert c.case is QuadCase.SUM_NEG_DELTA_POS and not c.valid


def test_classify_negative_discriminant_and_b_nonneg():
    assert classify(QuadParams(1, 3, 1)).case is QuadCase.B_NONNEG
    c = classify(QuadParams(5, -6, 2))
    assert c.case is QuadCase.SUM_NEG_DELTA_NEG and c.valid


def test_classify_json():
    data = json.loads(json.dumps(classify(QuadParams(4, -6, 2)).to_dict()))
    assert data["case"] == "SumNegDeltaPos" and data["root_interval"]["lo"] == "0.500000"


def test_classify_rejects_bad_params():
    with pytest.raises(PreconditionFailed):
        classify(QuadParams(0, 1, 1))


@given(st.integers(1, 40), st.integers(-150, 150), st.integers(1, 40))
@settings(max_examples=500)
def test_classifier_matches_brute_force(a, b, e):
    assert classify(QuadParams(a, b, e)).valid == brute_nonneg([e, b, a])


def test_f2_examples():
    assert f2(QuadParams(25, -20, 1), 4) == 49
    assert f2(QuadParams.from_ratios(0, 0), 1) == 1
    assert f2(QuadParams(20, -9, 1), 10) == 0


def test_disc2_examples():
    assert disc2(QuadParams(25, -20, 1)) == Fraction(-367, 4)
    assert disc2(QuadParams.from_ratios(0, 0)) == Fraction(-7, 4)
    assert disc2(QuadParams.from_ratios(Fraction(-3, 4), Fraction(13, 4))) == 0


def test_f2_roots():
    assert f2_roots(QuadParams(25, -20, 1)) is None
    x1, x2 = f2_roots(QuadParams(20, -9, 1))
    assert 10 in x1 and 15 in x2
    y1, y2 = f2_roots(QuadParams.from_ratios(Fraction(-3, 4), Fraction(13, 4)))
    assert y1 == y2 and 4 in y1


@given(st.integers(1, 40), st.integers(-100, 100), st.integers(1, 40), st.integers(0, 60))
@settings(max_examples=300)
def test_f2_negative_exactly_between_roots(a, b, e, d):
    p = QuadParams(a, b, e)
    roots = f2_roots(p, Fraction(1, 10**9))
    if roots is None or roots[0] == roots[1]:
        assert f2(p, d) >= 0
        return
    x1, x2 = roots
    if d in x1 or d in x2:
        return
    assert (f2(p, d) < 0) == (x1.hi <= d <= x2.lo)


def test_upper_via_f2():
    h = validate([1, -9, 20])
    assert upper_via_f2(h) == 11
    assert hdepth(h).hdepth <= 10
    assert upper_via_f2(validate([1, -20, 25])) is None
    with pytest.raises(PreconditionFailed):
        upper_via_f2(validate([1, 0, 1]))


def test_g2_examples():
    assert g2(QuadParams(25, -20, 1), 14) == -462
    assert g2(QuadParams.from_ratios(0, 0), 2) == 1


@given(st.integers(1, 50), st.integers(-100, 100), st.integers(1, 50), st.fractions(-30, 30, max_denominator=20))
@settings(max_examples=300)
def test_g2_forms_agree(a, b, e, x):
    p = QuadParams(a, b, e)
    assert g2(p, x) == g2_binomial(p, x) == g2_t_alpha(p, x)
    assert g2(p, 14) == g2_at_14(p)


def test_closed_forms_match_sums():
    for cs in ([1, -20, 25], [3, -7, 11], [5, 2, 1]):
        h = validate(cs)
        p = QuadParams.from_numfn(h)
        for d in range(3, 30):
            assert p.e * f2(p, d) == beta_direct(h, d, 2)
            assert p.e * g2(p, d) == beta_direct(h, d, 3)


@pytest.mark.parametrize("abe,bound", [((1, 3, 1), 8), ((1, -1, 1), 11), ((25, -20, 1), 13)])
def test_bound_quadratic(abe, bound):
    assert bound_quadratic(QuadParams(*abe)) == bound


@pytest.mark.parametrize("k", [4, 5, 10])
def test_family(k):
    h, rep = family_member(k)
    assert rep.hdepth == 5
    assert beta_direct(h, 6, 3) == family_beta36(k) < 0
    p = QuadParams.from_numfn(h)
    assert p.delta == family_delta(k) > 0
    assert disc2(p) == family_disc2(k) < 0


def test_family_k4_certificate():
    _, rep = family_member(4)
    assert rep.certificate.values == (1, 0, 31, 6, 99, 204)
    assert rep.c_bound == 5


def test_family_rejects_small_k():
    with pytest.raises(PreconditionFailed):
        family_member(3)


def test_quadratic_suite_quick_box():
    res = quadratic_suite(QUICK_QUAD_BOX)
    assert res.ok, [(c.name, c.examples) for c in res.checks.values() if not c.passed]
    assert res.checks["classifier_matches_brute_force"].tested == 8 * 81 * 8
