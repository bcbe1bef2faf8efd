import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertdepth.numfn import (
    CapExceeded,
    HdepthReport,
    NegativeLeading,
    NegativeValue,
    NonPositiveConstantTerm,
    NumFnError,
    beta_direct,
    beta_table,
    c_bound,
    evaluate,
    hdepth,
    valid_depths_full_scan,
    validate,
)
from hilbertdepth.verify import random_valid

H5 = [1, -20, 25]  # 25 j^2 - 20 j + 1


def test_validate_accepts_family_member():
    h = validate(H5)
    assert [evaluate(h, j) for j in range(3)] == [1, 6, 61]


@pytest.mark.parametrize(
    "coeffs,exc",
    [([0, 1], NonPositiveConstantTerm), ([1, -3, 1], NegativeValue), ([1, 2, -1], NegativeLeading)],
)
def test_validate_rejections(coeffs, exc):
    with pytest.raises(exc):
        validate(coeffs)


def test_negative_value_witness():
    with pytest.raises(NegativeValue) as info:
        validate([1, -3, 1])
    assert (info.value.j, info.value.value) == (1, -1)


@pytest.mark.parametrize("bad", [[], [1.5, 2], [True, 1], ["1"]])
def test_validate_rejects_non_integers(bad):
    with pytest.raises(NumFnError):
        validate(bad)


def test_validate_strips_trailing_zeros():
    assert validate([3, 1, 0, 0]).coeffs == (3, 1)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5))
@settings(max_examples=300)
def test_validate_agrees_with_long_brute_force(cs):
    # beyond the Cauchy bound nothing changes, so checking far out is an oracle
    if len(cs) > 1 and cs[-1] == 0:
        return
    brute = cs[0] > 0 and all(sum(c * j**i for i, c in enumerate(cs)) >= 0 for j in range(500))
    try:
        validate(cs)
        ok = True
    except NumFnError:
        ok = False
    assert ok == brute


def test_evaluate_rejects_negative_j():
    with pytest.raises(ValueError):
        evaluate(validate([1]), -1)


@pytest.mark.parametrize("d,k,expected", [(6, 3, -38), (4, 2, 49), (9, 0, 1)])
def test_beta_direct_examples(d, k, expected):
    assert beta_direct(validate(H5), d, k) == expected


def test_beta_direct_matches_closed_form_for_k2():
    # (e/2) d^2 - (a + b + 3e/2) d + (5a + 3b + 2e) with a=25, b=-20, e=1
    h = validate(H5)
    for d in range(2, 30):
        assert 2 * beta_direct(h, d, 2) == d * d - (2 * 5 + 3) * d + 2 * (125 - 60 + 2)


def test_beta_direct_rejects_bad_indices():
    h = validate(H5)
    with pytest.raises(ValueError):
        beta_direct(h, 2, 3)
    with pytest.raises(ValueError):
        beta_direct(h, 2, -1)


@pytest.mark.parametrize(
    "coeffs,d,expected",
    [([5], 1, (5, 0)), ([1, 1], 2, (1, 0, 2)), ([1, 1, 1], 3, (1, 0, 4, 8))],
)
def test_beta_table_examples(coeffs, d, expected):
    assert beta_table(validate(coeffs), d).values == expected


def test_beta_table_family_k5_is_certificate():
    t = beta_table(validate(H5), 5)
    assert t.nonnegative() and t.values[0] == 1 and len(t.values) == 6


@pytest.mark.parametrize("coeffs,expected", [(H5, 6), ([5], 1), ([1, 1], 2), ([3, 1, 1], 1)])
def test_c_bound(coeffs, expected):
    assert c_bound(validate(coeffs)) == expected


def test_hdepth_family_k5():
    rep = hdepth(validate(H5))
    assert (rep.hdepth, rep.c_bound) == (5, 6)
    ff = rep.first_failure
    assert (ff.d, ff.k, ff.value) == (6, 3, -38)
    assert rep.certificate.d == 5 and rep.certificate.nonnegative()


@pytest.mark.parametrize("coeffs,expected", [([5], 1), ([1, 1, 1], 3), ([1, 1], 2)])
def test_hdepth_small(coeffs, expected):
    rep = hdepth(validate(coeffs))
    assert rep.hdepth == expected
    assert rep.first_failure is None and rep.hdepth == rep.c_bound


def test_hdepth_cap():
    h = validate([1, 1, 1])  # hdepth 3 = c(h)
    with pytest.raises(CapExceeded):
        hdepth(h, cap=2)
    # a failure found before the cap is still reported
    assert hdepth(validate([1, 10**9]), cap=50).hdepth <= 4
    # cap at or above the bound is harmless
    assert hdepth(validate([1, 1]), cap=2).hdepth == 2


def test_report_json_round_trip():
    rep = hdepth(validate([7, -3, 10**30]))
    data = json.loads(rep.to_json())
    assert data["coeffs"] == ["7", "-3", str(10**30)]
    assert HdepthReport.from_dict(data) == rep


def test_report_invariants_random():
    rng = random.Random(7)
    for _ in range(300):
        h = random_valid(rng)
        rep = hdepth(h)
        assert 0 <= rep.hdepth <= rep.c_bound
        assert rep.certificate.d == rep.hdepth and rep.certificate.nonnegative()
        if rep.first_failure is None:
            assert rep.hdepth == rep.c_bound
        else:
            assert rep.first_failure.d == rep.hdepth + 1 and rep.first_failure.value < 0
            assert beta_direct(h, rep.first_failure.d, rep.first_failure.k) == rep.first_failure.value


@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=6),
    st.integers(0, 40),
)
@settings(max_examples=200)
def test_table_equals_direct_sum(cs, d):
    try:
        h = validate(cs)
    except NumFnError:
        return
    assert list(beta_table(h, d).values) == [beta_direct(h, d, k) for k in range(d + 1)]


def test_downward_closure_random():
    rng = random.Random(11)
    for _ in range(200):
        h = random_valid(rng)
        assert valid_depths_full_scan(h) == list(range(hdepth(h).hdepth + 1))


@pytest.mark.parametrize("m", [2, 7, 1000])
def test_scaling(m):
    rng = random.Random(m)
    for _ in range(100):
        h = random_valid(rng)
        hm = h.scaled(m)
        assert hdepth(hm).hdepth == hdepth(h).hdepth
        d = rng.randint(0, 10)
        k = rng.randint(0, d)
        assert beta_direct(hm, d, k) == m * beta_direct(h, d, k)


def test_nonnegative_coefficients_bound():
    for cs in [(1, 4), (1, 3, 3, 1), (2, 7, 1), (1, 50, 50, 50, 50)]:
        h = validate(cs)
        assert hdepth(h).hdepth <= 2 ** (h.degree + 1)
