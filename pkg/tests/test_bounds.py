import math

import numpy as np
import pytest

from univradius import bounds
from univradius.bounds import (
    HALF_N_PLUS_1,
    N,
    ONE,
    PRESETS,
    TWO_OVER_N,
    CoeffClass,
    dist_bound,
    k1_alpha,
    majorant_u_series,
    mod_bound,
    product_tail,
    resid_bound,
    resolve_class,
    series_tail,
    uF_bound,
)
from univradius.errors import InvalidRadius
from univradius.radii import CASES

ALL_PRESETS = [ONE, N, TWO_OVER_N, HALF_N_PLUS_1, k1_alpha(0.25)]
R_GRID = [0.05 * k for k in range(1, 9)]


def direct_sums(cls, r, terms=10_000):
    n = np.arange(2, terms + 2, dtype=float)
    w = cls.A(n) * r ** (n - 1)
    return float(np.sum(w)), float(np.sum((n - 2) * w))


def analytic_tail(cls, r, terms=10_000):
    """Crude majorant for what a 10^4-term sum leaves out, including the (n-2) weight."""
    n = terms + 2
    return (abs(cls.a) + abs(cls.b) + cls.c * n) * n * r ** (n - 1) / (1 - r) ** 3


def test_class_validation():
    with pytest.raises(ValueError):
        CoeffClass(1, 0, -1)
    with pytest.raises(ValueError):
        CoeffClass(-1, 1, 0)
    with pytest.raises(ValueError):
        CoeffClass(-0.5, 0, 0.1)
    assert CoeffClass(0.5, 0, 0.5).A(2) == 1.5
    assert HALF_N_PLUS_1.A(7) == 4


def test_presets_match_stated_bounds():
    n = np.arange(2, 40)
    np.testing.assert_allclose(ONE.A(n), 1)
    np.testing.assert_allclose(N.A(n), n)
    np.testing.assert_allclose(TWO_OVER_N.A(n), 2 / n)
    np.testing.assert_allclose(HALF_N_PLUS_1.A(n), (n + 1) / 2)
    np.testing.assert_allclose(k1_alpha(0.3).A(n), 2 * 0.7 / n)


def test_resolve_class():
    assert resolve_class("one") is ONE
    assert resolve_class("1,0,0") == CoeffClass(1.0, 0.0, 0.0)
    assert resolve_class("K1_ALPHA(0.5)").b == 1.0
    with pytest.raises(ValueError):
        resolve_class("nope")


def test_dist_bound_examples():
    assert abs(dist_bound(ONE, 0.5) - 1) < 1e-15
    for cls in ALL_PRESETS:
        assert dist_bound(cls, 0) == 0
    assert abs(dist_bound(N, 0.5) - 3) < 1e-15
    with pytest.raises(InvalidRadius):
        dist_bound(ONE, 1.0)


def test_mod_bound_examples():
    assert abs(mod_bound(ONE, 0.5) - 2) < 1e-15
    assert abs(mod_bound(TWO_OVER_N, 0.5) - (-1 + 4 * math.log(2))) < 1e-15
    assert abs(mod_bound(HALF_N_PLUS_1, 0.5) - 3) < 1e-15


def test_resid_bound_examples():
    assert abs(resid_bound(ONE, 0.5) - 1) < 1e-15
    assert abs(resid_bound(N, 0.5) - 5) < 1e-15
    assert abs(resid_bound(HALF_N_PLUS_1, 0.5) - 3) < 1e-15
    assert resid_bound(TWO_OVER_N, 0) == 0


def test_resid_bound_matches_printed_form():
    def printed(cls, r):
        a, b, c = cls.a, cls.b, cls.c
        return (
            a + b + c - (2 * a - b) / (1 - r) + (a - 2 * c) / (1 - r) ** 2 + c * (1 + r) / (1 - r) ** 3
            + 2 * b * math.log(1 - r) / r
        )

    for cls in ALL_PRESETS:
        for r in np.linspace(0.01, 0.9, 50):
            assert abs(resid_bound(cls, r) - printed(cls, r)) < 1e-12


def test_small_r_both_branches_accurate():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 40
    for r in (1e-9, 1e-6, 1e-4, 1e-3, 0.0499999, 0.0500001, 0.2):
        exact = -mpmath.log(1 - mpmath.mpf(r)) / r - 1
        got = bounds._log_ratio_minus_one(r)
        assert abs(got - float(exact)) <= 1e-14 * float(exact)
    for cls in ALL_PRESETS:
        assert dist_bound(cls, 1e-8) > 0


@pytest.mark.parametrize("cls", ALL_PRESETS, ids=lambda c: c.label)
@pytest.mark.parametrize("r", R_GRID)
def test_bounds_equal_coefficient_sums(cls, r):
    d_sum, resid_sum = direct_sums(cls, r)
    tail = analytic_tail(cls, r)
    assert abs(dist_bound(cls, r) - d_sum) <= tail + 1e-13
    assert abs(resid_bound(cls, r) - resid_sum) <= tail + 1e-13


@pytest.mark.parametrize("cls", ALL_PRESETS, ids=lambda c: c.label)
def test_mod_minus_dist_is_one(cls):
    for r in np.linspace(0, 0.95, 60):
        assert abs(mod_bound(cls, r) - dist_bound(cls, r) - 1) < 1e-14


def test_uF_bound_examples():
    assert abs(uF_bound(ONE, ONE, 1 / 3) - 1) < 1e-14
    assert abs(uF_bound(N, N, 0.2) - 1) < 1e-14
    for a in ALL_PRESETS:
        for b in ALL_PRESETS:
            assert uF_bound(a, b, 0) == 0


def test_uF_bound_symmetric():
    for a in ALL_PRESETS:
        for b in ALL_PRESETS:
            for r in R_GRID:
                assert uF_bound(a, b, r) == uF_bound(b, a, r)


def _L(r):
    return math.log(1 - r)


def _h(r):
    return -1 - 2 / r * _L(r)


# Closed forms obtained case by case for the bound on |U_F|.
PROOF_FORMS = {
    "T1a": lambda r: 1 + (3 * r - 1) / (1 - r) ** 3,
    "T1b": lambda r: 1 + (4 * r - 1) / (1 - r) ** 4,
    "T1c": lambda r: 1 + (5 * r - 1) / (1 - r) ** 5,
    "T2a": lambda r: 1 - (2 * r - 3 + 2 * (3 * r - 2) / r * _L(r)) / (1 - r) ** 2,
    "T2b": lambda r: 1 - (4 * (2 * r - 1) / r * _L(r) - 3 * (1 - r)) / (1 - r) ** 3,
    "T2c": lambda r: 1 + _h(r) * ((5 - r) / (1 - r) + 6 / r * _L(r)),
    "T3a": lambda r: 1 - (3 * r * r - 8 * r + 2) / (2 * (1 - r) ** 4),
    "T3b": lambda r: 1 - (2 * r * r - 5 * r + 1) / (1 - r) ** 5,
    "T3c": lambda r: 1 - ((r - 3) * (1 - r) - (4 - 9 * r + 3 * r * r) / r * _L(r)) / (1 - r) ** 3,
}

RADIUS_APPROX = {"T1a": 1 / 3, "T1b": 0.25, "T1c": 0.2, "T2a": 0.36027, "T2b": 0.26073,
                 "T2c": 0.399185, "T3a": 0.27924, "T3b": 0.21922, "T3c": 0.29399}


@pytest.mark.parametrize("case_id", list(CASES))
def test_uF_bound_reproduces_case_forms(case_id):
    spec = CASES[case_id]
    grid = np.linspace(0, 0.95 * RADIUS_APPROX[case_id], 201)[1:]
    for r in grid:
        assert abs(uF_bound(spec.cls_f, spec.cls_g, r) - PROOF_FORMS[case_id](r)) < 1e-10


@pytest.mark.parametrize("case_id", list(CASES))
def test_uF_bound_monotone_past_radius(case_id):
    spec = CASES[case_id]
    fn = lambda r: uF_bound(spec.cls_f, spec.cls_g, r)  # noqa: E731
    assert bounds.is_strictly_increasing(fn, 0, RADIUS_APPROX[case_id] + 0.1, 400)


def test_series_tail_matches_direct_sum():
    for cls in ALL_PRESETS:
        for r in (0.1, 0.4):
            order = 30
            d_sum, _ = direct_sums(cls, r, 5000)
            head = sum(cls.A(n) * r ** (n - 1) for n in range(2, order + 1))
            assert abs(series_tail(cls, r, order) - (d_sum - head)) < 1e-14


def test_majorant_evaluates_to_uF_bound():
    for a in (ONE, N, TWO_OVER_N, HALF_N_PLUS_1):
        for b in (ONE, N, TWO_OVER_N, HALF_N_PLUS_1):
            m = majorant_u_series(a, b, 600)
            assert m[0] == 0 and m[1] == 0
            assert np.all(m >= 0)
            assert abs(np.polynomial.polynomial.polyval(0.3, m) - uF_bound(a, b, 0.3)) < 1e-12


def test_product_tail():
    assert product_tail(ONE, ONE, 0.0, 64) == 0
    t_small = product_tail(ONE, ONE, 0.3, 128)
    assert 0 < t_small < 1e-14
    t = product_tail(N, TWO_OVER_N, 0.6, 32)
    m = majorant_u_series(N, TWO_OVER_N, 2000)
    expected = float(np.sum(m[32:] * 0.6 ** np.arange(32, 2001)))
    assert abs(t - expected) < 1e-12 * max(1, expected)
    assert t >= expected * (1 - 1e-12)


def test_preset_table():
    assert set(PRESETS) == {"ONE", "N", "TWO_OVER_N", "HALF_N_PLUS_1"}
