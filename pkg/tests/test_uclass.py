import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from series_gen import admissible_normalized, random_normalized
from univradius.errors import InvalidRadius
from univradius.powser import NormalizedSeries, Series, evaluate, mul, reciprocal, rescale
from univradius.uclass import (
    F_series,
    Verdict,
    in_class_U,
    max_modulus_on_circle,
    u_functional,
    u_of_product,
)

ORDER = 64


def geometric_f(order=ORDER):
    return NormalizedSeries(np.r_[0.0, np.ones(order)])


def koebe(order=ORDER):
    return NormalizedSeries(np.arange(order + 1, dtype=float))


def z_over(poly, order=ORDER):
    """z / P(z) for a polynomial P with P(0) = 1."""
    p = np.zeros(order, dtype=complex)
    p[: len(poly)] = poly
    return NormalizedSeries(Series(np.r_[0, reciprocal(Series(p)).coeffs]).coeffs)


def direct_U_F(f, g):
    """U of F = z^3/(f g), built by reciprocal and the single-function functional."""
    return u_functional(F_series(f, g))


def uF_closed_geometric(z):
    # f = g = z/(1-z): U_F = z^2 (z - 3)/(1 - z)^3
    return z * z * (z - 3) / (1 - z) ** 3


def test_u_functional_examples():
    u = u_functional(geometric_f())
    assert np.max(np.abs(u.coeffs)) < 1e-12
    assert np.all(u_functional(NormalizedSeries([0, 1, 0, 0])).coeffs == 0)
    k = u_functional(koebe())
    assert abs(k.coeffs[2] + 1) < 1e-12
    others = np.delete(k.coeffs, 2)
    assert np.max(np.abs(others)) < 1e-12
    assert k.order == ORDER - 1


def test_u_functional_constant_term_zero():
    rng = np.random.default_rng(10)
    for _ in range(50):
        f = random_normalized(rng, 40)
        assert abs(u_functional(f).coeffs[0]) <= 1e-14


def test_u_of_product_examples():
    ident = NormalizedSeries([0, 1, 0, 0, 0])
    assert np.all(u_of_product(ident, ident).coeffs == 0)

    g = geometric_f()
    u = u_of_product(g, g)
    assert abs(evaluate(u, 1 / 3) + 1) < 1e-12
    for z in (0.1, 0.2 + 0.1j, -0.3):
        assert abs(evaluate(u, z) - uF_closed_geometric(z)) < 1e-12

    k = koebe()
    assert u_of_product(k, g).allclose(direct_U_F(k, g), atol=1e-10)


def test_decomposition_matches_direct_route():
    # f/z, g/z zero-free in the disk, as the construction of F assumes
    rng = np.random.default_rng(11)
    for _ in range(100):
        f, g = admissible_normalized(rng, 64), admissible_normalized(rng, 64)
        assert u_of_product(f, g).allclose(direct_U_F(f, g), atol=1e-10)


def test_F_series_examples():
    g = geometric_f(16)
    F = F_series(g, g)
    np.testing.assert_allclose(F.coeffs[:4].real, [0, 1, -2, 1], atol=1e-14)
    assert np.max(np.abs(F.coeffs[4:])) < 1e-13


def test_max_modulus_examples():
    res = max_modulus_on_circle(Series([0, 1]), 0.5, 64)
    assert abs(res.max_modulus - 0.5) < 1e-15

    u = u_of_product(geometric_f(128), geometric_f(128))
    res = max_modulus_on_circle(u, 1 / 3)
    assert abs(res.max_modulus - 1) < 1e-9
    assert res.argmax_angle == 0.0

    res = max_modulus_on_circle(u, 0.30)
    expected = 0.09 * 2.7 / 0.343
    assert res.max_modulus < 1
    assert abs(res.max_modulus - expected) < 1e-12


def test_max_modulus_validation():
    with pytest.raises(InvalidRadius):
        max_modulus_on_circle(Series([0, 1]), 1.0)
    with pytest.raises(InvalidRadius):
        max_modulus_on_circle(Series([0, 1]), 0.0)
    with pytest.raises(ValueError):
        max_modulus_on_circle(Series([0, 1]), 0.5, samples=8)


def test_scan_result_invariants():
    rng = np.random.default_rng(12)
    for _ in range(10):
        s = Series(rng.normal(size=20) + 1j * rng.normal(size=20))
        res = max_modulus_on_circle(s, 0.7, 256)
        assert 0 <= res.argmax_angle < 2 * math.pi
        theta = np.arange(256) * 2 * math.pi / 256
        assert res.max_modulus >= np.max(np.abs(evaluate(s, 0.7 * np.exp(1j * theta)))) - 1e-15


def test_refinement_finds_off_grid_maximum():
    # |1 + z e^{-i a}| peaks at angle a, deliberately between grid points
    a = 0.123456
    s = Series([1, np.exp(-1j * a)])
    res = max_modulus_on_circle(s, 0.5, 16)
    assert abs(res.argmax_angle - a) < 1e-6
    assert abs(res.max_modulus - 1.5) < 1e-12


def test_in_class_U_examples():
    assert in_class_U(koebe(128), 0.9) is Verdict.MEMBER
    g = geometric_f(128)
    assert in_class_U(F_series(g, g), 0.35) is Verdict.NONMEMBER
    rng = np.random.default_rng(13)
    assert in_class_U(random_normalized(rng, 64), 0.01) is Verdict.MEMBER


def test_in_class_U_inconclusive_band():
    g = geometric_f(128)
    F = F_series(g, g)
    assert in_class_U(F, 1 / 3, tol=1e-6) is Verdict.INCONCLUSIVE
    assert in_class_U(F, 0.3, tail_bound=0.5) is Verdict.INCONCLUSIVE


def test_in_class_U_validation():
    with pytest.raises(InvalidRadius):
        in_class_U(koebe(), 1.2)
    with pytest.raises(ValueError):
        in_class_U(koebe(), 0.5, lam=1.5)


S_Z = [
    NormalizedSeries([0, 1, 0]),
    z_over([1, -1], 128),
    z_over([1, 1], 128),
    z_over([1, -2, 1], 128),
    z_over([1, 2, 1], 128),
    z_over([1, 0, -1], 128),
    z_over([1, 0, 1], 128),
    z_over([1, -1, 1], 128),
    z_over([1, 1, 1], 128),
]


@pytest.mark.parametrize("f", S_Z, ids=range(len(S_Z)))
def test_integer_coefficient_functions_never_nonmember(f):
    assert in_class_U(f, 0.99, 1.0, 1e-6) in (Verdict.MEMBER, Verdict.INCONCLUSIVE)


dyadic = st.integers(min_value=1, max_value=4).map(lambda k: 2.0**-k)


@settings(max_examples=30, deadline=None)
@given(r=dyadic, q=dyadic, seed=st.integers(0, 2**32 - 1), lam=st.sampled_from([0.25, 0.5, 1.0]))
def test_verdict_scale_covariance(r, q, seed, lam):
    f = random_normalized(np.random.default_rng(seed), 24, bound=2.0)
    assert in_class_U(f, r * q, lam, 1e-9, samples=512) == in_class_U(rescale(f, r), q, lam, 1e-9, samples=512)
