"""Normalized Bessel functions ``f_nu(z) = 2^nu Gamma(nu+1) z^{1-nu/2} J_nu(sqrt z)``
and the radii they inherit for ``F_{nu,mu} = z^3 / (f_nu f_mu)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import bounds
from .errors import InvalidOrderParam
from .powser import SHARPNESS_ORDER, NormalizedSeries
from .radii import RadiusResult, bracketed_root, closed_form_radius
from .uclass import DEFAULT_SAMPLES, DEFAULT_TOL, F_series, Verdict, in_class_U

__all__ = [
    "BesselParams",
    "LE_1_THRESHOLD",
    "LE_N_THRESHOLD",
    "bessel_series",
    "hypothesis_lhs",
    "coeff_hypothesis",
    "j_nu_at_one",
    "nu_star_equation",
    "nu_star",
    "bessel_params",
    "applicable_cases",
    "f_nu_mu_radius",
    "verify_bessel_membership",
]

LE_1_THRESHOLD = -0.75
LE_N_THRESHOLD = -0.875


def _check_nu(nu):
    if not nu > -1:
        raise InvalidOrderParam(f"need nu > -1, got {nu}")


def bessel_series(nu: float, order: int = SHARPNESS_ORDER) -> NormalizedSeries:
    """Taylor series of ``f_nu`` by ``a_1 = 1``, ``a_{n+1} = -a_n / (4 n (nu + n))``."""
    _check_nu(nu)
    c = np.zeros(order + 1)
    c[1] = 1.0
    for n in range(1, order):
        c[n + 1] = -c[n] / (4.0 * n * (nu + n))
    return NormalizedSeries(c)


def hypothesis_lhs(nu: float, kind: str, depth: int = 64) -> list[float]:
    """Left-hand sides ``4^{n-1} (n-1)! (nu+1)...(nu+n-1)`` (``le_1``) or with
    ``n!`` in place of ``(n-1)!`` (``le_n``), for ``n = 2..depth``.

    ``le_1`` is ``|a_n| <= 1`` rearranged, ``le_n`` is ``|a_n| <= n``.
    """
    _check_nu(nu)
    if kind not in ("le_1", "le_n"):
        raise ValueError(f"kind must be 'le_1' or 'le_n', got {kind!r}")
    out = []
    lhs = 1.0  # n = 1: empty product
    for n in range(2, depth + 1):
        lhs *= 4.0 * (n - 1) * (nu + n - 1)
        out.append(lhs * n if kind == "le_n" else lhs)
    return out


def coeff_hypothesis(nu: float, kind: str, depth: int = 64) -> bool:
    """True iff the coefficient bound of ``kind`` holds for ``2 <= n <= depth``.

    The sequence is increasing in ``n`` for ``nu > -1``, so depth 64 is
    plenty; the increase is asserted on the computed values.
    """
    if depth < 2:
        raise ValueError("depth must be >= 2")
    seq = hypothesis_lhs(nu, kind, depth)
    finite = [v for v in seq if math.isfinite(v)]
    assert all(b > a for a, b in zip(finite, finite[1:])), "LHS not increasing in n"
    return all(v >= 1.0 for v in seq)


def j_nu_at_one(nu: float) -> float:
    """``J_nu(1) = sum_k (-1)^k / (k! Gamma(k+nu+1) 4^k) / 2^nu``.

    Terms follow ``t_{k+1} = -t_k / (4 (k+1)(k+nu+1))``; summation stops once
    ``|t_k| < 1e-18``.
    """
    _check_nu(nu)
    term = 0.5**nu / math.gamma(nu + 1.0)
    total = 0.0
    k = 0
    while True:
        total += term
        if abs(term) < 1e-18 and k > 0:
            break
        term = -term / (4.0 * (k + 1) * (k + nu + 1))
        k += 1
        if k > 200:
            break
    return total


def nu_star_equation(nu: float) -> float:
    """``(2 nu - 5) J_{nu+1}(1) + 5 J_nu(1)``."""
    return (2.0 * nu - 5.0) * j_nu_at_one(nu + 1.0) + 5.0 * j_nu_at_one(nu)


@lru_cache(maxsize=8)
def nu_star(tol: float = 1e-12) -> float:
    """Root of :func:`nu_star_equation` in ``(-0.5, 0)``: ``f_nu`` is in ``C(-1/2)`` iff ``nu >= nu_star``."""
    x, _ = bracketed_root(nu_star_equation, -0.5, 0.0, tol)
    return x


@dataclass(frozen=True)
class BesselParams:
    nu: float
    satisfies_abs_le_1: bool
    satisfies_abs_le_n: bool
    at_least_nu_star: bool


def bessel_params(nu: float) -> BesselParams:
    return BesselParams(
        nu,
        coeff_hypothesis(nu, "le_1"),
        coeff_hypothesis(nu, "le_n"),
        nu >= nu_star(),
    )


# (label, radius source, hypothesis on the first order, hypothesis on the second)
_LATTICE = (
    ("Cor4a", "T1a", "le_1", "le_1"),
    ("Cor4b", "T1b", "le_n", "le_1"),
    ("Cor4c", "T1c", "le_n", "le_n"),
    ("Cor5a", "T3a", "star", "le_1"),
    ("Cor5b", "T3b", "star", "le_n"),
)


def _holds(p: BesselParams, hyp: str) -> bool:
    return {"le_1": p.satisfies_abs_le_1, "le_n": p.satisfies_abs_le_n, "star": p.at_least_nu_star}[hyp]


def applicable_cases(nu: float, mu: float) -> list[tuple[str, float]]:
    """All lattice cases whose hypotheses hold, as ``(label, radius)``.

    ``F_{nu,mu} = F_{mu,nu}``, so each case is tried with both role
    assignments.
    """
    p, q = bessel_params(nu), bessel_params(mu)
    out = []
    for label, case, h1, h2 in _LATTICE:
        if (_holds(p, h1) and _holds(q, h2)) or (_holds(q, h1) and _holds(p, h2)):
            out.append((label, closed_form_radius(case).value))
    return out


def f_nu_mu_radius(nu: float, mu: float) -> RadiusResult | None:
    """Largest radius guaranteed for ``F_{nu,mu}`` by the applicable lattice
    cases, or ``None`` when no case applies."""
    cases = applicable_cases(nu, mu)
    if not cases:
        return None
    label, value = max(cases, key=lambda c: c[1])
    return RadiusResult(value, "closed_form", 0.0, label, tuple(c[0] for c in cases))


def _tail_class(p: BesselParams):
    if p.satisfies_abs_le_1:
        return bounds.ONE
    if p.satisfies_abs_le_n:
        return bounds.N
    return None


def verify_bessel_membership(
    nu: float,
    mu: float,
    r: float,
    order: int = SHARPNESS_ORDER,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> tuple[Verdict, float | None]:
    """Scan ``|U_F|`` for ``F = F_{nu,mu}`` on ``|z| = r``.

    The truncation tail is bounded with the coefficient class each order
    satisfies (``|a_n| <= 1`` or ``|a_n| <= n``); if either order satisfies
    neither, no tail bound is added. Returns ``(verdict, tail_bound)``.
    """
    f, g = bessel_series(nu, order), bessel_series(mu, order)
    cf, cg = _tail_class(bessel_params(nu)), _tail_class(bessel_params(mu))
    tail = None
    if cf is not None and cg is not None:
        tail = bounds.product_tail(cf, cg, r, order)
    verdict = in_class_U(F_series(f, g), r, 1.0, tol, tail, samples)
    return verdict, tail
