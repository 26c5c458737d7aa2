"""The functional ``U_f = f'(z) (z/f(z))^2 - 1`` and circle scans of its modulus."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRadius
from .powser import NormalizedSeries, Series, derivative, evaluate, mul, reciprocal

__all__ = [
    "UScanResult",
    "Verdict",
    "u_functional",
    "u_of_product",
    "F_series",
    "max_modulus_on_circle",
    "in_class_U",
]

DEFAULT_SAMPLES = 4096
DEFAULT_TOL = 1e-9
TWO_PI = 2.0 * math.pi


class Verdict(str, enum.Enum):
    MEMBER = "member"
    NONMEMBER = "nonmember"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class UScanResult:
    radius: float
    max_modulus: float
    argmax_angle: float
    samples: int
    tail_bound: float | None = None

    @property
    def upper(self) -> float:
        """Scan maximum plus the tail bound, when one was supplied."""
        return self.max_modulus + (self.tail_bound or 0.0)


def u_functional(f: NormalizedSeries) -> Series:
    """Power series of ``U_f`` to degree ``order(f) - 1``; its constant term is 0."""
    z_over_f = reciprocal(f.divide_by_z())
    c = mul(derivative(f), mul(z_over_f, z_over_f)).coeffs.copy()
    c[0] -= 1.0
    return Series(c)


def _residual_part(p: Series) -> Series:
    # p - z p' - 1 has coefficients (1 - k) p_k, zero at k = 0 when p_0 = 1
    k = np.arange(p.order + 1)
    c = (1 - k) * p.coeffs
    c[0] = p.coeffs[0] - 1.0
    return Series(c)


def u_of_product(f: NormalizedSeries, g: NormalizedSeries) -> Series:
    """``U_F`` for ``F = z^3/(f g)`` through the decomposition

    ``(g/z)[f/z - z(f/z)' - 1] + (f/z)[g/z - z(g/z)' - 1] - (f/z - 1)(g/z - 1)``.

    No reciprocal is formed, so the result is a polynomial identity in the
    coefficients of ``f`` and ``g``.
    """
    p, q = f.divide_by_z(), g.divide_by_z()
    order = min(p.order, q.order)
    out = mul(q, _residual_part(p), order) + mul(p, _residual_part(q), order) - mul(p - 1, q - 1, order)
    return out


def F_series(f: NormalizedSeries, g: NormalizedSeries) -> NormalizedSeries:
    """``z^3/(f g) = z / ((f/z)(g/z))``, to the smaller order of ``f``, ``g``."""
    inv = reciprocal(mul(f.divide_by_z(), g.divide_by_z()))
    c = inv.times_z().coeffs.copy()
    c[1] = 1.0  # exact: 1/(1*1)
    return NormalizedSeries(c)


def _check_radius(r):
    if not 0 < r < 1:
        raise InvalidRadius(f"radius must lie in (0, 1), got {r}")


def _ternary_max(fn, lo, hi, iters=80):
    for _ in range(iters):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if fn(m1) < fn(m2):
            lo = m1
        else:
            hi = m2
    x = 0.5 * (lo + hi)
    return x, fn(x)


def max_modulus_on_circle(
    s: Series, r: float, samples: int = DEFAULT_SAMPLES, tail_bound: float | None = None
) -> UScanResult:
    """Estimate ``max_{|z| = r} |s(z)|`` for the truncated polynomial ``s``.

    A uniform grid of ``samples`` angles (rounded up to even, so that both
    0 and pi are on it) is followed by one ternary-search refinement in the
    two cells around the best grid angle. Grid ties go to the smallest
    angle, and the refinement replaces the grid maximum only when it beats
    it by more than rounding noise. ``tail_bound`` is carried through
    untouched for the caller's verdict.
    """
    _check_radius(r)
    if samples < 16:
        raise ValueError("need at least 16 samples")
    samples += samples % 2
    theta = np.arange(samples) * (TWO_PI / samples)
    mods = np.abs(evaluate(s, r * np.exp(1j * theta)))
    best = int(np.argmax(mods))
    best_theta, best_mod = float(theta[best]), float(mods[best])

    h = TWO_PI / samples
    t, m = _ternary_max(lambda a: abs(evaluate(s, r * complex(math.cos(a), math.sin(a)))), best_theta - h, best_theta + h)
    if m > best_mod * (1.0 + 8.0 * np.finfo(float).eps):
        best_theta, best_mod = t % TWO_PI, m
    return UScanResult(r, best_mod, best_theta, samples, tail_bound)


def in_class_U(
    f: NormalizedSeries,
    r: float,
    lam: float = 1.0,
    tol: float = DEFAULT_TOL,
    tail_bound: float | None = None,
    samples: int = DEFAULT_SAMPLES,
) -> Verdict:
    """Decide whether ``|U_f| < lam`` on ``|z| < r``, i.e. ``r^{-1} f(rz)`` is in ``U(lam)``.

    By the maximum principle the circle ``|z| = r`` suffices. The verdict
    is ``member`` when the scan maximum plus ``tail_bound`` stays below
    ``lam - tol``, ``nonmember`` when the scan maximum alone exceeds
    ``lam + tol``, and ``inconclusive`` in between.
    """
    _check_radius(r)
    if not 0 < lam <= 1:
        raise ValueError("lambda must lie in (0, 1]")
    scan = max_modulus_on_circle(u_functional(f), r, samples, tail_bound)
    if scan.upper < lam - tol:
        return Verdict.MEMBER
    if scan.max_modulus > lam + tol:
        return Verdict.NONMEMBER
    return Verdict.INCONCLUSIVE
