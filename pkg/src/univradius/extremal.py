"""Sharpness witnesses: pairs ``(f, g)`` meeting the coefficient bounds with
equality, for which ``F = z^3/(f g)`` has ``F'(r) = 0`` at the radius."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidRadius, UnknownCase
from .powser import SHARPNESS_ORDER, NormalizedSeries, Series, derivative, evaluate
from .radii import CASES, RadiusResult, dedicated_radius
from .uclass import F_series

__all__ = [
    "ExtremalPair",
    "WITNESSES",
    "build_extremal",
    "F_of_pair",
    "series_Fprime",
    "refined_radius",
    "sharpness_check",
    "closed_form_discrepancy",
    "local_univalence_floor",
]


def _geometric(order):
    """z/(1-z): a_n = 1."""
    return NormalizedSeries(np.concatenate([[0.0], np.ones(order)]))


def _koebe(order):
    """z/(1-z)^2: a_n = n."""
    return NormalizedSeries(np.arange(order + 1, dtype=float))


def _log_witness(order):
    """-z - 2 log(1-z): a_n = 2/n."""
    n = np.arange(2, order + 1)
    return NormalizedSeries.from_tail(2.0 / n)


def _half_witness(order):
    """z(2-z)/(2(1-z)^2): a_n = (n+1)/2."""
    n = np.arange(2, order + 1)
    return NormalizedSeries.from_tail((n + 1) / 2.0)


WITNESSES: dict[str, Callable[[int], NormalizedSeries]] = {
    "ONE": _geometric,
    "N": _koebe,
    "TWO_OVER_N": _log_witness,
    "HALF_N_PLUS_1": _half_witness,
}


def _L(x):
    """``-log(1-x)/x`` with its limit 1 at x = 0."""
    if abs(x) < 1e-4:
        return sum(x ** (n - 1) / n for n in range(1, 10))
    return -math.log1p(-x) / x


def _h(x):
    # -1 - (2/x) log(1-x)
    return -1.0 + 2.0 * _L(x)


# Derivatives of F as printed with each witness, rewritten with log(1-x)/x = -L(x).
CLOSED_FORM_FPRIME: dict[str, Callable[[float], float]] = {
    "T1a": lambda x: 1 - 4 * x + 3 * x * x,
    "T1b": lambda x: (1 - 4 * x) * (1 - x) ** 2,
    "T1c": lambda x: (1 - 5 * x) * (1 - x) ** 3,
    "T2a": lambda x: (2 * x - 3 - 2 * (3 * x - 2) * _L(x)) / _h(x) ** 2,
    "T2b": lambda x: -(1 - x) * (3 * (1 - x) + 4 * (2 * x - 1) * _L(x)) / _h(x) ** 2,
    "T2c": lambda x: -((5 - x) / (1 - x) - 6 * _L(x)) / _h(x) ** 3,
    "T3a": lambda x: 2 * (1 - x) ** 2 * (3 * x * x - 8 * x + 2) / (2 - x) ** 2,
    "T3b": lambda x: 4 * (1 - x) ** 3 * (2 * x * x - 5 * x + 1) / (2 - x) ** 2,
    "T3c": lambda x: (1 - x) * ((x - 3) * (1 - x) + (4 - 9 * x + 3 * x * x) * _L(x))
    / ((1 - x / 2) * _h(x)) ** 2,
}


@dataclass(frozen=True)
class ExtremalPair:
    case_id: str
    f: NormalizedSeries
    g: NormalizedSeries
    closed_form_Fprime: Callable[[float], float] | None
    radius_ref: str

    @property
    def order(self) -> int:
        return min(self.f.order, self.g.order)


def build_extremal(case_id: str, order: int = SHARPNESS_ORDER) -> ExtremalPair:
    try:
        spec = CASES[case_id]
    except KeyError:
        raise UnknownCase(case_id) from None
    f = WITNESSES[spec.cls_f.name](order)
    g = WITNESSES[spec.cls_g.name](order)
    return ExtremalPair(case_id, f, g, CLOSED_FORM_FPRIME.get(case_id), case_id)


def F_of_pair(pair: ExtremalPair) -> NormalizedSeries:
    return F_series(pair.f, pair.g)


def series_Fprime(pair: ExtremalPair) -> Series:
    return derivative(F_of_pair(pair))


def refined_radius(pair: ExtremalPair, tol: float = 1e-12) -> RadiusResult:
    """The case radius re-solved to ``tol`` (closed forms are returned as is)."""
    return dedicated_radius(pair.radius_ref, tol)


def sharpness_check(pair: ExtremalPair, tol: float = 1e-12, radius: float | None = None) -> float:
    """``|F'(r)|`` at the case radius via the series route.

    ``tol`` is the refinement tolerance for the radius; pass ``radius`` to
    evaluate somewhere else (e.g. at a rounded published value).
    """
    r = refined_radius(pair, tol).value if radius is None else radius
    return float(abs(evaluate(series_Fprime(pair), r)))


def closed_form_discrepancy(pair: ExtremalPair, points: int = 50, tol: float = 1e-12) -> float:
    """Max ``|series F'(x) - closed form F'(x)|`` over ``points`` reals in ``[0, r]``."""
    if pair.closed_form_Fprime is None:
        return float("nan")
    r = refined_radius(pair, tol).value
    xs = np.linspace(0.0, r, points)
    dF = series_Fprime(pair)
    series_vals = evaluate(dF, xs)
    closed = np.array([pair.closed_form_Fprime(float(x)) for x in xs])
    return float(np.max(np.abs(series_vals - closed)))


def local_univalence_floor(pair: ExtremalPair, r: float, grid: int = 64) -> float:
    """Minimum of ``|F'(z)|`` on a ``grid x grid`` polar grid over ``|z| <= r``.

    Radii run over ``linspace(0, r, grid)`` and angles over ``grid`` uniform
    points starting at 0.
    """
    if not 0 < r < 1:
        raise InvalidRadius(f"radius must lie in (0, 1), got {r}")
    rho = np.linspace(0.0, r, grid)
    theta = np.arange(grid) * (2 * math.pi / grid)
    z = (rho[:, None] * np.exp(1j * theta)[None, :]).ravel()
    return float(np.min(np.abs(evaluate(series_Fprime(pair), z))))
