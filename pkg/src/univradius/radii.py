"""Radii of univalence: closed forms, transcendental radius equations, and a
generic solver for ``uF_bound(clsF, clsG, r) = 1``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import bounds
from .bounds import HALF_N_PLUS_1, N, ONE, TWO_OVER_N, CoeffClass
from .errors import InvalidRadius, NoSignChange, UnknownCase

__all__ = [
    "RadiusResult",
    "CASES",
    "CaseSpec",
    "closed_form_radius",
    "phi1",
    "phi2",
    "phi3",
    "psi",
    "bracketed_root",
    "root_in_unit_interval",
    "dedicated_radius",
    "radius_from_bound",
]

CLOSED_FORM = "closed_form"
ROOT_FOUND = "root_found"
NO_CROSSING = "no_crossing"

DEFAULT_TOL = 1e-12
SCAN_STEP = 1e-3
UPPER = 1.0 - 1e-6


@dataclass(frozen=True)
class RadiusResult:
    value: float
    method: str
    residual: float
    case_id: str
    notes: tuple[str, ...] = field(default=())


def _check_open(r):
    if not 0 < r < 1:
        raise InvalidRadius(f"radius must lie in (0, 1), got {r}")


def _log1m_over_r(r):
    return math.log1p(-r) / r


def phi1(r: float) -> float:
    """``2r - 3 + 2(3r - 2) log(1 - r)/r``."""
    _check_open(r)
    return 2 * r - 3 + 2 * (3 * r - 2) * _log1m_over_r(r)


def phi2(r: float) -> float:
    """``3(1 - r) - 4(2r - 1) log(1 - r)/r``."""
    _check_open(r)
    return 3 * (1 - r) - 4 * (2 * r - 1) * _log1m_over_r(r)


def phi3(r: float) -> float:
    """``(5 - r)/(1 - r) + 6 log(1 - r)/r``."""
    _check_open(r)
    return (5 - r) / (1 - r) + 6 * _log1m_over_r(r)


def psi(r: float) -> float:
    """``(r - 3)(1 - r) - (4 - 9r + 3r^2) log(1 - r)/r``."""
    _check_open(r)
    return (r - 3) * (1 - r) - (4 - 9 * r + 3 * r * r) * _log1m_over_r(r)


@dataclass(frozen=True)
class CaseSpec:
    case_id: str
    cls_f: CoeffClass
    cls_g: CoeffClass
    closed_form: float | None = None
    equation: object = None


CASES: dict[str, CaseSpec] = {
    c.case_id: c
    for c in (
        CaseSpec("T1a", ONE, ONE, closed_form=1 / 3),
        CaseSpec("T1b", N, ONE, closed_form=1 / 4),
        CaseSpec("T1c", N, N, closed_form=1 / 5),
        CaseSpec("T2a", ONE, TWO_OVER_N, equation=phi1),
        CaseSpec("T2b", N, TWO_OVER_N, equation=phi2),
        CaseSpec("T2c", TWO_OVER_N, TWO_OVER_N, equation=phi3),
        CaseSpec("T3a", HALF_N_PLUS_1, ONE, closed_form=(4 - math.sqrt(10)) / 3),
        CaseSpec("T3b", HALF_N_PLUS_1, N, closed_form=(5 - math.sqrt(17)) / 4),
        CaseSpec("T3c", HALF_N_PLUS_1, TWO_OVER_N, equation=psi),
    )
}


def _case(case_id: str) -> CaseSpec:
    try:
        return CASES[case_id]
    except KeyError:
        raise UnknownCase(case_id) from None


def closed_form_radius(case_id: str) -> RadiusResult:
    spec = _case(case_id)
    if spec.closed_form is None:
        raise UnknownCase(f"{case_id} has no closed-form radius")
    return RadiusResult(spec.closed_form, CLOSED_FORM, 0.0, case_id)


def bracketed_root(fn, lo: float, hi: float, tol: float = DEFAULT_TOL, max_iter: int = 200):
    """Root of ``fn`` in ``[lo, hi]`` by false position guarded with bisection.

    Each step tries the secant (false-position) point; whenever that fails
    to halve the bracket, a bisection step follows. The bracket is always
    kept, so the result is deterministic and converges at least linearly.
    Returns ``(x, fn(x))`` for the endpoint of the final bracket with the
    smaller ``|fn|``.
    """
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return lo, flo
    if fhi == 0:
        return hi, fhi
    if math.copysign(1, flo) == math.copysign(1, fhi):
        raise NoSignChange(f"fn({lo}) = {flo:.3e} and fn({hi}) = {fhi:.3e} share a sign")

    def shrink(x, fx):
        nonlocal lo, hi, flo, fhi
        if math.copysign(1, fx) == math.copysign(1, flo):
            lo, flo = x, fx
        else:
            hi, fhi = x, fx

    for _ in range(max_iter):
        width = hi - lo
        if width < tol:
            break
        x = hi - fhi * (hi - lo) / (fhi - flo)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        fx = fn(x)
        if fx == 0:
            return x, fx
        shrink(x, fx)
        if hi - lo > 0.5 * width:
            mid = 0.5 * (lo + hi)
            fm = fn(mid)
            if fm == 0:
                return mid, fm
            shrink(mid, fm)
    return (lo, flo) if abs(flo) <= abs(fhi) else (hi, fhi)


def root_in_unit_interval(fn, lo: float, hi: float, tol: float = DEFAULT_TOL, case_id: str = "") -> RadiusResult:
    if not 0 < lo < hi < 1:
        raise InvalidRadius(f"bracket must satisfy 0 < lo < hi < 1, got ({lo}, {hi})")
    x, fx = bracketed_root(fn, lo, hi, tol)
    return RadiusResult(x, ROOT_FOUND, abs(fx), case_id)


def dedicated_radius(case_id: str, tol: float = DEFAULT_TOL) -> RadiusResult:
    """Radius from the case's own closed form or radius equation."""
    spec = _case(case_id)
    if spec.closed_form is not None:
        return closed_form_radius(case_id)
    return root_in_unit_interval(spec.equation, 0.01, 0.9, tol, case_id)


def _preset_case(clsF: CoeffClass, clsG: CoeffClass) -> str | None:
    key = lambda c: (c.a, c.b, c.c)  # noqa: E731
    pair = sorted([key(clsF), key(clsG)])
    for spec in CASES.values():
        if pair == sorted([key(spec.cls_f), key(spec.cls_g)]):
            return spec.case_id
    return None


def radius_from_bound(clsF: CoeffClass, clsG: CoeffClass, tol: float = DEFAULT_TOL) -> RadiusResult:
    """Smallest ``r`` with ``uF_bound(clsF, clsG, r) = 1``.

    A coarse scan (step 1e-3) locates the first up-crossing of 1, which is
    then refined by :func:`bracketed_root`. The scan continues to the end of
    the interval; a later return below 1 is reported in ``notes``. If the
    bound never reaches 1 the value ``1 - 1e-6`` is returned with method
    ``"no_crossing"``.
    """
    case_id = _preset_case(clsF, clsG)
    label = case_id or f"{clsF.label}x{clsG.label}"
    notes = [] if case_id else ["bound-derived, sharpness unknown"]

    def excess(r):
        return bounds.uF_bound(clsF, clsG, r) - 1.0

    n_steps = int(UPPER / SCAN_STEP)
    grid = [SCAN_STEP * k for k in range(1, n_steps + 1)] + [UPPER]
    crossing = None
    prev_r, prev_v = 0.0, -1.0
    for r in grid:
        v = excess(r)
        if crossing is None:
            if v >= 0 > prev_v:
                crossing = (prev_r, r)
        elif v < 0:
            notes.append(f"second crossing near r = {r:.3f}")
            break
        prev_r, prev_v = r, v

    if crossing is None:
        return RadiusResult(UPPER, NO_CROSSING, abs(excess(UPPER)), label, tuple(notes))
    lo, hi = crossing
    if lo == 0.0:
        lo = SCAN_STEP * 1e-3
    x, fx = bracketed_root(excess, lo, hi, tol)
    return RadiusResult(x, ROOT_FOUND, abs(fx), label, tuple(notes))
