"""Coefficient classes ``|a_n| <= a + b/n + c n`` and the disk bounds they imply.

For ``f(z) = z + sum a_n z^n`` with ``|a_n| <= A_n`` and ``|z| <= r``:

* ``dist_bound``  bounds ``|f(z)/z - 1|``
* ``mod_bound``   bounds ``|f(z)/z|``
* ``resid_bound`` bounds ``|f(z)/z - z (f(z)/z)' - 1|``

and ``uF_bound`` combines two classes into the triangle-inequality bound on
``|U_F|`` for ``F = z^3 / (f g)``. All bounds are exact closed forms; the
series engine is checked against them, never the other way round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRadius

__all__ = [
    "CoeffClass",
    "ONE",
    "N",
    "TWO_OVER_N",
    "HALF_N_PLUS_1",
    "PRESETS",
    "k1_alpha",
    "resolve_class",
    "dist_bound",
    "mod_bound",
    "resid_bound",
    "uF_bound",
    "series_tail",
    "product_tail",
    "majorant_u_series",
    "is_strictly_increasing",
]

_SMALL_R = 0.05


@dataclass(frozen=True)
class CoeffClass:
    """The hypothesis ``|a_n| <= a + b/n + c*n`` for all ``n >= 2``."""

    a: float
    b: float
    c: float
    name: str | None = None

    def __post_init__(self):
        if self.c < 0:
            raise ValueError(f"need c >= 0, got c = {self.c}")
        if self.A(2) <= 0:
            raise ValueError(f"need A_2 > 0, got {self.A(2)}")
        if self.c == 0 and (self.a < 0 or (self.a == 0 and self.b <= 0)):
            raise ValueError("A_n must stay positive as n grows")
        if self.c > 0 and self.b > 0:
            # convex in n with its minimum near sqrt(b/c)
            top = int(math.sqrt(self.b / self.c)) + 2
            if any(self.A(n) <= 0 for n in range(2, top + 1)):
                raise ValueError("A_n must be positive for all n >= 2")

    def A(self, n):
        """Coefficient bound ``A_n``; accepts scalars or arrays."""
        return self.a + self.b / n + self.c * n

    @property
    def label(self) -> str:
        return self.name or f"({self.a:g},{self.b:g},{self.c:g})"

    def majorant(self, order: int) -> np.ndarray:
        """Coefficients of ``z + sum_{n=2..order} A_n z^n``."""
        c = np.zeros(order + 1)
        c[1] = 1.0
        n = np.arange(2, order + 1)
        c[2:] = self.A(n)
        return c


ONE = CoeffClass(1.0, 0.0, 0.0, "ONE")
N = CoeffClass(0.0, 0.0, 1.0, "N")
TWO_OVER_N = CoeffClass(0.0, 2.0, 0.0, "TWO_OVER_N")
HALF_N_PLUS_1 = CoeffClass(0.5, 0.0, 0.5, "HALF_N_PLUS_1")

PRESETS = {cls.name: cls for cls in (ONE, N, TWO_OVER_N, HALF_N_PLUS_1)}


def k1_alpha(alpha: float) -> CoeffClass:
    """``|a_n| <= 2(1 - alpha)/n``, the bound for ``Re f' > alpha``."""
    if not 0 <= alpha < 1:
        raise ValueError("alpha must lie in [0, 1)")
    return CoeffClass(0.0, 2.0 * (1.0 - alpha), 0.0, f"K1_ALPHA({alpha:g})")


def resolve_class(spec: str | CoeffClass) -> CoeffClass:
    """Turn a preset name, ``K1_ALPHA(x)`` or an ``a,b,c`` triple into a class."""
    if isinstance(spec, CoeffClass):
        return spec
    key = spec.strip()
    if key.upper() in PRESETS:
        return PRESETS[key.upper()]
    if key.upper().startswith("K1_ALPHA(") and key.endswith(")"):
        return k1_alpha(float(key[len("K1_ALPHA(") : -1]))
    parts = key.split(",")
    if len(parts) != 3:
        raise ValueError(f"unknown coefficient class {spec!r}")
    a, b, c = (float(p) for p in parts)
    return CoeffClass(a, b, c)


def _check_r(r):
    if not 0 <= r < 1:
        raise InvalidRadius(f"radius must lie in [0, 1), got {r}")


def _log_ratio_minus_one(r: float) -> float:
    """``-log(1 - r)/r - 1 = sum_{n>=2} r^{n-1}/n``."""
    if r < _SMALL_R:
        # the subtraction below cancels for small r; 16 Taylor terms leave < r^16/18
        return sum(r ** (n - 1) / n for n in range(2, 18))
    return -math.log1p(-r) / r - 1.0


def dist_bound(cls: CoeffClass, r: float) -> float:
    """``-(a+b+c) + a/(1-r) - b log(1-r)/r + c/(1-r)^2``, grouped to avoid cancellation."""
    _check_r(r)
    q = 1.0 - r
    return cls.a * r / q + cls.b * _log_ratio_minus_one(r) + cls.c * r * (2.0 - r) / q**2


def mod_bound(cls: CoeffClass, r: float) -> float:
    return 1.0 + dist_bound(cls, r)


def resid_bound(cls: CoeffClass, r: float) -> float:
    """Bound on ``|f/z - z (f/z)' - 1|``.

    Equal to ``a+b+c - (2a-b)/(1-r) + (a-2c)/(1-r)^2 + c(1+r)/(1-r)^3
    + 2b log(1-r)/r``; evaluated in the grouped form
    ``(b-2a) S_0 + (a-2c) S_1 + c S_2 - 2b S_L`` with each ``S`` a
    tail sum that vanishes at ``r = 0``.
    """
    _check_r(r)
    q = 1.0 - r
    s0 = r / q
    s1 = r * (2.0 - r) / q**2
    s2 = r * (4.0 - 3.0 * r + r * r) / q**3
    sl = _log_ratio_minus_one(r)
    return (cls.b - 2.0 * cls.a) * s0 + (cls.a - 2.0 * cls.c) * s1 + cls.c * s2 - 2.0 * cls.b * sl


def uF_bound(clsF: CoeffClass, clsG: CoeffClass, r: float) -> float:
    """Triangle-inequality bound on ``|U_F(z)|``, ``|z| <= r``, for ``F = z^3/(f g)``."""
    dF, dG = dist_bound(clsF, r), dist_bound(clsG, r)
    return (1.0 + dG) * resid_bound(clsF, r) + (1.0 + dF) * resid_bound(clsG, r) + dF * dG


def series_tail(cls: CoeffClass, r: float, order: int) -> float:
    """``sum_{n > order} A_n r^{n-1}``: what truncating ``f(z)/z`` at degree ``order - 1`` drops.

    Summed directly until the terms are negligible.
    """
    _check_r(r)
    if r == 0:
        return 0.0
    total = 0.0
    n = order + 1
    term = cls.A(n) * r ** (n - 1)
    while term > 1e-300 and (term > 1e-18 * max(total, 1e-300)):
        total += term
        n += 1
        term = cls.A(n) * r ** (n - 1)
    return total


def majorant_u_series(clsF: CoeffClass, clsG: CoeffClass, degree: int) -> np.ndarray:
    """Coefficients ``m_0..m_degree`` of the nonnegative series dominating ``U_F``.

    With ``D(z) = sum A_n z^{n-1}`` and ``R(z) = sum (n-2) A_n z^{n-1}`` this is
    ``(1 + D_G) R_F + (1 + D_F) R_G + D_F D_G``; evaluating it at ``r`` gives
    :func:`uF_bound`.
    """
    order = degree + 1

    def parts(cls):
        d = cls.majorant(order)[1:]  # f/z majorant, degree `degree`
        d = d.copy()
        d[0] = 0.0
        k = np.arange(d.size)
        return d, (k - 1) * d  # (n - 2) A_n with n = k + 1

    dF, rF = parts(clsF)
    dG, rG = parts(clsG)
    mG = dG.copy()
    mG[0] = 1.0
    mF = dF.copy()
    mF[0] = 1.0
    conv = lambda x, y: np.convolve(x, y)[: degree + 1]  # noqa: E731
    return conv(mG, rF) + conv(mF, rG) + conv(dF, dG)


def product_tail(clsF: CoeffClass, clsG: CoeffClass, r: float, order: int) -> float:
    """Bound on ``sum_{k >= order} |[z^k] U_F| r^k``.

    ``U_F`` built from ``f``, ``g`` truncated at degree ``order`` is exact
    through degree ``order - 1``; the dropped part is dominated by the
    majorant's tail, computed as closed form minus partial sum. A margin
    of a few ulps covers rounding in the subtraction.
    """
    _check_r(r)
    if r == 0:
        return 0.0
    m = majorant_u_series(clsF, clsG, order - 1)
    partial = float(np.polynomial.polynomial.polyval(r, m))
    total = uF_bound(clsF, clsG, r)
    return float(max(total - partial, 0.0) + 8.0 * np.finfo(float).eps * total)


def is_strictly_increasing(fn, lo: float, hi: float, points: int = 200) -> bool:
    """Empirical check that ``fn`` increases strictly along a uniform grid on ``(lo, hi)``."""
    grid = np.linspace(lo, hi, points + 2)[1:-1]
    vals = np.array([fn(float(x)) for x in grid])
    return bool(np.all(np.diff(vals) > 0))
