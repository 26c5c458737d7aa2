"""Truncated complex power series.

A :class:`Series` holds coefficients ``c_0 ... c_N`` of a function analytic
near the origin, truncated at degree ``N`` (its ``order``). Coefficients
beyond ``N`` are unknown, not zero, so binary operations return a result
of the smaller order unless told otherwise.

    >>> geo = Series(np.ones(8))          # 1/(1 - z) to order 7
    >>> (Series([1, -1]) * geo).coeffs.real
    array([1., 0.])

The order of a product is the minimum of the operand orders; pass
``order=`` to :func:`mul` to ask for more (missing coefficients are then
treated as zero, which is only correct for genuine polynomials).

:class:`NormalizedSeries` is the subset with ``c_0 = 0`` and ``c_1 = 1``,
the usual normalization of functions in the class A.
"""

from __future__ import annotations

import numpy as np

from .errors import ZeroConstantTerm

__all__ = [
    "Series",
    "NormalizedSeries",
    "add",
    "mul",
    "reciprocal",
    "derivative",
    "evaluate",
    "rescale",
    "log_one_minus",
    "geometric",
    "ZERO_TERM_THRESHOLD",
]

ZERO_TERM_THRESHOLD = 1e-14

DEFAULT_ORDER = 64
SHARPNESS_ORDER = 128


class Series:
    """Immutable truncated power series with complex coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=np.complex128).reshape(-1)
        if c.size < 2:
            # order >= 1; a bare constant is padded with a zero linear term
            c = np.concatenate([c, np.zeros(2 - c.size, dtype=np.complex128)])
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.flags.writeable = False
        self._c = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __len__(self):
        return self._c.size

    def __getitem__(self, n):
        return self._c[n]

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order}, coeffs={self._c[:6]}{'...' if self.order > 5 else ''})"

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    __hash__ = None

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return Series(-self._c)

    def __sub__(self, other):
        return add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if np.isscalar(other):
            return Series(self._c * other)
        return mul(self, other)

    __rmul__ = __mul__

    def allclose(self, other: Series, atol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.all(np.abs(self._c[:n] - other._c[:n]) <= atol))

    def divide_by_z(self) -> Series:
        """``s(z)/z``; requires a zero constant term."""
        if self._c[0] != 0:
            raise ValueError("constant term must vanish to divide by z")
        return Series(self._c[1:])

    def times_z(self) -> Series:
        return Series(np.concatenate([[0.0], self._c]))


class NormalizedSeries(Series):
    """A series with ``c_0 = 0`` and ``c_1 = 1`` exactly."""

    __slots__ = ()

    def __init__(self, coeffs):
        super().__init__(coeffs)
        if self._c[0] != 0 or self._c[1] != 1:
            raise ValueError(
                f"normalized series needs c0 = 0 and c1 = 1, got {self._c[0]}, {self._c[1]}"
            )

    @classmethod
    def from_tail(cls, tail) -> NormalizedSeries:
        """Build ``z + sum_{n>=2} a_n z^n`` from ``[a_2, a_3, ...]``."""
        return cls(np.concatenate([[0.0, 1.0], np.asarray(tail, dtype=np.complex128)]))


def _coerce(x, order):
    if isinstance(x, Series):
        return x
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = x
    return Series(c)


def add(s: Series, t: Series) -> Series:
    """Coefficient-wise sum; the shorter operand is zero-padded."""
    n = max(s.order, t.order) + 1
    c = np.zeros(n, dtype=np.complex128)
    c[: s.order + 1] += s.coeffs
    c[: t.order + 1] += t.coeffs
    return Series(c)


def mul(s: Series, t: Series, order: int | None = None) -> Series:
    """Cauchy product truncated at ``min(order(s), order(t))`` or ``order``."""
    if order is None:
        order = min(s.order, t.order)
    c = np.convolve(s.coeffs, t.coeffs)[: order + 1]
    if c.size < order + 1:
        c = np.concatenate([c, np.zeros(order + 1 - c.size, dtype=np.complex128)])
    return Series(c)


def reciprocal(s: Series, threshold: float = ZERO_TERM_THRESHOLD) -> Series:
    """Series ``t`` with ``s * t = 1`` to the order of ``s``.

    Uses the convolution recursion ``t_n = -(1/c_0) sum_{k=1..n} c_k t_{n-k}``,
    which is exact up to rounding and needs no iteration tolerance.
    """
    c = s.coeffs
    if abs(c[0]) < threshold:
        raise ZeroConstantTerm(f"|c0| = {abs(c[0]):.3e} below {threshold:g}")
    n = s.order + 1
    t = np.zeros(n, dtype=np.complex128)
    inv0 = 1.0 / c[0]
    t[0] = inv0
    for k in range(1, n):
        t[k] = -inv0 * np.dot(c[1 : k + 1], t[k - 1 :: -1])
    return Series(t)


def derivative(s: Series) -> Series:
    c = s.coeffs
    return Series(c[1:] * np.arange(1, c.size))


def evaluate(s: Series, z):
    """Horner evaluation of the truncated polynomial at ``z`` (scalar or array).

    Intended for ``|z| < 1`` when the series represents a disk function;
    this is not checked.
    """
    z = np.asarray(z, dtype=np.complex128)
    acc = np.zeros_like(z)
    for c in s.coeffs[::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def rescale(s: Series, r: float) -> Series:
    """Dilate by ``r``.

    For a plain series this is ``s(rz)`` (coefficients ``c_n r^n``). For a
    :class:`NormalizedSeries` it is ``r^{-1} s(rz)`` (coefficients
    ``c_n r^{n-1}``) so that the normalization survives.
    """
    if r <= 0:
        raise ValueError("rescale factor must be positive")
    n = np.arange(s.order + 1)
    if isinstance(s, NormalizedSeries):
        c = s.coeffs.copy()
        c[1:] = s.coeffs[1:] * float(r) ** (n[1:] - 1)
        return NormalizedSeries(c)
    return Series(s.coeffs * float(r) ** n)


def log_one_minus(order: int) -> Series:
    """``log(1/(1 - z)) = sum_{n>=1} z^n / n`` to degree ``order``.

    Note the sign: coefficients are ``+1/n``, i.e. this is ``-log(1 - z)``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    c = np.zeros(order + 1)
    n = np.arange(1, order + 1)
    c[1:] = 1.0 / n
    return Series(c)


def geometric(order: int) -> Series:
    """``1/(1 - z)`` to degree ``order``."""
    return Series(np.ones(order + 1))
