"""Truncated univariate power series over the rationals.

A ``Series`` of order p stores the coefficients of z^0 .. z^p.  Binary
operations on series of different orders truncate to the smaller order.
"""

from fractions import Fraction
from math import factorial
from typing import Sequence

from ..errors import NormalizationError, OrderError
from .rational import as_rational, format_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = tuple(as_rational(c) for c in coeffs)
        if not coeffs:
            raise OrderError("a series needs at least the constant coefficient")
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls((c,) + (0,) * order)

    @classmethod
    def identity(cls, order: int) -> "Series":
        """The series z."""
        if order < 1:
            raise OrderError("z needs order >= 1")
        return cls((0, 1) + (0,) * (order - 1))

    @classmethod
    def from_polynomial(cls, coeffs: Sequence, order: int) -> "Series":
        """Zero-pad (or truncate) a finite coefficient list to ``order``."""
        c = list(coeffs)[: order + 1]
        return cls(c + [0] * (order + 1 - len(c)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise OrderError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Series(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "Series":
        c = as_rational(c)
        return Series(tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k: int) -> "Series":
        result = Series.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self) -> "Series":
        """Formal derivative; the order drops by one (order 0 gives the zero constant)."""
        if self.order == 0:
            return Series((0,))
        return Series(tuple(k * self.coeffs[k] for k in range(1, self.order + 1)))

    def integral(self, constant=0) -> "Series":
        return Series((as_rational(constant),)
                      + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Series([" + ", ".join(format_rational(c) for c in self.coeffs) + "])"


def series_mul(a: Series, b: Series) -> Series:
    p = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [_ZERO] * (p + 1)
    for i in range(p + 1):
        x = ac[i]
        if x:
            for j in range(p + 1 - i):
                y = bc[j]
                if y:
                    out[i + j] += x * y
    return Series(out)


def series_reciprocal(s: Series) -> Series:
    """1/s truncated at the order of s."""
    c0 = s.coeffs[0]
    if c0 == 0:
        raise NormalizationError("series reciprocal needs a nonzero constant term")
    inv0 = 1 / c0
    r = [inv0]
    for n in range(1, s.order + 1):
        acc = sum((s.coeffs[k] * r[n - k] for k in range(1, n + 1)), _ZERO)
        r.append(-inv0 * acc)
    return Series(r)


def series_compose(f: Series, g: Series) -> Series:
    """f(g(z)) truncated at min(f.order, g.order); requires g(0) = 0."""
    if g.coeffs[0] != 0:
        raise NormalizationError("inner series of a composition must have zero constant term")
    p = min(f.order, g.order)
    g = g.truncate(p)
    result = Series.constant(f.coeffs[p], p)
    for k in range(p - 1, -1, -1):
        result = result * g
        result = Series((result.coeffs[0] + f.coeffs[k],) + result.coeffs[1:])
    return result


def _check_reversible(v: Series):
    if v.order < 1:
        raise OrderError("reversion needs order >= 1")
    if v.coeffs[0] != 0:
        raise NormalizationError("reversion requires V(0) = 0")
    if v.coeffs[1] == 0:
        raise NormalizationError("reversion requires V'(0) != 0")


def series_reversion(v: Series) -> Series:
    """Compositional inverse u with u(v(z)) = z, by Newton iteration.

    Each step solves v(u) = z to twice the previous precision:
    u <- u - (v(u) - z) / v'(u).
    """
    _check_reversible(v)
    p = v.order
    u = Series.from_polynomial([0, 1 / v.coeffs[1]], p)
    dv = v.derivative()
    prec = 1  # u is correct through z^prec
    while prec < p:
        prec = min(2 * prec, p)
        ut = u.truncate(prec)
        resid = series_compose(v.truncate(prec), ut) - Series.identity(prec)
        slope = series_compose(Series.from_polynomial(dv.coeffs, prec), ut)
        ut = ut - resid * series_reciprocal(slope)
        u = Series.from_polynomial(ut.coeffs, p)
    return u


def series_reversion_lagrange(v: Series) -> Series:
    """Compositional inverse by Lagrange inversion, coefficient by coefficient.

    [z^n] u = (1/n) [z^(n-1)] (z / v(z))^n.  Kept as an independent check on
    ``series_reversion``.
    """
    _check_reversible(v)
    p = v.order
    # z / v(z) = 1 / (v1 + v2 z + ...), known through order p - 1
    q = series_reciprocal(Series(v.coeffs[1:]))
    out = [_ZERO]
    power = Series.constant(1, p - 1)
    for n in range(1, p + 1):
        power = power * q
        out.append(power.coeffs[n - 1] / n)
    return Series(out)


# -- preset series -----------------------------------------------------------

def exp_series(order: int, scale=1) -> Series:
    """exp(scale * z)."""
    scale = as_rational(scale)
    return Series([scale ** k / factorial(k) for k in range(order + 1)])


def cosh_series(order: int) -> Series:
    return Series([Fraction(1, factorial(k)) if k % 2 == 0 else 0 for k in range(order + 1)])


def sinh_series(order: int) -> Series:
    return Series([Fraction(1, factorial(k)) if k % 2 == 1 else 0 for k in range(order + 1)])


def sech_series(order: int) -> Series:
    return series_reciprocal(cosh_series(order))


def tanh_series(order: int) -> Series:
    return sinh_series(order) * sech_series(order)


def log1p_series(order: int) -> Series:
    """log(1 + z)."""
    return Series([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)])


def atanh_series(order: int) -> Series:
    """(1/2) log((1 + z) / (1 - z))."""
    return Series([Fraction(1, k) if k % 2 == 1 else 0 for k in range(order + 1)])


def log_cosh_series(order: int) -> Series:
    return series_compose(log1p_series(order), cosh_series(order) - Series.constant(1, order))


def binomial_series(exponent, order: int) -> Series:
    """(1 + z)^exponent for a rational exponent."""
    a = as_rational(exponent)
    out = [_ONE]
    for k in range(1, order + 1):
        out.append(out[-1] * (a - k + 1) / k)
    return Series(out)


def series_exp(s: Series) -> Series:
    """exp(s(z)) for s(0) = 0."""
    return series_compose(exp_series(s.order), s)


__all__ = [
    "Series", "series_mul", "series_reciprocal", "series_compose", "series_reversion",
    "series_reversion_lagrange", "exp_series", "cosh_series", "sinh_series", "sech_series",
    "tanh_series", "log1p_series", "atanh_series", "log_cosh_series", "binomial_series",
    "series_exp",
]
