"""Truncated multivariate power series (total degree <= order)."""

from fractions import Fraction
from math import factorial
from typing import Mapping

from ..errors import NormalizationError, OrderError
from .rational import as_rational, format_rational

_ZERO = Fraction(0)


class MSeries:
    """Sparse map from exponent tuples to nonzero rationals.

    Terms of total degree above ``order`` and zero coefficients are dropped
    on construction, so two equal series always have equal term maps.
    """

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars: int, order: int, terms: Mapping = ()):
        if nvars < 1:
            raise ValueError("nvars must be >= 1")
        if order < 0:
            raise OrderError("order must be >= 0")
        clean = {}
        for exps, c in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = as_rational(c)
            if c and sum(exps) <= order:
                clean[exps] = clean.get(exps, _ZERO) + c
        self.nvars = nvars
        self.order = order
        self.terms = dict(sorted((k, v) for k, v in clean.items() if v))

    @classmethod
    def constant(cls, c, nvars: int, order: int) -> "MSeries":
        return cls(nvars, order, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int, order: int) -> "MSeries":
        """The coordinate z_i (0-based)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, order, {tuple(e): 1})

    @classmethod
    def from_univariate(cls, coeffs, var: int, nvars: int, order: int) -> "MSeries":
        """Embed a univariate coefficient list as a series in z_var."""
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
        return cls(nvars, order, terms)

    def _like(self, other):
        if not isinstance(other, MSeries):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return min(self.order, other.order)

    def __add__(self, other):
        p = self._like(other)
        if p is NotImplemented:
            return p
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, _ZERO) + v
        return MSeries(self.nvars, p, terms)

    def __neg__(self):
        return MSeries(self.nvars, self.order, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "MSeries":
        c = as_rational(c)
        return MSeries(self.nvars, self.order, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MSeries):
            return self.scale(other)
        p = self._like(other)
        out = {}
        for ka, va in self.terms.items():
            da = sum(ka)
            for kb, vb in other.terms.items():
                if da + sum(kb) <= p:
                    k = tuple(x + y for x, y in zip(ka, kb))
                    out[k] = out.get(k, _ZERO) + va * vb
        return MSeries(self.nvars, p, out)

    def __rmul__(self, c):
        return self.scale(c)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def partial(self, i: int) -> "MSeries":
        """d/dz_i; the order drops by one."""
        out = {}
        for k, v in self.terms.items():
            if k[i]:
                e = list(k)
                e[i] -= 1
                out[tuple(e)] = v * k[i]
        return MSeries(self.nvars, max(self.order - 1, 0), out)

    def truncate(self, order: int) -> "MSeries":
        if order > self.order:
            raise OrderError(f"cannot extend order {self.order} to {order}")
        return MSeries(self.nvars, order, self.terms)

    def reciprocal(self) -> "MSeries":
        """1/s via the finite geometric sum in the nilpotent part."""
        c = self.constant_term()
        if c == 0:
            raise NormalizationError("reciprocal needs a nonzero constant term")
        h = (self - MSeries.constant(c, self.nvars, self.order)).scale(-1 / c)
        result = MSeries.constant(1, self.nvars, self.order)
        power = result
        for _ in range(self.order):
            power = power * h
            if not power.terms:
                break
            result = result + power
        return result.scale(1 / c)

    def exp(self) -> "MSeries":
        """exp(s) for s with zero constant term."""
        if self.constant_term() != 0:
            raise NormalizationError("exp needs a zero constant term to stay rational")
        result = MSeries.constant(1, self.nvars, self.order)
        power = result
        for k in range(1, self.order + 1):
            power = power * self
            if not power.terms:
                break
            result = result + power.scale(Fraction(1, factorial(k)))
        return result

    def total_degree(self) -> int:
        return max((sum(k) for k in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MSeries):
            return NotImplemented
        return (self.nvars, self.order, self.terms) == (other.nvars, other.order, other.terms)

    def __repr__(self):
        body = ", ".join(f"{k}: {format_rational(v)}" for k, v in self.terms.items())
        return f"MSeries(nvars={self.nvars}, order={self.order}, {{{body}}})"
