"""Time-evolved canonical Appell systems and eigen-polynomial families."""

from dataclasses import dataclass
from fractions import Fraction

from .canonical import CanonicalPolynomialTable, CanonicalSystem, canonical_polynomials
from .errors import DegenerateSpectrumError, NormalizationError, OrderError
from .exactmath import (Matrix, Series, as_rational, series_exp, triangular_eigenvectors,
                        vec_sub)
from .operators import apply_series, gegenbauer_operator, make_context, ou_operator
from .report import Report


@dataclass(frozen=True)
class AppellEvolution:
    sys: CanonicalSystem
    h: Series
    t: Fraction
    evo: Matrix

    def table(self) -> CanonicalPolynomialTable:
        """Rows y_n(x, t) = exp(-t H(D)) y_n."""
        base = canonical_polynomials(self.sys)
        return CanonicalPolynomialTable(self.sys.p, tuple(self.evo @ r for r in base.rows))


def evolution_series(h: Series, t, order: int) -> Series:
    """exp(-t H(z)) through z^order, for H(0) = 0."""
    if h.order < order:
        raise OrderError(f"H of order {h.order} is too short for p = {order}")
    if h.coeffs[0] != 0:
        # exp(-t H(0)) is not rational in general
        raise NormalizationError("H(0) must be 0 for an exact rational evolution")
    return series_exp(h.truncate(order).scale(-as_rational(t)))


def evolve(sys: CanonicalSystem, h: Series, t) -> AppellEvolution:
    t = as_rational(t)
    evo = apply_series(sys.ctx, evolution_series(h, t, sys.p))
    return AppellEvolution(sys, h, t, evo)


def check_semigroup(sys: CanonicalSystem, h: Series, t1, t2) -> Report:
    a = evolve(sys, h, t1).evo @ evolve(sys, h, t2).evo
    b = evolve(sys, h, as_rational(t1) + as_rational(t2)).evo
    return Report("appell_semigroup", {"p": sys.p, "system": sys.name, "t1": as_rational(t1),
                                       "t2": as_rational(t2)}, a == b, None if a == b else a - b)


def _lagrange_derivative(ts, values, t):
    """d/dt at t of the interpolating polynomial through (ts[i], values[i])."""
    total = Fraction(0)
    n = len(ts)
    for i in range(n):
        # derivative of the i-th Lagrange basis polynomial
        denom = Fraction(1)
        for j in range(n):
            if j != i:
                denom *= ts[i] - ts[j]
        num = Fraction(0)
        for k in range(n):
            if k == i:
                continue
            prod = Fraction(1)
            for j in range(n):
                if j not in (i, k):
                    prod *= t - ts[j]
            num += prod
        total += values[i] * num / denom
    return total


def check_evolution_equation(sys: CanonicalSystem, h: Series, sample_ts=None) -> Report:
    """d/dt y_n(x, t) = -H(D) y_n(x, t).

    Entries of exp(-t H(D)) y_n are polynomials in t of degree <= p, so
    sampling at p + 1 rational times pins them down exactly.  The
    interpolated derivative is compared at three further times.
    """
    p = sys.p
    hmat = apply_series(sys.ctx, h.truncate(p))
    nodes = [Fraction(k, 2) for k in range(p + 1)]
    checks = sample_ts or [Fraction(1, 3), Fraction(-2, 5), Fraction(7, 4)]
    evolved = {t: evolve(sys, h, t).table() for t in nodes}
    defects = {}
    for t in checks:
        at_t = evolve(sys, h, t).table()
        for n in range(p + 1):
            lhs = tuple(_lagrange_derivative(nodes, [evolved[s][n][m] for s in nodes], t)
                        for m in range(p + 1))
            rhs = (-hmat) @ at_t[n]
            d = vec_sub(lhs, rhs)
            if any(d):
                defects[(str(t), n)] = d
    return Report("appell_evolution_equation", {"p": p, "system": sys.name}, not defects,
                  defects or None)


def hermite_family(p: int, t) -> CanonicalPolynomialTable:
    """Monic eigenvectors of XD - t D^2, row n for eigenvalue n."""
    ctx = make_context(p)
    pairs = triangular_eigenvectors(ou_operator(ctx, as_rational(t)))
    return CanonicalPolynomialTable(p, tuple(v for _, v in pairs))


def gegenbauer_family(p: int, alpha) -> CanonicalPolynomialTable:
    """Monic eigenvectors of (XD + alpha)^2 - D^2; row n has eigenvalue (n + alpha)^2.

    The classical C_n^alpha normalization is not applied.
    """
    alpha = as_rational(alpha)
    collisions = [(j, k) for j in range(p + 1) for k in range(j + 1, p + 1)
                  if (j + alpha) ** 2 == (k + alpha) ** 2]
    if collisions:
        pairs = ", ".join(f"({j},{k})" for j, k in collisions)
        raise DegenerateSpectrumError(
            f"alpha = {alpha} gives equal eigenvalues (n+alpha)^2 for n pairs {pairs}",
            collisions)
    pairs = triangular_eigenvectors(gegenbauer_operator(make_context(p), alpha))
    return CanonicalPolynomialTable(p, tuple(v for _, v in pairs))
