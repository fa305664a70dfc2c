"""Canonical systems built from analytic data V.

Given V with V(0) = 0 and V'(0) != 0, W = 1/V' and U = V^{-1}
(compositional).  The raising matrix Y = X W(D) and lowering matrix V(D)
satisfy [V(D), Y] = 1 below the truncation boundary, and y_n = Y^n e_0 are
the coefficient vectors of the canonical polynomials, generated by
exp(x U(v)) = sum_n v^n / n! y_n(x).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import NormalizationError, OrderError
from .exactmath import (Matrix, MSeries, Series, exp_series, series_reciprocal,
                        series_reversion, tanh_series, vec_add, vec_scale, vec_sub)
from .operators import OperatorContext, apply_series, make_context
from .report import Report


@dataclass(frozen=True)
class CanonicalSystem:
    p: int
    v: Series
    w: Series
    u: Series
    ctx: OperatorContext
    vhat: Matrix
    yhat: Matrix
    name: str = ""


@dataclass(frozen=True)
class CanonicalPolynomialTable:
    """Row n holds the coefficients of a degree-n polynomial, constant term first."""

    p: int
    rows: tuple

    def __getitem__(self, n):
        return self.rows[n]

    def __len__(self):
        return len(self.rows)


def make_canonical(p: int, v: Series, name: str = "") -> CanonicalSystem:
    """Build the canonical system of order p.

    ``v`` must carry terms through z^(p+1): W = 1/V' is needed through z^p
    because the last column of Y uses w_p.
    """
    if v.coeffs[0] != 0:
        raise NormalizationError("V(0) must be 0")
    if v.order < 1 or v.coeffs[1] == 0:
        raise NormalizationError("V'(0) must be nonzero")
    if v.order < p + 1:
        raise OrderError(f"V must be given through order p + 1 = {p + 1}, got order {v.order}")
    v = v.truncate(p + 1)
    ctx = make_context(p)
    w = series_reciprocal(v.derivative())
    u = series_reversion(v)
    vhat = apply_series(ctx, v)
    yhat = ctx.xhat @ apply_series(ctx, w)
    return CanonicalSystem(p, v, w, u, ctx, vhat, yhat, name)


def canonical_polynomials(sys: CanonicalSystem) -> CanonicalPolynomialTable:
    rows = [sys.ctx.vacuum]
    for _ in range(sys.p):
        rows.append(sys.yhat @ rows[-1])
    return CanonicalPolynomialTable(sys.p, tuple(rows))


def recurrence_coefficients(sys: CanonicalSystem) -> Series:
    """c(v) = 1/U'(v) through v^p, so that X = Y c(V).

    Acting on y_n this reads x y_n = sum_k c_k n!/(n-k)! y_{n-k+1}.
    """
    return series_reciprocal(sys.u.derivative()).truncate(sys.p)


def recurrence_rhs(c: Series, table: CanonicalPolynomialTable, n: int) -> tuple:
    """sum_k c_k n!/(n-k)! y_{n-k+1}; needs n + 1 <= p."""
    out = vec_scale(0, table[0])
    for k in range(0, n + 1):
        if c.coeffs[k]:
            out = vec_add(out, vec_scale(c.coeffs[k] * (factorial(n) // factorial(n - k)),
                                         table[n - k + 1]))
    return out


def check_recurrence(sys: CanonicalSystem, table: CanonicalPolynomialTable = None) -> Report:
    table = canonical_polynomials(sys) if table is None else table
    c = recurrence_coefficients(sys)
    defects = {}
    for n in range(0, sys.p):
        diff = vec_sub(sys.ctx.xhat @ table[n], recurrence_rhs(c, table, n))
        if any(diff):
            defects[n] = diff
    return Report("canonical_recurrence", {"p": sys.p, "system": sys.name}, not defects,
                  defects or None)


def verify_hw_on_subspace(sys: CanonicalSystem) -> Report:
    """([V, Y] - 1) e_k = 0 for k < p; the column at k = p is reported as the truncation defect."""
    ident = sys.ctx.identity
    comm = sys.vhat @ sys.yhat - sys.yhat @ sys.vhat - ident
    bad = [k for k in range(sys.p) if any(comm.column(k))]
    boundary = comm.column(sys.p)
    return Report("canonical_hw_subspace", {"p": sys.p, "system": sys.name}, not bad,
                  {k: comm.column(k) for k in bad} or None,
                  {"boundary_defect": boundary})


def check_degree_law(sys: CanonicalSystem, table: CanonicalPolynomialTable = None) -> Report:
    """y_n has degree n with leading coefficient w_0^n."""
    table = canonical_polynomials(sys) if table is None else table
    w0 = sys.w.coeffs[0]
    bad = []
    for n, row in enumerate(table.rows):
        if row[n] != w0 ** n or any(row[n + 1:]):
            bad.append(n)
    return Report("canonical_degree_law", {"p": sys.p, "system": sys.name}, not bad, bad or None)


def generating_function_series(sys: CanonicalSystem,
                               table: CanonicalPolynomialTable = None) -> MSeries:
    """sum_n v^n/n! y_n(x) as a series in (v, x), total degree <= p."""
    table = canonical_polynomials(sys) if table is None else table
    terms = {}
    for n, row in enumerate(table.rows):
        for m, c in enumerate(row):
            terms[(n, m)] = c / factorial(n)
    return MSeries(2, sys.p, terms)


def exp_xu_series(u: Series, order: int) -> MSeries:
    """exp(x U(v)) expanded directly in (v, x)."""
    uv = MSeries.from_univariate(u.coeffs, 0, 2, order)
    x = MSeries.variable(1, 2, order)
    return (x * uv).exp()


def check_generating_function(sys: CanonicalSystem) -> Report:
    lhs = generating_function_series(sys)
    rhs = exp_xu_series(sys.u, sys.p)
    ok = lhs == rhs
    return Report("canonical_generating_function", {"p": sys.p, "system": sys.name}, ok,
                  None if ok else (lhs - rhs).terms)


# -- presets ------------------------------------------------------------------

def identity_v(order: int) -> Series:
    return Series.identity(order)


def exp_v(order: int) -> Series:
    """e^z - 1, with U(v) = log(1 + v) and falling-factorial polynomials."""
    s = exp_series(order)
    return s - Series.constant(1, order)


def gauss_drift_v(order: int, alpha) -> Series:
    """alpha z - z^2 / 2."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise NormalizationError("gauss_drift needs alpha != 0")
    return Series.from_polynomial([0, alpha, Fraction(-1, 2)], order)


def lambertw_v(order: int) -> Series:
    """z e^{-z}."""
    e = exp_series(order, -1)
    return Series((0,) + e.coeffs[:order])


def tanh_v(order: int) -> Series:
    return tanh_series(order)


PRESETS = {
    "identity": identity_v,
    "exp": exp_v,
    "gauss_drift": gauss_drift_v,
    "lambertw": lambertw_v,
    "tanh": tanh_v,
}


def preset(name: str, p: int, **params) -> CanonicalSystem:
    """Canonical system for a named preset at order p."""
    try:
        build = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    if name == "gauss_drift":
        v = build(p + 1, params.get("alpha", 1))
    else:
        v = build(p + 1)
    return make_canonical(p, v, name)
