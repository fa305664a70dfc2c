"""Krawtchouk polynomials as a canonical Appell system.

V(z) = tanh z, W(z) = cosh^2 z and H(z) = log cosh z.  The time-zero
polynomials y_n = Y^n e_0 (Y = X cosh^2 D) are pushed to time N by
(sech D)^N, giving K_n(x, N).  For n > N the K_n vanish on the spectrum
{N, N-2, ..., -N} of the binomial walk ("ghosts").
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import DimensionError
from .exactmath import (Matrix, pad, poly_degree, poly_eval, sinh_series, vec_add, vec_scale,
                        vec_sub)
from .operators import (OperatorContext, apply_series, cosh_dhat, make_context,
                        sech_dhat_series)
from .report import Report, combine


@dataclass(frozen=True)
class KrawtchoukSystem:
    p: int
    N: int
    ctx: OperatorContext
    cosh_d: Matrix
    sech_d: Matrix
    sinh_d: Matrix
    yhat: Matrix
    sechN: Matrix
    rhat: Matrix

    @property
    def tanh_d(self) -> Matrix:
        return self.sinh_d @ self.sech_d


@dataclass(frozen=True)
class KrawtchoukTable:
    N: int
    rows: tuple  # rows[n]: coefficients of K_n(x, N), constant term first

    @property
    def p(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, n):
        return self.rows[n]

    def evaluate(self, n: int, x) -> Fraction:
        return poly_eval(self.rows[n], x)


@dataclass(frozen=True)
class SpectrumMeasure:
    N: int
    points: tuple
    weights: tuple


def spectrum_measure(N: int) -> SpectrumMeasure:
    """Symmetric binomial law on x_j = N - 2j with weight C(N, j) / 2^N."""
    return SpectrumMeasure(N, tuple(Fraction(N - 2 * j) for j in range(N + 1)),
                           tuple(Fraction(comb(N, j), 2 ** N) for j in range(N + 1)))


def _check_params(p, N):
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")
    if not isinstance(N, int) or N < 0:
        raise ValueError(f"N must be a non-negative integer, got {N!r}")


def make_krawtchouk(p: int, N: int) -> KrawtchoukSystem:
    _check_params(p, N)
    ctx = make_context(p)
    cosh_d = cosh_dhat(ctx)
    sech_d = cosh_d.inverse()
    sinh_d = apply_series(ctx, sinh_series(p))
    yhat = ctx.xhat @ cosh_d @ cosh_d
    sechN = sech_d ** N
    rhat = yhat - (sinh_d @ cosh_d).scale(N)
    return KrawtchoukSystem(p, N, ctx, cosh_d, sech_d, sinh_d, yhat, sechN, rhat)


def time_zero_polynomials(sys: KrawtchoukSystem) -> tuple:
    rows = [sys.ctx.vacuum]
    for _ in range(sys.p):
        rows.append(sys.yhat @ rows[-1])
    return tuple(rows)


def krawtchouk_table(sys: KrawtchoukSystem) -> KrawtchoukTable:
    return KrawtchoukTable(sys.N, tuple(sys.sechN @ y for y in time_zero_polynomials(sys)))


def krawtchouk(p: int, N: int = None) -> KrawtchoukTable:
    """K_0 .. K_p at time N (default N = p, the full basis)."""
    return krawtchouk_table(make_krawtchouk(p, p if N is None else N))


# -- checks -------------------------------------------------------------------

def check_system(sys: KrawtchoukSystem) -> Report:
    """sech/cosh inverse pair, sech via series, [tanh D, R] = 1 and R = S_N Y S_N^{-1} below degree p."""
    bad = []
    ident = sys.ctx.identity
    if sys.sech_d @ sys.cosh_d != ident:
        bad.append("sech D cosh D != 1")
    if sys.sech_d != sech_dhat_series(sys.ctx):
        bad.append("sech D by inversion != sech D by series")
    comm = sys.tanh_d @ sys.rhat - sys.rhat @ sys.tanh_d - ident
    if any(any(comm.column(k)) for k in range(sys.p)):
        bad.append("[tanh D, R] != 1 below degree p")
    inter = sys.sechN @ sys.yhat - sys.rhat @ sys.sechN
    if any(any(inter.column(k)) for k in range(sys.p)):
        bad.append("S_N Y != R S_N below degree p")
    # [(sech D)^N, X] = -N (sech D)^N tanh D
    lhs = sys.sechN @ sys.ctx.xhat - sys.ctx.xhat @ sys.sechN
    rhs = (sys.sechN @ sys.tanh_d).scale(-sys.N)
    if any(any((lhs - rhs).column(k)) for k in range(sys.p)):
        bad.append("[sech^N D, X] != -N sech^N D tanh D below degree p")
    return Report("krawtchouk_system", {"p": sys.p, "N": sys.N}, not bad, bad or None)


def verify_recurrence(table: KrawtchoukTable) -> Report:
    """x K_n = K_{n+1} + n (N - n + 1) K_{n-1} for 0 <= n <= p - 1, with K_{-1} = 0."""
    N, p = table.N, table.p
    xhat = make_context(p).xhat
    zero = vec_scale(0, table[0])
    defects = {}
    for n in range(0, p):
        prev = table[n - 1] if n >= 1 else zero
        rhs = vec_add(table[n + 1], vec_scale(n * (N - n + 1), prev))
        d = vec_sub(xhat @ table[n], rhs)
        if any(d):
            defects[n] = d
    monic = [n for n in range(p + 1) if table[n][n] != 1 or poly_degree(table[n]) != n]
    ok = not defects and not monic
    return Report("krawtchouk_recurrence", {"N": N, "p": p}, ok,
                  None if ok else {"recurrence": defects, "not_monic": monic})


def ghost_check(table: KrawtchoukTable, measure: SpectrumMeasure = None) -> Report:
    """K_n vanishes on the spectrum for N < n <= p; K_0..K_N are orthogonal with positive norms."""
    N, p = table.N, table.p
    if p < N + 1:
        raise DimensionError(f"ghost check needs p >= N + 1 = {N + 1} to see K_(N+1); got p = {p}")
    measure = measure or spectrum_measure(N)
    values = [[table.evaluate(n, x) for x in measure.points] for n in range(p + 1)]
    nonzero_ghosts = {n: values[n] for n in range(N + 1, p + 1) if any(values[n])}

    def inner(m, n):
        return sum((w * a * b for w, a, b in zip(measure.weights, values[m], values[n])),
                   Fraction(0))

    not_orth = [(m, n) for n in range(N + 1) for m in range(n) if inner(m, n) != 0]
    norms = {n: inner(n, n) for n in range(p + 1)}
    bad_norms = [n for n in range(N + 1) if norms[n] <= 0]
    ok = not nonzero_ghosts and not not_orth and not bad_norms
    return Report("krawtchouk_ghosts", {"N": N, "p": p}, ok,
                  None if ok else {"ghosts_nonzero": nonzero_ghosts, "not_orthogonal": not_orth,
                                   "nonpositive_norms": bad_norms},
                  {"norms": norms})


def su2_matrices(N: int) -> tuple:
    """(R_K, L_K, Lambda_K) on span{K_0..K_N}: R K_n = K_{n+1}, L K_n = n(N-n+1) K_{n-1}.

    R K_N = K_{N+1} is a ghost and is dropped from the (N+1)-dim space.
    """
    n = N + 1
    r = Matrix.from_entries(n, {(k + 1, k): 1 for k in range(N)})
    l = Matrix.from_entries(n, {(k - 1, k): k * (N - k + 1) for k in range(1, N + 1)})
    lam = l @ r - r @ l
    return r, l, lam


def su2_check(sys: KrawtchoukSystem, table: KrawtchoukTable = None) -> Report:
    N, p = sys.N, sys.p
    if p < N:
        raise DimensionError(f"su(2) check needs p >= N; got p = {p}, N = {N}")
    table = krawtchouk_table(sys) if table is None else table
    r, l, lam = su2_matrices(N)
    bad = []
    if r @ lam - lam @ r != r.scale(2):
        bad.append("[R, Lambda] != 2R")
    if lam @ l - l @ lam != l.scale(2):
        bad.append("[Lambda, L] != 2L")
    if lam != Matrix.diag([N - 2 * k for k in range(N + 1)]):
        bad.append("Lambda != diag(N - 2n)")
    # change of basis: columns of kmat are K_0..K_N in the x-basis
    kmat = Matrix([[table[k][i] for k in range(N + 1)] for i in range(N + 1)])
    r_x = kmat @ r @ kmat.inverse()
    for j in range(N):
        col = sys.rhat.column(j)
        if col[: N + 1] != r_x.column(j) or any(col[N + 1:]):
            bad.append(f"K R_K K^-1 != R on column {j}")
    return Report("krawtchouk_su2", {"N": N, "p": p}, not bad, bad or None, {"Lambda": lam})


def generating_function_check(table: KrawtchoukTable) -> Report:
    """(1+v)^(N-j) (1-v)^j = sum_n v^n/n! K_n(N - 2j, N) for every spectrum point."""
    N, p = table.N, table.p
    defects = {}
    for j in range(N + 1):
        x = N - 2 * j
        for n in range(p + 1):
            coeff = sum(comb(N - j, n - k) * comb(j, k) * (-1) ** k for k in range(n + 1))
            expected = Fraction(coeff * factorial(n))
            got = table.evaluate(n, x)
            if got != expected or (n > N and got != 0):
                defects[(j, n)] = (got, expected)
    return Report("krawtchouk_generating_function", {"N": N, "p": p}, not defects,
                  defects or None)


# -- expansions -----------------------------------------------------------------

def expansion_operators(p: int, N: int) -> list:
    """The matrices (cosh D)^N (tanh D)^n / n! for n = 0..N."""
    sys = make_krawtchouk(p, N)
    if p < N:
        raise DimensionError(f"expansion needs p >= N; got p = {p}, N = {N}")
    base = sys.cosh_d ** N
    tanh = sys.tanh_d
    out = []
    for n in range(N + 1):
        out.append(base.scale(Fraction(1, factorial(n))))
        base = base @ tanh
    return out


def expansion_matrix(p: int, N: int) -> tuple:
    """(Y, Y^-1): row n of Y maps a coefficient vector to its n-th Krawtchouk coefficient.

    Rows start from the top row of (cosh D)^N and follow y_n = y_(n-1) tanh D / n.
    Both are (N+1) x (N+1); the columns of Y^-1 are K_0 .. K_N.
    """
    _check_params(p, N)
    if p < N:
        raise DimensionError(f"expansion needs p >= N; got p = {p}, N = {N}")
    sys = make_krawtchouk(p, N)
    row = (sys.cosh_d ** N).row(0)
    tanh_t = sys.tanh_d.T
    rows = [row]
    for n in range(1, N + 1):
        row = vec_scale(Fraction(1, n), tanh_t @ row)
        rows.append(row)
    y = Matrix([r[: N + 1] for r in rows])
    return y, y.inverse()


def expand(p: int, N: int, f) -> tuple:
    """Krawtchouk coefficients of a polynomial of degree <= N.

    coefficient n = first entry of (cosh D)^(N-n) (sinh D)^n f / n!.
    """
    _check_params(p, N)
    if p < N:
        raise DimensionError(f"expansion needs p >= N; got p = {p}, N = {N}")
    f = tuple(Fraction(c) for c in f)
    deg = poly_degree(f)
    if deg > N:
        raise DimensionError(
            f"degree {deg} exceeds N = {N}: the spectrum has only {N + 1} points, "
            f"so only polynomials of degree <= {N} are represented")
    f = pad(f, p + 1)
    sys = make_krawtchouk(p, N)
    out = []
    for n in range(N + 1):
        m = (sys.cosh_d ** (N - n)) @ (sys.sinh_d ** n)
        out.append((m @ f)[0] / factorial(n))
    return tuple(out)


def reconstruct(coeffs, table: KrawtchoukTable) -> tuple:
    """sum_n coeffs[n] K_n as a coefficient vector."""
    out = vec_scale(0, table[0])
    for n, c in enumerate(coeffs):
        if c:
            out = vec_add(out, vec_scale(c, table[n]))
    return out


def check_expansion_routes(p: int, N: int, f) -> Report:
    """Operator formula, Y-matrix route and reconstruction all agree on f."""
    f = tuple(Fraction(c) for c in f)
    direct = expand(p, N, f)
    y, _ = expansion_matrix(p, N)
    via_y = y @ pad(f, N + 1)
    table = krawtchouk(p, N)
    back = reconstruct(direct, table)
    ok = direct == via_y and back == pad(f, p + 1)
    return Report("krawtchouk_expansion_routes", {"N": N, "p": p}, ok,
                  None if ok else {"operator": direct, "matrix": via_y, "reconstructed": back})


def verify_krawtchouk(N: int, p: int = None) -> Report:
    """Full suite at one (N, p): system identities, recurrence, ghosts, su(2), generating function."""
    p = N + 1 if p is None else p
    sys = make_krawtchouk(p, N)
    table = krawtchouk_table(sys)
    reports = [check_system(sys), verify_recurrence(table), generating_function_check(table)]
    if p >= N + 1:
        reports.append(ghost_check(table))
    reports.append(su2_check(sys, table))
    return combine("krawtchouk", {"N": N, "p": p}, reports)
