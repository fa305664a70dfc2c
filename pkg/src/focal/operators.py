"""Truncated calculus matrices.

On polynomials of degree <= p in the basis e_0 = 1, ..., e_p = x^p,
differentiation D and (cut-off) multiplication by x become the nilpotent
matrices ``dhat`` and ``xhat``.  They satisfy D X D - X D D = D instead of
the Heisenberg relation, and generate all of sl(p+1).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import OrderError
from .exactmath import (EchelonBasis, Matrix, Series, basis_vector, commutator, cosh_series,
                        sech_series, series_mul)
from .report import Report

E = Matrix.unit  # E(i, j, n): 1-based unit matrix


@dataclass(frozen=True)
class OperatorContext:
    p: int
    dhat: Matrix
    xhat: Matrix
    gram: Matrix

    @property
    def dim(self) -> int:
        return self.p + 1

    @property
    def identity(self) -> Matrix:
        return Matrix.identity(self.dim)

    def e(self, k: int) -> tuple:
        """Basis vector e_k (0-based, e_0 is the vacuum)."""
        return basis_vector(k, self.dim)

    @property
    def vacuum(self) -> tuple:
        return self.e(0)


@lru_cache(maxsize=64)
def make_context(p: int) -> OperatorContext:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"truncation order must be a positive integer, got {p!r}")
    n = p + 1
    dhat = Matrix.from_entries(n, {(k - 1, k): k for k in range(1, p + 1)})
    xhat = Matrix.from_entries(n, {(k, k - 1): 1 for k in range(1, p + 1)})
    gram = Matrix.diag([factorial(k) for k in range(n)])
    return OperatorContext(p, dhat, xhat, gram)


def apply_series(ctx: OperatorContext, f: Series) -> Matrix:
    """f(D) = sum_k f_k D^k, exact since D^(p+1) = 0."""
    if f.order < ctx.p:
        raise OrderError(f"series of order {f.order} is too short for p = {ctx.p}")
    result = Matrix.zeros(ctx.dim)
    ident = ctx.identity
    for k in range(ctx.p, -1, -1):
        result = result @ ctx.dhat + ident.scale(f.coeffs[k])
    return result


def number_operator(ctx: OperatorContext) -> Matrix:
    return ctx.xhat @ ctx.dhat


def ou_operator(ctx: OperatorContext, t) -> Matrix:
    """Ornstein-Uhlenbeck operator XD - t D^2."""
    return ctx.xhat @ ctx.dhat - (ctx.dhat @ ctx.dhat).scale(t)


def gegenbauer_operator(ctx: OperatorContext, alpha) -> Matrix:
    """(XD + alpha)^2 - D^2."""
    a = ctx.xhat @ ctx.dhat + ctx.identity.scale(alpha)
    return a @ a - ctx.dhat @ ctx.dhat


def translation_operator(ctx: OperatorContext, t) -> Matrix:
    """e^{tD}, acting as f(x) -> f(x + t)."""
    from .exactmath import exp_series
    return apply_series(ctx, exp_series(ctx.p, t))


def cosh_dhat(ctx: OperatorContext) -> Matrix:
    return apply_series(ctx, cosh_series(ctx.p))


def sech_dhat(ctx: OperatorContext) -> Matrix:
    """sech D as the inverse of cosh D."""
    return cosh_dhat(ctx).inverse()


def sech_dhat_series(ctx: OperatorContext) -> Matrix:
    """sech D from the reciprocal Taylor series; must agree with ``sech_dhat``."""
    return apply_series(ctx, sech_series(ctx.p))


def rising_factorial(k: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= k + i
    return out


def dhat_power_closed_form(p: int, j: int) -> Matrix:
    """D^j = sum_k (k)_j E_{k,k+j}, with (k)_j the rising factorial."""
    n = p + 1
    if j == 0:
        return Matrix.identity(n)
    return Matrix.from_entries(
        n, {(k - 1, k + j - 1): rising_factorial(k, j) for k in range(1, n - j + 1)})


def yhat_closed_form(p: int, w: Series) -> Matrix:
    """X W(D) = sum_{k,j} w_j (k)_j E_{k+1,k+j}."""
    if w.order < p:
        raise OrderError(f"W of order {w.order} is too short for p = {p}")
    n = p + 1
    entries = {}
    for k in range(1, p + 1):
        for j in range(0, n - k + 1):
            if w.coeffs[j]:
                entries[(k, k + j - 1)] = w.coeffs[j] * rising_factorial(k, j)
    return Matrix.from_entries(n, entries)


# -- orthofermions -----------------------------------------------------------

@dataclass(frozen=True)
class OrthofermionSet:
    p: int
    c: tuple  # c[i - 1] is c_i = E_{1,i+1}

    @property
    def dim(self) -> int:
        return self.p + 1

    def star(self, i: int) -> Matrix:
        return self.c[i - 1].T

    @property
    def projection(self) -> Matrix:
        """Pi = 1 - sum_k c_k^* c_k."""
        s = Matrix.zeros(self.dim)
        for ck in self.c:
            s = s + ck.T @ ck
        return Matrix.identity(self.dim) - s


def orthofermion_set(p: int) -> OrthofermionSet:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")
    return OrthofermionSet(p, tuple(E(1, i + 1, p + 1) for i in range(1, p + 1)))


def check_orthofermions(ofs: OrthofermionSet) -> Report:
    """All defining relations plus Pi^2 = Pi, Pi = E_11, Pi c_k = c_k and c_i c_j^* c_k = d_ij c_k."""
    n, p = ofs.dim, ofs.p
    ident, zero = Matrix.identity(n), Matrix.zeros(n)
    pi = ofs.projection
    number_sum = ident - pi
    bad = []
    for i in range(1, p + 1):
        ci = ofs.c[i - 1]
        if pi @ ci != ci:
            bad.append(f"Pi c_{i} != c_{i}")
        for j in range(1, p + 1):
            cj = ofs.c[j - 1]
            if ci @ cj != zero:
                bad.append(f"c_{i} c_{j} != 0")
            lhs = ci @ cj.T + (number_sum if i == j else zero)
            if lhs != (ident if i == j else zero):
                bad.append(f"anticommutation relation fails at ({i},{j})")
            if ci @ cj.T != (pi if i == j else zero):
                bad.append(f"c_{i} c_{j}^* != delta Pi")
            for k in range(1, p + 1):
                ck = ofs.c[k - 1]
                if ci @ cj.T @ ck != (ck if i == j else zero):
                    bad.append(f"c_{i} c_{j}^* c_{k} != delta_ij c_{k}")
    if pi @ pi != pi:
        bad.append("Pi^2 != Pi")
    if pi != E(1, 1, n):
        bad.append("Pi != E_11")
    return Report("orthofermion", {"p": p}, not bad, bad or None)


def taa_generators(ofs: OrthofermionSet) -> tuple:
    """a = c_1 + sum_{k>=2} k c_{k-1}^* c_k and a^dagger = c_1^* + sum_{k>=2} c_k^* c_{k-1}."""
    p = ofs.p
    a = ofs.c[0]
    adag = ofs.star(1)
    for k in range(2, p + 1):
        a = a + (ofs.star(k - 1) @ ofs.c[k - 1]).scale(k)
        adag = adag + ofs.star(k) @ ofs.c[k - 2]
    return a, adag


def check_taa_generators(ofs: OrthofermionSet) -> Report:
    a, adag = taa_generators(ofs)
    n, p = ofs.dim, ofs.p
    bad = []
    expected = Matrix.identity(n) - (ofs.star(p) @ ofs.c[p - 1]).scale(p + 1)
    defect = None
    if a @ adag - adag @ a != expected:
        defect = a @ adag - adag @ a - expected
        bad.append("a a^dagger - a^dagger a != 1 - (p+1) c_p^* c_p")
    if a @ adag @ a - adag @ a @ a != a:
        bad.append("a a^dagger a - a^dagger a a != a")
    nu = adag @ a
    if commutator(a, nu) != a:
        bad.append("[a, a^dagger a] != a")
    return Report("taa_generators", {"p": p}, not bad, defect, {"failures": bad} if bad else {})


# -- identity checks ----------------------------------------------------------

def h_matrix(p: int) -> Matrix:
    """[D, X] = sum_{k<=p} E_kk - p E_{p+1,p+1}."""
    return Matrix.diag([1] * p + [-p])


def check_taa(ctx: OperatorContext) -> Report:
    """TAA relation, the [D, X] formula, nilpotency and adjointness under <e_n, e_m> = n! d_nm."""
    d, x, g = ctx.dhat, ctx.xhat, ctx.gram
    bad = []
    taa = d @ x @ d - x @ d @ d
    if taa != d:
        bad.append("DXD - XDD != D")
    h = commutator(d, x)
    if h != h_matrix(ctx.p):
        bad.append("[D, X] != diag(1, ..., 1, -p)")
    zero = Matrix.zeros(ctx.dim)
    if d ** (ctx.p + 1) != zero or x ** (ctx.p + 1) != zero:
        bad.append("D or X not nilpotent of index p+1")
    if x.T @ g != g @ d:
        bad.append("X^T G != G D")
    return Report("taa", {"p": ctx.p}, not bad, None if not bad else bad,
                  {"commutator": h})


def lie_closure_dimension(ctx: OperatorContext, return_basis: bool = False):
    """Dimension of the Lie algebra generated by X and D.

    Breadth-first left-normed bracketing ([g, b] for generator g and newly
    found element b) spans the generated algebra.  Each new element is kept
    only if it raises the exact rank.
    """
    gens = (ctx.xhat, ctx.dhat)
    basis = EchelonBasis()
    elements = []
    frontier = []
    for g in gens:
        if basis.add(g.flatten()):
            elements.append(g)
            frontier.append(g)
    cap = ctx.dim ** 2
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > cap:
            raise RuntimeError("Lie closure failed to stabilise within the iteration cap")
        nxt = []
        for b in frontier:
            for g in gens:
                c = commutator(g, b)
                if basis.add(c.flatten()):
                    elements.append(c)
                    nxt.append(c)
        frontier = nxt
    if return_basis:
        return len(basis), elements
    return len(basis)


def theorem_ladder(ctx: OperatorContext) -> dict:
    """The bracket ladders used to build sl(p+1) from X and D.

    With n = p + 1 and H = [D, X]:
      xi_1 = X, xi_k = [...[[H, X], X]..., X] (k - 1 brackets) = -n E_{n, n-k+1},
      eta_1 = D, eta_k = (ad D)^(k-1) H, a nonzero multiple of xi_k^T,
      H_k = [eta_k, xi_k], proportional to E_{n-k+1,n-k+1} - E_nn.
    """
    n = ctx.dim
    h = commutator(ctx.dhat, ctx.xhat)
    xi, eta = {1: ctx.xhat}, {1: ctx.dhat}
    cur_x, cur_d = h, h
    for k in range(2, n + 1):
        cur_x = commutator(cur_x, ctx.xhat)
        cur_d = commutator(ctx.dhat, cur_d)
        xi[k], eta[k] = cur_x, cur_d
    cartan = {k: commutator(eta[k], xi[k]) for k in range(2, n + 1)}
    return {"H": h, "xi": xi, "eta": eta, "cartan": cartan}


def check_theorem_ladder(ctx: OperatorContext) -> Report:
    n = ctx.dim
    lad = theorem_ladder(ctx)
    bad = []
    for k in range(2, n + 1):
        xi, eta = lad["xi"][k], lad["eta"][k]
        if xi != E(n, n - k + 1, n).scale(-n):
            bad.append(f"xi_{k} != -n E_(n,n-k+1)")
        corner = eta[n - k, n - 1]  # entry where xi_k^T = -n E_{n-k+1,n} is nonzero
        if corner == 0 or eta != xi.T.scale(corner / Fraction(-n)):
            bad.append(f"eta_{k} is not a nonzero multiple of xi_{k}^T")
        hk = lad["cartan"][k]
        diff = E(n - k + 1, n - k + 1, n) - E(n, n, n)
        if hk != diff.scale(hk[n - k, n - k]) or hk.is_zero():
            bad.append(f"H_{k} not proportional to E_(n-k+1,n-k+1) - E_nn")
    return Report("theorem1_ladder", {"p": ctx.p}, not bad, bad or None)


def check_lie_closure(ctx: OperatorContext) -> Report:
    dim = lie_closure_dimension(ctx)
    expected = ctx.dim ** 2 - 1
    return Report("theorem1_closure", {"p": ctx.p}, dim == expected,
                  None if dim == expected else {"dimension": dim, "expected": expected},
                  {"dimension": dim})


def check_apply_series_homomorphism(ctx: OperatorContext, f: Series, g: Series) -> Report:
    lhs = apply_series(ctx, series_mul(f, g))
    rhs = apply_series(ctx, f) @ apply_series(ctx, g)
    return Report("apply_series_homomorphism", {"p": ctx.p}, lhs == rhs,
                  None if lhs == rhs else lhs - rhs)
