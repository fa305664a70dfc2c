"""Multivariate calculus by Kronecker placement.

D_j = I (x) ... (x) D (x) ... (x) I with D in slot j (left-associated), and
likewise X_j.  The basis vector e_{k_1} (x) ... (x) e_{k_N} sits at flat
index sum_j k_j (p+1)^(N-j), i.e. the first variable is most significant.
"""

import os
from dataclasses import dataclass
from itertools import product

from .errors import CapExceededError, CommutationError, NormalizationError, SingularError
from .exactmath import Matrix, MSeries, basis_vector, commutator, kron
from .operators import make_context
from .report import Report

DEFAULT_CAP = 4096


def dimension_cap(cap: int = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("FOCAL_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class MultiContext:
    nvars: int
    p: int
    dhats: tuple
    xhats: tuple

    @property
    def dim(self) -> int:
        return (self.p + 1) ** self.nvars

    def flat_index(self, multi) -> int:
        idx = 0
        for k in multi:
            idx = idx * (self.p + 1) + k
        return idx

    def multi_index(self, flat: int) -> tuple:
        out = []
        for _ in range(self.nvars):
            flat, k = divmod(flat, self.p + 1)
            out.append(k)
        return tuple(reversed(out))

    def e(self, multi) -> tuple:
        return basis_vector(self.flat_index(multi), self.dim)

    def window(self, max_degree: int) -> list:
        """Flat indices of basis vectors with total degree <= max_degree."""
        return [i for i in range(self.dim) if sum(self.multi_index(i)) <= max_degree]


def _place(m: Matrix, j: int, nvars: int, ident: Matrix) -> Matrix:
    factors = [ident] * nvars
    factors[j] = m
    return kron(*factors) if nvars > 1 else m


def make_multicontext(nvars: int, p: int, cap: int = None) -> MultiContext:
    if nvars < 1:
        raise ValueError("nvars must be >= 1")
    dim = (p + 1) ** nvars
    limit = dimension_cap(cap)
    if dim > limit:
        raise CapExceededError(
            f"(p+1)^N = {p + 1}^{nvars} = {dim} exceeds the dimension cap {limit}", dim)
    ctx = make_context(p)
    ident = ctx.identity
    dh = tuple(_place(ctx.dhat, j, nvars, ident) for j in range(nvars))
    xh = tuple(_place(ctx.xhat, j, nvars, ident) for j in range(nvars))
    return MultiContext(nvars, p, dh, xh)


def check_multicontext(ctx: MultiContext) -> Report:
    bad = []
    zero = Matrix.zeros(ctx.dim)
    for j in range(ctx.nvars):
        d, x = ctx.dhats[j], ctx.xhats[j]
        if d @ x @ d - x @ d @ d != d:
            bad.append(f"TAA fails for variable {j + 1}")
        for i in range(ctx.nvars):
            if i == j:
                continue
            for name, a, b in (("[D_j,X_i]", d, ctx.xhats[i]), ("[X_j,X_i]", x, ctx.xhats[i]),
                               ("[D_j,D_i]", d, ctx.dhats[i])):
                if commutator(a, b) != zero:
                    bad.append(f"{name} != 0 for j={j + 1}, i={i + 1}")
    return Report("multi_context", {"nvars": ctx.nvars, "p": ctx.p}, not bad, bad or None)


def evaluate_at_dhats(s: MSeries, ctx: MultiContext) -> Matrix:
    """Substitute the commuting D_1..D_N into every monomial of s."""
    if s.nvars != ctx.nvars:
        raise ValueError(f"series in {s.nvars} variables for a {ctx.nvars}-variable context")
    powers = [[Matrix.identity(ctx.dim)] for _ in range(ctx.nvars)]
    out = Matrix.zeros(ctx.dim)
    for exps, c in s.terms.items():
        term = None
        for j, e in enumerate(exps):
            if e > ctx.p:
                term = None
                break
            while len(powers[j]) <= e:
                powers[j].append(powers[j][-1] @ ctx.dhats[j])
            if e:
                term = powers[j][e] if term is None else term @ powers[j][e]
        else:
            if term is None:
                term = Matrix.identity(ctx.dim)
            out = out + term.scale(c)
    return out


def invert_series_matrix(m: list) -> list:
    """Gauss-Jordan inverse of a square matrix of MSeries over the truncated ring."""
    n = len(m)
    nv, order = m[0][0].nvars, min(x.order for row in m for x in row)
    one = MSeries.constant(1, nv, order)
    zero = MSeries(nv, order)
    a = [[x.truncate(order) for x in row] for row in m]
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col].constant_term() != 0), None)
        if piv is None:
            raise SingularError("Jacobian at 0 is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        r = a[col][col].reciprocal()
        a[col] = [x * r for x in a[col]]
        inv[col] = [x * r for x in inv[col]]
        for row in range(n):
            f = a[row][col]
            if row != col and not f.is_zero():
                a[row] = [x - f * y for x, y in zip(a[row], a[col])]
                inv[row] = [x - f * y for x, y in zip(inv[row], inv[col])]
    return inv


@dataclass(frozen=True)
class MultiCanonicalSystem:
    ctx: MultiContext
    v: tuple
    w: tuple  # w[mu][j] = W_{mu j}
    vhats: tuple
    yhats: tuple


def jacobian(v) -> list:
    return [[vi.partial(j) for j in range(len(v))] for vi in v]


def multicanonical_reports(sys: MultiCanonicalSystem) -> list:
    ctx, nv, p = sys.ctx, sys.ctx.nvars, sys.ctx.p
    reports = []
    # W V' == 1
    jac = jacobian(sys.v)
    bad_w = []
    for i in range(nv):
        for j in range(nv):
            s = MSeries(nv, min(x.order for x in sys.w[i]))
            for k in range(nv):
                s = s + sys.w[i][k] * jac[k][j]
            target = MSeries.constant(1 if i == j else 0, nv, s.order)
            if s != target:
                bad_w.append((i, j))
    reports.append(Report("multi_inverse_jacobian", {"nvars": nv, "p": p}, not bad_w,
                          bad_w or None))
    ident = Matrix.identity(ctx.dim)
    hw_window = ctx.window(p - 1)
    bad_hw = []
    for i in range(nv):
        for j in range(nv):
            c = commutator(sys.vhats[i], sys.yhats[j])
            if i == j:
                c = c - ident
            if any(any(c.column(k)) for k in hw_window):
                bad_hw.append((i + 1, j + 1))
    reports.append(Report("multi_hw_window", {"nvars": nv, "p": p}, not bad_hw, bad_hw or None))
    yy_window = ctx.window(p - 2)
    bad_yy = []
    for i in range(nv):
        for j in range(i + 1, nv):
            c = commutator(sys.yhats[i], sys.yhats[j])
            if any(any(c.column(k)) for k in yy_window):
                bad_yy.append((i + 1, j + 1))
    reports.append(Report("multi_raising_commute", {"nvars": nv, "p": p}, not bad_yy,
                          bad_yy or None))
    return reports


def make_multicanonical(ctx: MultiContext, v) -> MultiCanonicalSystem:
    """Y_j = sum_mu X_mu W_{mu j}(D) with W the inverse Jacobian of V.

    V must be known through total degree p; W is then exact through degree
    p - 1, which covers every y_n with |n| <= p.  When V is supplied through
    degree p + 1, W is kept through degree p and every column of Y_j is exact.
    """
    v = tuple(v)
    nv, p = ctx.nvars, ctx.p
    if len(v) != nv or any(s.nvars != nv for s in v):
        raise ValueError(f"need {nv} series in {nv} variables")
    if any(s.order < p for s in v):
        raise NormalizationError(f"every V_i must be given through total degree p = {p}")
    work = p + 1 if all(s.order >= p + 1 for s in v) else p
    v = tuple(s.truncate(work) for s in v)
    if any(s.constant_term() != 0 for s in v):
        raise NormalizationError("V(0) must be 0")
    w = invert_series_matrix(jacobian(v))
    vhats = tuple(evaluate_at_dhats(s, ctx) for s in v)
    wh = [[evaluate_at_dhats(w[mu][j], ctx) for j in range(nv)] for mu in range(nv)]
    yhats = []
    for j in range(nv):
        y = Matrix.zeros(ctx.dim)
        for mu in range(nv):
            y = y + ctx.xhats[mu] @ wh[mu][j]
        yhats.append(y)
    sys = MultiCanonicalSystem(ctx, v, tuple(tuple(r) for r in w), vhats, tuple(yhats))
    for r in multicanonical_reports(sys):
        if not r.passed:
            if r.suite == "multi_raising_commute":
                raise CommutationError(f"raising operators do not commute: {r.defect}")
            raise RuntimeError(f"internal identity failed: {r.suite} {r.defect}")
    return sys


def apply_raisings(sys: MultiCanonicalSystem, n, order=None) -> tuple:
    """Y^n e_0, applying Y_j n_j times in ``order`` (default 1..N)."""
    order = range(sys.ctx.nvars) if order is None else order
    vec = sys.ctx.e((0,) * sys.ctx.nvars)
    for j in order:
        for _ in range(n[j]):
            vec = sys.yhats[j] @ vec
    return vec


def to_tensor(ctx: MultiContext, vec) -> list:
    """Reshape a flat coefficient vector to nested lists indexed [k_1][k_2]..."""
    def build(prefix):
        if len(prefix) == ctx.nvars:
            return vec[ctx.flat_index(prefix)]
        return [build(prefix + (k,)) for k in range(ctx.p + 1)]
    return build(())


def multi_polynomials(sys: MultiCanonicalSystem, n) -> list:
    n = tuple(n)
    if len(n) != sys.ctx.nvars or any(k < 0 for k in n):
        raise ValueError(f"multi-index {n} does not match {sys.ctx.nvars} variables")
    if sum(n) > sys.ctx.p:
        raise ValueError(f"|n| = {sum(n)} exceeds p = {sys.ctx.p}")
    return to_tensor(sys.ctx, apply_raisings(sys, n))


def check_ordering_independence(sys: MultiCanonicalSystem) -> Report:
    """Y^n e_0 does not depend on the order in which the Y_j are applied, for |n| <= p."""
    nv, p = sys.ctx.nvars, sys.ctx.p
    bad = []
    for n in product(range(p + 1), repeat=nv):
        if sum(n) > p:
            continue
        ref = apply_raisings(sys, n)
        for j in range(1, nv):
            order = list(range(j, nv)) + list(range(j))
            if apply_raisings(sys, n, order) != ref:
                bad.append(n)
                break
        if apply_raisings(sys, n, list(reversed(range(nv)))) != ref and n not in bad:
            bad.append(n)
    return Report("multi_ordering_independence", {"nvars": nv, "p": p}, not bad, bad or None)


def diagonal_system(ctx: MultiContext, univariate) -> MultiCanonicalSystem:
    """System with V_i(z) = f_i(z_i) from univariate coefficient lists."""
    order = min(ctx.p + 1, min(len(c) for c in univariate) - 1)
    v = [MSeries.from_univariate(list(c)[: order + 1], i, ctx.nvars, order)
         for i, c in enumerate(univariate)]
    return make_multicanonical(ctx, v)
