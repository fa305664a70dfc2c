"""
Several variables by Kronecker products
=======================================

D_j and X_j act on slot j of a tensor product of univariate spaces.
A coupled map V(z) = (z_1, z_2 + z_1^2) gives raising operators
Y_j = sum_mu X_mu W_{mu j}(D) with W the inverse Jacobian.
"""

from focal import multivar
from focal.exactmath import MSeries
from focal.formats import mseries_to_json, rows_to_text

nvars, p = 2, 3
ctx = multivar.make_multicontext(nvars, p)
print(multivar.check_multicontext(ctx).line())

v = [MSeries.variable(0, nvars, p),
     MSeries.variable(1, nvars, p) + MSeries(nvars, p, {(2, 0): 1})]
sys_ = multivar.make_multicanonical(ctx, v)
for mu, row in enumerate(sys_.w, start=1):
    for j, w in enumerate(row, start=1):
        print(f"W_{mu}{j} terms:", mseries_to_json(w)["terms"])
for r in multivar.multicanonical_reports(sys_):
    print(r.line())
print(multivar.check_ordering_independence(sys_).line())

for n in [(1, 0), (0, 1), (1, 1), (2, 1)]:
    t = multivar.multi_polynomials(sys_, n)
    print(f"y_{n}: coefficient grid [x1 power][x2 power]")
    print(rows_to_text(t))
