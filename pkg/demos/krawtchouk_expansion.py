"""
Expanding a polynomial in Krawtchouk polynomials
================================================

For f of degree <= N the coefficient of K_n is the constant term of
(cosh D)^(N-n) (sinh D)^n f / n!.  The same numbers come from a single
(N+1) x (N+1) matrix Y whose inverse has the K_n as columns.
"""

from focal import krawtchouk
from focal.formats import rows_to_text

N = 5
f = (0, 5, -1, 2, 1, 0)  # x^4 + 2x^3 - x^2 + 5x
coeffs = krawtchouk.expand(N, N, f)
print("f = " + " + ".join(f"{c} K_{n}" for n, c in enumerate(coeffs) if c))

y, yinv = krawtchouk.expansion_matrix(N, N)
print("Y =")
print(rows_to_text(y.rows))
print("Y^-1 =")
print(rows_to_text(yinv.rows))
print("Y f =", [str(c) for c in y @ f])
print(krawtchouk.check_expansion_routes(N, N, f).line())
