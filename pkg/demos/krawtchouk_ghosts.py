"""
Krawtchouk polynomials and their ghosts
=======================================

K_n(x, N) is orthogonal for the symmetric binomial walk on
{N, N-2, ..., -N}.  Built by matrices from V = tanh z and H = log cosh z,
the family keeps going past n = N, but those members vanish at every
point of the walk's support and so have zero norm.
"""

from focal import krawtchouk
from focal.formats import rows_to_text

N = 5
table = krawtchouk.krawtchouk(N + 2, N)
for n, row in enumerate(table.rows):
    values = [str(table.evaluate(n, N - 2 * j)) for j in range(N + 1)]
    print(f"K_{n}: coeffs {[str(c) for c in row]}")
    print(f"     on the support: {values}")

report = krawtchouk.ghost_check(table)
print(report.line())
print("norms:", {n: str(v) for n, v in report.details["norms"].items()})

# su(2) on span{K_0..K_N}.
r, l, lam = krawtchouk.su2_matrices(N)
print("Lambda = [L, R] =")
print(rows_to_text(lam.rows))
print(krawtchouk.su2_check(krawtchouk.make_krawtchouk(N + 1, N)).line())
