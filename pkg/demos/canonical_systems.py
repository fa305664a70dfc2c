"""
Canonical polynomial systems
============================

Pick V with V(0) = 0 and V'(0) != 0.  The raising matrix Y = X W(D),
W = 1/V', generates y_n = Y^n e_0, the coefficient vectors of the
canonical polynomials.  Below: falling factorials from V = e^z - 1,
scaled Bessel-type polynomials from V = alpha z - z^2/2, and
y_n = x (x+n)^(n-1) from V = z e^{-z}.
"""

from fractions import Fraction

from focal import canonical
from focal.formats import rows_to_text

exp4 = canonical.preset("exp", 4)
print("Y for V = e^z - 1:")
print(rows_to_text(exp4.yhat.rows))
for n, row in enumerate(canonical.canonical_polynomials(exp4).rows):
    print(f"  y_{n}:", ", ".join(str(c) for c in row))

# Y^5 is past the order: its first column has lost the x^5 term.
print("first column of Y^5:", [str(c) for c in (exp4.yhat ** 5).column(0)])

drift = canonical.preset("gauss_drift", 5, alpha=Fraction(3, 2))
print("\ngauss drift, alpha = 3/2:")
for n, row in enumerate(canonical.canonical_polynomials(drift).rows):
    print(f"  y_{n}:", ", ".join(str(c) for c in row))
print("recurrence series 1/U'(V):",
      [str(c) for c in canonical.recurrence_coefficients(drift).coeffs])

lw = canonical.preset("lambertw", 7)
print("\nY for V = z e^{-z} at p = 7:")
print(rows_to_text(lw.yhat.rows))

for sys_ in (exp4, drift, lw):
    print(canonical.verify_hw_on_subspace(sys_).line())
