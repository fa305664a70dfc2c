"""
Differentiation and multiplication as matrices
===============================================

On polynomials of degree <= p the derivative D and multiplication by x
become (p+1) x (p+1) matrices.  Multiplication has to drop x^p * x, so
[D, X] is no longer the identity; the truncated relation DXD - XDD = D
survives instead.
"""

from fractions import Fraction

from focal import operators
from focal.exactmath import exp_series
from focal.formats import rows_to_text

ctx = operators.make_context(4)
print("D =")
print(rows_to_text(ctx.dhat.rows))
print("X =")
print(rows_to_text(ctx.xhat.rows))

# The commutator is the identity except in the bottom corner.
print("[D, X] =")
print(rows_to_text((ctx.dhat @ ctx.xhat - ctx.xhat @ ctx.dhat).rows))
print(operators.check_taa(ctx).line())

# Any power series in D is a finite polynomial in D, since D^(p+1) = 0.
# e^D shifts x -> x + 1, so its columns hold binomial coefficients.
print("e^D =")
print(rows_to_text(operators.apply_series(ctx, exp_series(4)).rows))

# The Ornstein-Uhlenbeck operator XD - t D^2 at t = 1/2.
print("XD - D^2/2 =")
print(rows_to_text(operators.ou_operator(ctx, Fraction(1, 2)).rows))

# Orthofermions c_i = E_{1,i+1} rebuild D and X exactly.
ofs = operators.orthofermion_set(4)
a, adag = operators.taa_generators(ofs)
print("a == D:", a == ctx.dhat, " a_dagger == X:", adag == ctx.xhat)
print(operators.check_orthofermions(ofs).line())
