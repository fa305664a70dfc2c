"""
Time evolution of a canonical system
====================================

exp(-t H(D)) pushes a canonical system forward in time.  With the trivial
system V(z) = z and H(z) = z^2/2 this produces Hermite polynomials of
variance t, the same polynomials one gets as eigenvectors of XD - t D^2.
"""

from fractions import Fraction

from focal import appell, canonical
from focal.exactmath import Series, log_cosh_series

p, t = 6, Fraction(2)
base = canonical.preset("identity", p)
h = Series.from_polynomial([0, 0, Fraction(1, 2)], p)

evolved = appell.evolve(base, h, t).table()
eigen = appell.hermite_family(p, t)
for n in range(p + 1):
    print(f"H_{n}(x, {t}):", ", ".join(str(c) for c in evolved[n]))
print("agrees with eigenvectors of XD - tD^2:", evolved.rows == eigen.rows)

print(appell.check_semigroup(base, h, Fraction(1, 3), Fraction(-5, 4)).line())
print(appell.check_evolution_equation(base, h).line())

# The tanh system evolved by log cosh gives Krawtchouk polynomials at time N.
kraw = appell.evolve(canonical.preset("tanh", 6), log_cosh_series(6), 5).table()
print("K_6(x, 5):", ", ".join(str(c) for c in kraw[6]))

# Gegenbauer eigenvectors are returned monic.
for n, row in enumerate(appell.gegenbauer_family(4, 1).rows):
    print(f"G_{n} (alpha=1, monic):", ", ".join(str(c) for c in row))
