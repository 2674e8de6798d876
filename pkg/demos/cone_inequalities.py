"""
Facets of the Littlewood-Richardson cone from rigid puzzles
===========================================================

Which triples of weakly decreasing integer vectors (lam, mu, nu) with
total sum zero can be the spectra appearing in a nonzero tensor-product
invariant?  The answer is a polyhedral cone, and its facets are indexed
by rigid two-letter puzzles: each one contributes the inequality that a
certain subset-sum of coordinates is at most zero.
"""

from fractions import Fraction

from bkpuzzles import facets, member

# The facet list for n = 3: twelve inequalities beyond the trivial ones.
for ineq in facets(3):
    print(ineq.render())
print()

# Membership is exact rational arithmetic.  The pair of adjoint weights
# for n = 3 lies in the cone; stretching nu beyond lam + mu breaks it.
lam = (1, 0, -1)
mu = (1, 0, -1)
nu = (0, 0, 0)
print(f"lam={lam} mu={mu} nu={nu}: member = {member(lam, mu, nu, 3)}")

nu = (3, 0, -3)
print(f"lam={lam} mu={mu} nu={nu}: member = {member(lam, mu, nu, 3)}")

# The cone is rational, not just integral.
lam = (Fraction(1, 2), 0, Fraction(-1, 2))
print(f"lam={lam} mu={lam} nu=(0,0,0): member = {member(lam, lam, (0, 0, 0), 3)}")
