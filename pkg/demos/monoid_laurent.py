"""
Monoids of points and Laurent monomials
=======================================

A subset of projective space closed under coordinatewise products, and a
parameterization by Laurent monomials that hits exactly that subset.
"""

from vanish import (
    PointSet,
    is_binomial_basis,
    is_multiplicative_monoid,
    monoid_to_laurent_parameterization,
    oracle_vanishing_ideal,
)
from vanish.points import enumerate_parameterized

Y = PointSet.from_points([(1, 1, 0), (0, 1, 1), (0, 1, 0), (1, 1, 1)], 3)
print("points:", Y.points)
print("monoid:", is_multiplicative_monoid(Y))

# One pair of variables y_i, z_i per non-identity point, then powers to kill
# the sign ambiguity of F_3.
F = monoid_to_laurent_parameterization(Y, include_identity=False)
for f in F:
    print("   ", f)

# Evaluating over (F_3)^6 gives the set back.
print("re-enumerated:", enumerate_parameterized(F).points)

# The vanishing ideal of a set parameterized by Laurent monomials is binomial.
G = oracle_vanishing_ideal(Y).groebner()
for g in G.elements:
    print("   ", g)
print("binomial:", is_binomial_basis(G))
