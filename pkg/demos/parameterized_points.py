"""
Vanishing ideals of a parameterized set
=======================================

The set of points [y1+1 : y2+1 : y1*y2] over F_5, its vanishing ideal,
and the Hilbert invariants of the quotient ring.
"""

from pathlib import Path

from vanish import (
    enumerate_set,
    hilbert_profile,
    oracle_vanishing_ideal,
    ideal_equal,
    projective_algebraic_vanishing_ideal,
    projective_vanishing_ideal,
)
from vanish.parser import load_spec

spec = load_spec(Path(__file__).resolve().parent.parent / "data" / "f5_example.spec")
print(spec.to_text())

# The points themselves: 19 in the projective plane, 6 with every coordinate nonzero.
XX = enumerate_set(spec, "projective")
X = enumerate_set(spec, "projective_algebraic")
print(len(XX), "points in XX,", len(X), "in X")

# The ideal comes from one elimination, without looking at any point.
res = projective_vanishing_ideal(spec)
print("auxiliary ring:", ", ".join(res.construction.ring.variables))
for g in res.construction.generators:
    print("   ", g)

G = res.ideal.groebner()
print("reduced GrevLex basis of I(XX):")
for g in G.elements:
    print("   ", g)

# Degree and regularity are read off the leading monomials.
print("I(XX):", hilbert_profile(res.ideal))
print("H(d):", hilbert_profile(res.ideal).values)

alg = projective_algebraic_vanishing_ideal(spec)
print("I(X): ", hilbert_profile(alg.ideal))

# The intersection of the point ideals gives the same ideal the slow way.
print("matches point-ideal intersection:", ideal_equal(res.ideal, oracle_vanishing_ideal(XX)))
