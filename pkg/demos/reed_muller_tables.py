"""
Reed-Muller-type codes over a parameterized set
===============================================

Length, dimension and minimum distance of C_Y(d) for the 19-point set
of the previous demo and its 6-point subset with nonzero coordinates.
"""

from pathlib import Path

import numpy as np

from vanish import build_code, enumerate_set, minimum_distance, parameter_table
from vanish.parser import load_spec

spec = load_spec(Path(__file__).resolve().parent.parent / "data" / "f5_example.spec")

# Each column is one degree d. The dimension equals H(d) and reaches 19 at the
# regularity, from where on the code is all of F_5^19 and has distance 1.
for kind in ("projective", "projective_algebraic"):
    dmax = 5 if kind == "projective" else 2
    rows = parameter_table(spec, range(1, dmax + 1), kind=kind)
    print(kind)
    print("  d     ", [r.d for r in rows])
    print("  length", [r.length for r in rows])
    print("  dim   ", [r.dimension for r in rows])
    print("  delta ", [str(r.min_distance) for r in rows])

# d = 4 has 15-dimensional messages, (5^15 - 1)/4 classes, above the default cap.
# The generator matrix is plain evaluation at normalized representatives.
XX = enumerate_set(spec)
code = build_code(XX, 1)
print(np.asarray(XX.points).T)
print(code.basis)

# In degree 1 the minimum distance is 19 minus the most points on one line.
print("delta(1) =", minimum_distance(code))
