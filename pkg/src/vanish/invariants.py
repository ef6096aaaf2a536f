"""Hilbert function, dimension, degree and regularity of S/I.

Everything is read off the leading monomials of the reduced GrevLex basis.
For a monomial ideal whose generators have componentwise lcm L, the Hilbert
function agrees with the Hilbert polynomial for every d > |L|, so the
stable range is known exactly without any guard.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from vanish.groebner import GroebnerBasis, Ideal
from vanish.polyring import GREVLEX, all_monomials


class NotGradedError(ValueError):
    pass


class UnsupportedDimensionError(ValueError):
    pass


def _basis(I: Ideal) -> GroebnerBasis:
    return I.groebner(GREVLEX)


def is_graded(I: Ideal) -> bool:
    return all(g.is_homogeneous() for g in _basis(I).elements)


def _leading(I: Ideal) -> list[tuple]:
    return _basis(I).leading_monomials()


def _is_standard(m, lms) -> bool:
    for lm in lms:
        for a, b in zip(lm, m):
            if a > b:
                break
        else:
            return False
    return True


def hilbert_function(I: Ideal, d: int) -> int:
    """dim_K (S/I)_d, counted as standard monomials of degree d."""
    if not is_graded(I):
        raise NotGradedError("the Hilbert function is defined here for graded ideals only")
    if d < 0:
        return 0
    lms = _leading(I)
    return sum(1 for m in all_monomials(I.ring.nvars, d) if _is_standard(m, lms))


def stable_from(I: Ideal) -> int:
    """A degree from which H_I agrees with the Hilbert polynomial."""
    lms = _leading(I)
    if not lms:
        return 0
    lcm = [max(col) for col in zip(*lms)]
    return sum(lcm) + 1


def krull_dimension(I: Ideal) -> int:
    """Largest set of variables containing the support of no leading monomial.

    Returns -1 for the unit ideal.
    """
    G = _basis(I)
    if G.is_unit():
        return -1
    s = I.ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in G.leading_monomials()]
    for size in range(s, -1, -1):
        for V in itertools.combinations(range(s), size):
            Vs = set(V)
            if not any(sup <= Vs for sup in supports):
                return size
    return 0


def _count_standard_finite(I: Ideal) -> int:
    """Number of standard monomials of a zero-dimensional ideal."""
    lms = _leading(I)
    s = I.ring.nvars
    bounds = []
    for i in range(s):
        pure = [m[i] for m in lms if m[i] and all(e == 0 for j, e in enumerate(m) if j != i)]
        bounds.append(min(pure))
    return sum(
        1 for m in itertools.product(*(range(b) for b in bounds)) if _is_standard(m, lms)
    )


def degree(I: Ideal) -> int:
    """Degree (multiplicity) of S/I for Krull dimension 0 or 1."""
    k = krull_dimension(I)
    if k < 0:
        raise ValueError("S/I is zero: the unit ideal has no degree")
    if k == 0:
        return _count_standard_finite(I)
    if k == 1:
        return hilbert_function(I, stable_from(I))
    raise UnsupportedDimensionError(f"degree is only computed for dimension 0 or 1, got {k}")


def regularity(I: Ideal) -> int:
    """Least r >= 0 with H_I(d) equal to the (constant) Hilbert polynomial for all d >= r."""
    if krull_dimension(I) != 1:
        raise UnsupportedDimensionError("regularity is computed for one-dimensional ideals")
    top = stable_from(I)
    values = [hilbert_function(I, d) for d in range(top + 1)]
    h = values[top]
    r = top
    while r > 0 and values[r - 1] == h:
        r -= 1
    return r


@dataclass
class HilbertProfile:
    values: list
    dimension: int
    degree: int
    regularity: int | None
    stabilized: bool

    def __str__(self):
        reg = "-" if self.regularity is None else self.regularity
        return f"dim {self.dimension}, degree {self.degree}, reg {reg}"


def hilbert_profile(I: Ideal, upto: int | None = None) -> HilbertProfile:
    """All invariants at once. Values run through the regularity (or ``upto``)."""
    k = krull_dimension(I)
    deg = degree(I)
    if k == 1 and is_graded(I):
        reg = regularity(I)
        top = max(reg, upto or 0)
        values = [hilbert_function(I, d) for d in range(top + 1)]
        return HilbertProfile(values, k, deg, reg, stabilized=True)
    return HilbertProfile([], k, deg, None, stabilized=False)
