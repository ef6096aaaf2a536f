"""Vanishing ideals of parameterized sets by elimination.

All four sets share one pattern: build an auxiliary ideal in
B = K[eliminated block | t_1..t_s], compute a Block elimination basis and
keep the part free of the eliminated block. Variable layout of B is
``y0, [w], y_1..y_n, [z] | t_1..t_s``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from vanish.groebner import Ideal, colon, eliminate
from vanish.parser import ParameterizationSpec
from vanish.points import DEFAULT_GRID_CAP, EnumerationCapError, enumerate_set, target_ring
from vanish.polyring import Polynomial, Ring, product


class Status(enum.Enum):
    PROPER = "Proper"
    EMPTY_SET = "EmptySet"
    ORIGIN_ONLY = "OriginOnly"

    def __str__(self):
        return self.value


@dataclass
class Construction:
    ring: Ring
    generators: list
    eliminated: int
    formula: str
    # redundant members of the ideal passed to the Groebner computation only
    hints: list = field(default_factory=list)


@dataclass
class VanishingResult:
    ideal: Ideal
    status: Status
    mode: str
    construction: Construction | None = None
    # whether the nonemptiness hypothesis of a colon identity is known to hold
    hypothesis: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def groebner_basis(self):
        return self.ideal.groebner()


def classify(ideal: Ideal) -> Status:
    G = ideal.groebner()
    if G.is_unit():
        return Status.EMPTY_SET
    t = ideal.ring.gens()
    if [g for g in G.elements] == sorted(t, key=lambda p: p.leading_monomial(), reverse=True):
        return Status.ORIGIN_ONLY
    return Status.PROPER


def _fresh(name: str, taken: set) -> str:
    while name in taken:
        name = "_" + name
    taken.add(name)
    return name


class _Layout:
    """Auxiliary ring B with f_i, g_i embedded."""

    def __init__(self, spec: ParameterizationSpec, use_w: bool, use_z: bool, use_y0: bool = True):
        s = spec.s
        t_names = [f"t{i}" for i in range(1, s + 1)]
        taken = set(t_names)
        names = []
        self.y0 = self.w = self.z = None
        if use_y0:
            self.y0 = len(names)
            names.append(_fresh("y0", taken))
        if use_w:
            self.w = len(names)
            names.append(_fresh("w", taken))
        self.ypos = []
        for v in spec.parameter_variables:
            self.ypos.append(len(names))
            names.append(_fresh(v, taken))
        if use_z:
            self.z = len(names)
            names.append(_fresh("z", taken))
        self.k = len(names)
        names += t_names
        self.ring = Ring(spec.field, tuple(names))
        self.f = [p.embed(self.ring, self.ypos) for p in spec.numerators]
        self.g = [p.embed(self.ring, self.ypos) for p in spec.denominators]
        gens = self.ring.gens()
        self.t = gens[self.k :]
        self.y = [gens[i] for i in self.ypos]
        self.vars = gens
        self.q = spec.q

    def reduce_field(self, p: Polynomial) -> Polynomial:
        """Lower every y-exponent below q using y^q = y."""
        q = self.q
        terms = {}
        for m, c in p.terms.items():
            m = list(m)
            for i in self.ypos:
                while m[i] >= q:
                    m[i] -= q - 1
            m = tuple(m)
            terms[m] = (terms.get(m, 0) + c) % q
        return Polynomial(self.ring, {m: c for m, c in terms.items() if c})

    def field_equations(self) -> list[Polynomial]:
        return [y**self.q - y for y in self.y]

    def denominator_inverse(self) -> Polynomial:
        return self.vars[self.y0] * product(self.g, self.ring) - 1


def _hints(lay: _Layout) -> list[Polynomial]:
    """Polynomials known to lie in the auxiliary ideal.

    The auxiliary ideal is radical: modulo the field equations its quotient
    splits into one factor per parameter point, each K or K[z]. On every
    factor y0 and w are nonzero constants of K and each t_i equals a K-multiple
    of z (or a K-constant), so the polynomials below vanish on its zero set.
    They bound t-degrees during Buchberger without changing the ideal.
    """
    q = lay.q
    out = []
    # y0 = 1/G = G^(q-2) and w = 1/F = F^(q-2) with G = prod(g), F = prod(f)
    for pos, fs in ((lay.y0, lay.g), (lay.w, lay.f)):
        if pos is not None:
            inverse = lay.reduce_field(product(fs, lay.ring) ** (q - 2))
            out.append(lay.vars[pos] - inverse)
    if lay.z is None:
        out += [t**q - t for t in lay.t]
    else:
        z = lay.vars[lay.z]
        out += [t**q * z - t * z**q for t in lay.t]
    return out


def _finish(lay: _Layout, gens: list, mode: str, formula: str, hints: bool = True) -> VanishingResult:
    extra = _hints(lay) if hints else []
    elim = eliminate(Ideal(gens + extra, lay.ring), lay.k)
    return VanishingResult(
        ideal=elim,
        status=classify(elim),
        mode=mode,
        construction=Construction(lay.ring, gens, lay.k, formula, extra),
    )


def _require_mode(spec: ParameterizationSpec, *modes):
    if spec.mode not in modes:
        raise ValueError(f"spec mode is {spec.mode!r}, expected {' or '.join(modes)}")


def projective_vanishing_ideal(spec: ParameterizationSpec, hints: bool = True) -> VanishingResult:
    """I(XX) = ({g_i t_i - f_i z}, {y_j^q - y_j}, y0 g_1...g_s - 1) cap S."""
    lay = _Layout(spec, use_w=False, use_z=True)
    z = lay.vars[lay.z]
    gens = [g * t - f * z for f, g, t in zip(lay.f, lay.g, lay.t)]
    gens += lay.field_equations()
    gens.append(lay.denominator_inverse())
    return _finish(lay, gens, "projective", "g_i*t_i - f_i*z, y^q - y, y0*prod(g) - 1", hints)


def projective_algebraic_vanishing_ideal(
    spec: ParameterizationSpec, form: str = "power", hints: bool = True
) -> VanishingResult:
    """I(X), the projective set restricted to points with all f_i nonzero.

    ``form="power"`` adds f_i^(q-1) - 1; ``form="w"`` adds w f_1...f_s - 1
    with an extra eliminated variable w.
    """
    if form not in ("power", "w"):
        raise ValueError("form must be 'power' or 'w'")
    lay = _Layout(spec, use_w=(form == "w"), use_z=True)
    z = lay.vars[lay.z]
    gens = [g * t - f * z for f, g, t in zip(lay.f, lay.g, lay.t)]
    gens += lay.field_equations()
    if form == "power":
        gens += [f ** (lay.q - 1) - 1 for f in lay.f]
        formula = "g_i*t_i - f_i*z, y^q - y, f_i^(q-1) - 1, y0*prod(g) - 1"
    else:
        formula = "g_i*t_i - f_i*z, y^q - y, y0*prod(g) - 1, w*prod(f) - 1"
    gens.append(lay.denominator_inverse())
    if form == "w":
        gens.append(lay.vars[lay.w] * product(lay.f, lay.ring) - 1)
    return _finish(lay, gens, "projective_algebraic", formula, hints)


def affine_vanishing_ideal(spec: ParameterizationSpec, hints: bool = True) -> VanishingResult:
    """I(XX*) = ({g_i t_i - f_i}, {y_j^q - y_j}, y0 g_1...g_s - 1) cap S."""
    lay = _Layout(spec, use_w=False, use_z=False)
    gens = [g * t - f for f, g, t in zip(lay.f, lay.g, lay.t)]
    gens += lay.field_equations()
    gens.append(lay.denominator_inverse())
    return _finish(lay, gens, "affine", "g_i*t_i - f_i, y^q - y, y0*prod(g) - 1", hints)


def _colon_by_product(res: VanishingResult, mode: str) -> VanishingResult:
    S = res.ideal.ring
    J = colon(res.ideal, product(S.gens(), S))
    return VanishingResult(J, classify(J), mode, res.construction)


def affine_algebraic_vanishing_ideal(spec: ParameterizationSpec, hints: bool = True) -> VanishingResult:
    """I(X*) = (I(XX*) : t_1...t_s)."""
    return _colon_by_product(affine_vanishing_ideal(spec, hints), "affine_algebraic")


def colon_to_algebraic(
    projective_result: VanishingResult,
    spec: ParameterizationSpec | None = None,
    cap: int = DEFAULT_GRID_CAP,
) -> VanishingResult:
    """(I(XX) : t_1...t_s), which equals I(X) when X is nonempty.

    When ``spec`` is given and the grid is small enough, the nonemptiness
    of X is checked by enumeration and recorded in ``hypothesis``.
    """
    if projective_result.mode != "projective":
        raise ValueError("expected the result of projective_vanishing_ideal")
    out = _colon_by_product(projective_result, "projective_algebraic")
    if spec is not None:
        try:
            out.hypothesis = len(enumerate_set(spec, "projective_algebraic", cap)) > 0
        except EnumerationCapError:
            out.hypothesis = None
    if out.hypothesis is False:
        out.notes.append("X is empty: the colon identity is not claimed to give I(X)")
    return out


def polynomial_shortcut(
    spec: ParameterizationSpec, algebraic: bool = False, hints: bool = True
) -> VanishingResult:
    """Smaller elimination for polynomial parameterizations (all g_i = 1).

    I(XX) = ({t_i - f_i z}, {y_j^q - y_j}) cap S, and with ``algebraic`` the
    extra generators f_i^(q-1) - 1 give I(X).
    """
    if any(g != g.ring.one() for g in spec.denominators):
        raise ValueError("the polynomial shortcut needs every denominator equal to 1")
    lay = _Layout(spec, use_w=False, use_z=True, use_y0=False)
    z = lay.vars[lay.z]
    gens = [t - f * z for f, t in zip(lay.f, lay.t)]
    gens += lay.field_equations()
    formula = "t_i - f_i*z, y^q - y"
    if algebraic:
        gens += [f ** (lay.q - 1) - 1 for f in lay.f]
        formula += ", f_i^(q-1) - 1"
    mode = "projective_algebraic" if algebraic else "projective"
    return _finish(lay, gens, mode, formula, hints)


_DISPATCH: dict[str, Callable[[ParameterizationSpec], VanishingResult]] = {
    "projective": projective_vanishing_ideal,
    "projective_algebraic": projective_algebraic_vanishing_ideal,
    "affine": affine_vanishing_ideal,
    "affine_algebraic": affine_algebraic_vanishing_ideal,
}


def vanishing_ideal(spec: ParameterizationSpec, mode: str | None = None) -> VanishingResult:
    """Dispatch on ``mode`` (default: the spec's own mode)."""
    mode = mode or spec.mode
    if mode not in _DISPATCH:
        raise ValueError(f"unknown mode {mode!r}")
    return _DISPATCH[mode](spec)


def target_ring_of(spec: ParameterizationSpec) -> Ring:
    return target_ring(spec.field, spec.s)
