"""Buchberger's algorithm and ideal operations built on reduced Groebner bases."""

from __future__ import annotations

import heapq
from functools import lru_cache
from typing import Iterable, Sequence

from vanish.polyring import (
    GREVLEX,
    Block,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatchError,
    divide,
    divides,
    render,
)


# -- internal packed routines ------------------------------------------------
#
# Inside Buchberger a monomial is one int. The high part is the order key
# (a linear function of the exponents) written in a balanced base, so integer
# comparison is the term order and integer addition is monomial
# multiplication. The low part holds one guarded bit field per variable plus
# a total-degree field, used for divisibility tests and overflow detection.
# A "raw" polynomial is a dict {packed monomial: residue}; basis elements are
# monic and stored as (leading monomial, list of tail terms).

_FIELD_BITS = 16
_KEY_BITS = 20


class _Packer:
    def __init__(self, order: MonomialOrder, n: int):
        if any(order.key((0,) * n)):
            raise ValueError(f"{order!r} has a non-linear key")
        cols = [order.key(tuple(int(i == j) for j in range(n))) for i in range(n)]
        length = len(cols[0]) if cols else 0
        w = _FIELD_BITS
        self.n = n
        self.width = w
        self.fmask = (1 << w) - 1
        self.ebits = w * (n + 1)
        self.emask = (1 << self.ebits) - 1
        self.guard = sum(1 << (w * i + w - 1) for i in range(n + 1))
        self.limit = 1 << (w - 1)
        base = 1 << _KEY_BITS
        self.unit = []
        for i, col in enumerate(cols):
            k = sum(c * base ** (length - 1 - j) for j, c in enumerate(col))
            self.unit.append((k << self.ebits) + (1 << (w * i)) + (1 << (w * n)))

    def mono(self, m: tuple) -> int:
        if sum(m) >= self.limit:
            raise OverflowError("monomial degree too large for packed arithmetic")
        return sum(e * u for e, u in zip(m, self.unit))

    def unmono(self, x: int) -> tuple:
        w, f = self.width, self.fmask
        return tuple((x >> (w * i)) & f for i in range(self.n))

    def deg(self, x: int) -> int:
        return (x >> (self.width * self.n)) & self.fmask

    def encode(self, p: dict) -> dict:
        return {self.mono(m): c for m, c in p.items()}

    def decode(self, p: dict) -> dict:
        return {self.unmono(x): c for x, c in p.items()}

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return (((b & self.emask) | g) - (a & self.emask)) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.mono(tuple(max(u, v) for u, v in zip(self.unmono(a), self.unmono(b))))


@lru_cache(maxsize=64)
def _packer(order: MonomialOrder, n: int) -> _Packer:
    return _Packer(order, n)


def _make_monic(p: dict, q: int) -> tuple[int, list]:
    """Split p into (leading monomial, monic tail term list)."""
    lm = max(p)
    c = p[lm]
    inv = pow(c, q - 2, q) if c != 1 else 1
    return lm, [(m, a * inv % q) for m, a in p.items() if m != lm]


def _full(elem: tuple[int, list]) -> dict:
    lm, tail = elem
    out = dict(tail)
    out[lm] = 1
    return out


def _reduce(p: dict, basis: Sequence[tuple[int, list]], P: _Packer, q: int, sugars=None,
            sugar: list | None = None) -> dict:
    """Full reduction of p modulo monic basis elements.

    With ``sugars`` (one per basis element) the sugar degree held in
    ``sugar[0]`` is raised by every reduction step.
    """
    p = dict(p)
    if not p or not basis:
        return p
    emask, guard = P.emask, P.guard
    divs = [(lm & emask, lm, tail, i) for i, (lm, tail) in enumerate(basis)]
    heap = [-x for x in p]
    heapq.heapify(heap)
    pop, push, get = heapq.heappop, heapq.heappush, p.get
    rem = {}
    while heap:
        m = -pop(heap)
        c = p.pop(m, 0)
        if not c:
            continue
        mg = (m & emask) | guard
        for lme, lm, tail, bi in divs:
            if (mg - lme) & guard != guard:
                continue
            shift = m - lm
            if sugars is not None:
                sg = P.deg(shift) + sugars[bi]
                if sg > sugar[0]:
                    sugar[0] = sg
            for x, a in tail:
                e = x + shift
                old = get(e)
                if old is None:
                    if e & guard:
                        raise OverflowError("exponent too large for packed arithmetic")
                    p[e] = (-c * a) % q
                    push(heap, -e)
                else:
                    v = (old - c * a) % q
                    if v:
                        p[e] = v
                    else:
                        del p[e]
            break
        else:
            rem[m] = c
    return rem


def _spoly(f: tuple[int, list], g: tuple[int, list], P: _Packer, q: int) -> dict:
    (lf, tf), (lg, tg) = f, g
    lcm = P.lcm(lf, lg)
    sf, sg = lcm - lf, lcm - lg
    out = {x + sf: a for x, a in tf}
    for x, a in tg:
        e = x + sg
        v = (out.get(e, 0) - a) % q
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    if any(e & P.guard for e in out):
        raise OverflowError("exponent too large for packed arithmetic")
    return out


def _buchberger_raw(polys: Iterable[dict], P: _Packer, q: int) -> list[tuple[int, list]]:
    """Buchberger with Gebauer-Moeller criteria.

    Pairs are selected by sugar degree, ties broken by the lcm in the term
    order. Returns the reduced Groebner basis sorted by descending leading
    monomial.
    """
    basis: list[tuple[int, list]] = []  # every element ever added
    sugar: list[int] = []
    active: list[int] = []
    pairs: dict[tuple[int, int], tuple[int, int]] = {}  # (i, j) -> (sugar, lcm)
    deg, divides, lcm = P.deg, P.divides, P.lcm

    def add(h: dict, sug: int):
        nonlocal active, pairs
        lm_h, tail = _make_monic(h, q)
        k = len(basis)
        basis.append((lm_h, tail))
        sugar.append(sug)
        # Gebauer-Moeller update
        cand = []
        for g in active:
            lg = basis[g][0]
            l = lcm(lm_h, lg)
            cand.append((g, l, l == lm_h + lg))
        keep = []
        for idx, (g, l, coprime) in enumerate(cand):
            if coprime:
                keep.append((g, l, True))
                continue
            redundant = False
            for j, (_, l2, _) in enumerate(cand):
                if j != idx and divides(l2, l) and (l2 != l or j < idx):
                    redundant = True
                    break
            if not redundant:
                keep.append((g, l, False))
        new_pairs = {}
        for (i, j), pk in pairs.items():
            l = pk[1]
            if (
                divides(lm_h, l)
                and lcm(basis[i][0], lm_h) != l
                and lcm(basis[j][0], lm_h) != l
            ):
                continue
            new_pairs[(i, j)] = pk
        for g, l, coprime in keep:
            if not coprime:
                sug_p = max(sugar[g] - deg(basis[g][0]), sug - deg(lm_h)) + deg(l)
                new_pairs[(g, k)] = (sug_p, l)
        pairs = new_pairs
        active = [g for g in active if not divides(lm_h, basis[g][0])] + [k]

    def reduce_with_sugar(p, sug):
        current = [sug]
        h = _reduce(p, [basis[g] for g in active], P, q, [sugar[g] for g in active], current)
        return h, current[0]

    def is_unit():
        return deg(basis[active[-1]][0]) == 0

    for f in polys:
        if not f:
            continue
        h, sug = reduce_with_sugar(f, max(deg(m) for m in f))
        if h:
            add(h, sug)
            if is_unit():
                return [basis[active[-1]]]

    while pairs:
        pair = min(pairs, key=lambda p: pairs[p] + p)
        sug = pairs.pop(pair)[0]
        i, j = pair
        h, sug = reduce_with_sugar(_spoly(basis[i], basis[j], P, q), sug)
        if h:
            add(h, sug)
            if is_unit():
                return [basis[active[-1]]]

    # the active set is minimal; tail-reduce for the reduced basis
    elems = [basis[g] for g in active]
    reduced = []
    for idx, (lm, tail) in enumerate(elems):
        others = elems[:idx] + elems[idx + 1 :]
        reduced.append((lm, sorted(_reduce(dict(tail), others, P, q).items(), reverse=True)))
    reduced.sort(key=lambda t: t[0], reverse=True)
    return reduced


# -- public types ------------------------------------------------------------


class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by descending leading monomial."""

    def __init__(self, elements: Sequence[Polynomial], order: MonomialOrder, ring: Ring,
                 reduced: bool = True):
        self.elements = list(elements)
        self.order = order
        self.ring = ring
        self.reduced = reduced

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.elements == other.elements
        )

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def is_zero(self) -> bool:
        return not self.elements

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def _raw(self, P):
        return [_make_monic(P.encode(g.terms), self.ring.q) for g in self.elements]

    def __repr__(self):
        body = ", ".join(render(g) for g in self.elements)
        return f"GroebnerBasis([{body}], {self.order!r})"


class Ideal:
    """An ideal of a polynomial ring given by generators."""

    def __init__(self, generators: Iterable[Polynomial], ring: Ring | None = None):
        gens = [g for g in generators]
        if ring is None:
            if not gens:
                raise ValueError("ring must be given for an ideal without generators")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {ring}")
        seen = set()
        uniq = []
        for g in gens:
            if g.is_zero() or g in seen:
                continue
            seen.add(g)
            uniq.append(g)
        self.ring = ring
        self.generators = uniq
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    def groebner(self, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
        if order not in self._gb:
            self._gb[order] = buchberger(self, order)
        return self._gb[order]

    def contains(self, f: Polynomial) -> bool:
        return self.groebner().contains(f)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __repr__(self):
        body = ", ".join(render(g) for g in self.generators)
        return f"Ideal([{body}]) in {self.ring}"


def buchberger(ideal: Ideal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """The reduced Groebner basis of ``ideal`` under ``order``."""
    ring = ideal.ring
    P = _packer(order, ring.nvars)
    raw = _buchberger_raw([P.encode(g.terms) for g in ideal.generators], P, ring.q)
    elems = [Polynomial(ring, P.decode(_full(e)), _clean=True) for e in raw]
    return GroebnerBasis(elems, order, ring, reduced=True)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring != G.ring:
        raise RingMismatchError(f"{f.ring} vs {G.ring}")
    P = _packer(G.order, f.ring.nvars)
    r = _reduce(P.encode(f.terms), G._raw(P), P, f.ring.q)
    return Polynomial(f.ring, P.decode(r), _clean=True)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial of the monic multiples of f and g."""
    P = _packer(order, f.ring.nvars)
    q = f.ring.q
    s = _spoly(_make_monic(P.encode(f.terms), q), _make_monic(P.encode(g.terms), q), P, q)
    return Polynomial(f.ring, P.decode(s), _clean=True)


def satisfies_buchberger_criterion(G: GroebnerBasis) -> bool:
    """Every S-polynomial of basis pairs reduces to zero."""
    P = _packer(G.order, G.ring.nvars)
    raw = G._raw(P)
    q = G.ring.q
    for i in range(len(raw)):
        for j in range(i + 1, len(raw)):
            if _reduce(_spoly(raw[i], raw[j], P, q), raw, P, q):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    lms = G.leading_monomials()
    for i, g in enumerate(G.elements):
        if g.terms[lms[i]] != 1:
            return False
        for m in g.terms:
            if any(j != i and divides(lm, m) for j, lm in enumerate(lms)):
                return False
    return True


# -- ideal operations --------------------------------------------------------


def subring(ring: Ring, k: int) -> Ring:
    """The ring in all but the first k variables."""
    return Ring(ring.field, ring.variables[k:])


def eliminate(ideal: Ideal, k: int) -> Ideal:
    """I intersected with the subring in the variables after the first k.

    The result carries its reduced GrevLex basis, read off the Block(k) basis.
    """
    ring = ideal.ring
    sub = subring(ring, k)
    if k == 0:
        G = ideal.groebner(GREVLEX)
        out = Ideal(G.elements, ring)
        out._gb[GREVLEX] = G
        return out
    G = ideal.groebner(Block(k))
    kept = []
    for g in G.elements:
        if all(not any(m[:k]) for m in g.terms):
            kept.append(Polynomial(sub, {m[k:]: c for m, c in g.terms.items()}, _clean=True))
    out = Ideal(kept, sub)
    out._gb[GREVLEX] = GroebnerBasis(kept, GREVLEX, sub, reduced=True)
    return out


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name = "_" + name
    return name


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I cap J via elimination of w from w*I + (1-w)*J."""
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal([], ring)
    w = _fresh_name("w", ring.variables)
    big = Ring(ring.field, (w,) + ring.variables)
    shift = list(range(1, ring.nvars + 1))
    wv = big.var(w)
    one_minus_w = big.one() - wv
    gens = [wv * f.embed(big, shift) for f in I.generators]
    gens += [one_minus_w * g.embed(big, shift) for g in J.generators]
    return eliminate(Ideal(gens, big), 1)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    """Balanced pairwise intersection of a nonempty list of ideals."""
    if not ideals:
        raise ValueError("nothing to intersect")
    level = list(ideals)
    while len(level) > 1:
        nxt = [intersect(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        level = nxt
    return level[0]


def colon(I: Ideal, h: Polynomial) -> Ideal:
    """(I : h) = {f : f*h in I}, as (I cap (h)) / h."""
    if h.ring != I.ring:
        raise RingMismatchError(f"{h.ring} vs {I.ring}")
    if h.is_zero():
        raise ZeroDivisionError("colon by the zero polynomial")
    meet = intersect(I, Ideal([h], I.ring))
    quots = []
    for g in meet.generators:
        (qt,), r = divide(g, [h], GREVLEX)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division of {g} by {h} in colon")
        quots.append(qt)
    return Ideal(quots, I.ring)


def ideal_equal(I: Ideal, J: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    if I.ring != J.ring:
        return False
    return I.groebner(order).elements == J.groebner(order).elements


def is_binomial_basis(G: GroebnerBasis) -> bool:
    """Every element is a monomial or a difference of two monomials."""
    q = G.ring.q
    return all(sorted(g.terms.values()) in ([1], [1, q - 1]) for g in G.elements)


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal([ring.one()], ring)


def maximal_homogeneous_ideal(ring: Ring) -> Ideal:
    return Ideal(ring.gens(), ring)
