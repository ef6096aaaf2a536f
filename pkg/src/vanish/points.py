"""Brute-force enumeration of parameterized sets and the point-ideal oracle."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from vanish.groebner import Ideal, intersect_all
from vanish.parser import ParameterizationSpec
from vanish.polyring import Polynomial, RationalFunction, Ring
from vanish.field import PrimeField

DEFAULT_GRID_CAP = 10**7
_CHUNK = 1 << 18

PROJECTIVE_KINDS = ("projective", "projective_algebraic")
AFFINE_KINDS = ("affine", "affine_algebraic")


class EnumerationCapError(RuntimeError):
    """The grid K^n is larger than the configured enumeration cap."""


def normalize_projective(alpha: Sequence[int], q: int) -> tuple:
    """Scale so the leftmost nonzero coordinate is 1."""
    alpha = [int(a) % q for a in alpha]
    for a in alpha:
        if a:
            inv = pow(a, q - 2, q)
            return tuple(x * inv % q for x in alpha)
    raise ValueError("the zero vector is not a projective point")


@dataclass(frozen=True)
class PointSet:
    """Deduplicated, sorted points of one of the four parameterized sets.

    Projective points are stored by their normalized representative.
    """

    kind: str
    q: int
    s: int
    points: tuple

    @property
    def projective(self) -> bool:
        return self.kind in PROJECTIVE_KINDS

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        p = tuple(int(x) % self.q for x in p)
        if self.projective:
            if not any(p):
                return False
            p = normalize_projective(p, self.q)
        return p in set(self.points)

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(len(self.points), self.s)

    @classmethod
    def from_points(cls, points, q: int, kind: str = "projective") -> PointSet:
        pts = {tuple(int(x) % q for x in p) for p in points}
        if kind in PROJECTIVE_KINDS:
            pts = {normalize_projective(p, q) for p in pts if any(p)}
        s = len(next(iter(pts))) if pts else 0
        if any(len(p) != s for p in pts):
            raise ValueError("points have different lengths")
        return cls(kind, q, s, tuple(sorted(pts)))


def _eval_grid(f: Polynomial, X: np.ndarray, q: int) -> np.ndarray:
    """Evaluate f at every row of X (entries in [0, q))."""
    n = X.shape[0]
    total = np.zeros(n, dtype=np.int64)
    for m, c in f.terms.items():
        v = np.full(n, c, dtype=np.int64)
        for i, e in enumerate(m):
            if e:
                v = v * _pow_table(q, e)[X[:, i]] % q
        total += v
    return total % q


_POW_CACHE: dict = {}


def _pow_table(q: int, e: int) -> np.ndarray:
    t = _POW_CACHE.get((q, e))
    if t is None:
        t = np.array([pow(x, e, q) for x in range(q)], dtype=np.int64)
        _POW_CACHE[(q, e)] = t
    return t


def _grid_chunk(start: int, stop: int, n: int, q: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    cols = [(idx // q ** (n - 1 - i)) % q for i in range(n)]
    return np.stack(cols, axis=1) if cols else np.zeros((stop - start, 0), dtype=np.int64)


def _chunk_points(funcs, start, stop, n, q, kind) -> np.ndarray:
    X = _grid_chunk(start, stop, n, q)
    F = np.stack([_eval_grid(r.numerator, X, q) for r in funcs], axis=1)
    G = np.stack([_eval_grid(r.denominator, X, q) for r in funcs], axis=1)
    ok = np.all(G != 0, axis=1)
    if kind in ("projective_algebraic", "affine_algebraic"):
        ok &= np.all(F != 0, axis=1)
    elif kind == "projective":
        ok &= np.any(F != 0, axis=1)
    F, G = F[ok], G[ok]
    inv = np.array([0] + [pow(x, q - 2, q) for x in range(1, q)], dtype=np.int64)
    P = F * inv[G] % q
    if kind in PROJECTIVE_KINDS and len(P):
        lead = P[np.arange(len(P)), np.argmax(P != 0, axis=1)]
        P = P * inv[lead][:, None] % q
    return P


def enumerate_parameterized(
    funcs: Sequence[RationalFunction],
    kind: str = "projective",
    cap: int = DEFAULT_GRID_CAP,
    jobs: int = 1,
) -> PointSet:
    """Evaluate rational functions at every x in K^n and collect the image set."""
    if kind not in PROJECTIVE_KINDS + AFFINE_KINDS:
        raise ValueError(f"unknown set kind {kind!r}")
    ring = funcs[0].ring
    q, n, s = ring.q, ring.nvars, len(funcs)
    total = q**n
    if total > cap:
        raise EnumerationCapError(
            f"grid K^{n} over F_{q} has {total} points, above the cap of {cap}"
        )
    bounds = [(a, min(a + _CHUNK, total)) for a in range(0, total, _CHUNK)]
    if jobs > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(lambda b: _chunk_points(funcs, b[0], b[1], n, q, kind), bounds))
    else:
        parts = [_chunk_points(funcs, a, b, n, q, kind) for a, b in bounds]
    P = np.concatenate(parts, axis=0) if parts else np.zeros((0, s), dtype=np.int64)
    if len(P):
        P = np.unique(P, axis=0)
    pts = tuple(tuple(int(x) for x in row) for row in P)
    return PointSet(kind, q, s, pts)


def enumerate_set(
    spec: ParameterizationSpec, kind: str | None = None, cap: int = DEFAULT_GRID_CAP, jobs: int = 1
) -> PointSet:
    """The set of the given kind (default: the spec's mode) parameterized by ``spec``."""
    return enumerate_parameterized(spec.rational_functions, kind or spec.mode, cap, jobs)


# -- point ideals -------------------------------------------------------------


def target_ring(field: PrimeField, s: int) -> Ring:
    return Ring(field, tuple(f"t{i}" for i in range(1, s + 1)))


def point_ideal(P: Sequence[int], ring: Ring) -> Ideal:
    """Homogeneous vanishing ideal of the projective point [P]."""
    q = ring.q
    alpha = normalize_projective(P, q)
    k = next(i for i, a in enumerate(alpha) if a)
    t = ring.gens()
    gens = [t[i].scale(alpha[k]) - t[k].scale(alpha[i]) for i in range(len(alpha)) if i != k]
    return Ideal(gens, ring)


def affine_point_ideal(P: Sequence[int], ring: Ring) -> Ideal:
    t = ring.gens()
    return Ideal([ti - int(a) for ti, a in zip(t, P)], ring)


def oracle_vanishing_ideal(Y: PointSet, ring: Ring | None = None) -> Ideal:
    """Intersection of the ideals of the individual points of Y."""
    if not Y.points:
        raise ValueError("the vanishing ideal oracle needs a nonempty point set")
    if ring is None:
        ring = target_ring(PrimeField(Y.q), Y.s)
    make = point_ideal if Y.projective else affine_point_ideal
    return intersect_all([make(P, ring) for P in Y.points])


# -- monoids and Laurent parameterizations ----------------------------------


def is_multiplicative_monoid(Y: PointSet) -> bool:
    """Whether Y together with [0] is closed under componentwise product
    and contains the identity [1:...:1]."""
    q = Y.q
    pts = set(Y.points)
    if (1,) * Y.s not in pts:
        return False
    for a, b in itertools.combinations_with_replacement(Y.points, 2):
        prod = tuple(x * y % q for x, y in zip(a, b))
        if any(prod) and normalize_projective(prod, q) not in pts:
            return False
    return True


class NotAMonoidError(ValueError):
    pass


def monoid_to_laurent_parameterization(
    Y: PointSet, include_identity: bool = True, verify: bool = True, cap: int = DEFAULT_GRID_CAP
) -> list[RationalFunction]:
    """Laurent-monomial rational functions whose projective set is Y.

    Y must consist of 0/1 points and Y + [0] must be a monoid. With points
    a_1..a_m, coordinate k is the product over i of y_i^(q-1) when a_ik = 1
    and of z_i^(q-1)/y_i^(q-1) when a_ik = 0, in 2m variables. Dropping the
    identity point (``include_identity=False``) gives a shorter, equivalent
    parameterization. The result is checked by re-enumeration.
    """
    if not Y.projective:
        raise ValueError("a projective point set is required")
    if any(x not in (0, 1) for p in Y.points for x in p):
        raise ValueError("every point must have a 0/1 representative")
    if not is_multiplicative_monoid(Y):
        raise NotAMonoidError("Y together with [0] is not a multiplicative monoid")
    q = Y.q
    pts = list(Y.points)
    if not include_identity:
        pts = [p for p in pts if p != (1,) * Y.s]
        if not pts:
            pts = list(Y.points)
    m = len(pts)
    names = tuple(f"y{i}" for i in range(1, m + 1)) + tuple(f"z{i}" for i in range(1, m + 1))
    ring = Ring(PrimeField(q), names)
    funcs = []
    for k in range(Y.s):
        num = [0] * (2 * m)
        den = [0] * (2 * m)
        for i, a in enumerate(pts):
            if a[k] == 1:
                num[i] += q - 1
            else:
                num[m + i] += q - 1
                den[i] += q - 1
        funcs.append(RationalFunction(ring.monomial(num), ring.monomial(den)))
    if verify:
        got = enumerate_parameterized(funcs, "projective", cap)
        if got.points != Y.points:
            raise AssertionError(f"constructed parameterization gives {got.points}, not {Y.points}")
    return funcs
