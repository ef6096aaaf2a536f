"""Projective Reed-Muller-type codes over a point set and their parameters."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from vanish.invariants import regularity
from vanish.parser import ParameterizationSpec
from vanish.points import DEFAULT_GRID_CAP, PROJECTIVE_KINDS, PointSet, enumerate_set
from vanish.polyring import all_monomials
from vanish.vanishing import Status, vanishing_ideal

DEFAULT_CLASS_CAP = 5_000_000
_BLOCK = 1 << 16


@dataclass(frozen=True)
class NotComputed:
    reason: str
    classes: int | None = None

    def __str__(self):
        return "-"


def row_echelon_mod_p(M: np.ndarray, q: int) -> np.ndarray:
    """Reduced row echelon form over F_q; returns the nonzero rows."""
    A = np.array(M, dtype=np.int64) % q
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = A[r] * pow(int(A[r, c]), q - 2, q) % q
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % q
        r += 1
    return A[:r]


def rank_mod_p(M: np.ndarray, q: int) -> int:
    return len(row_echelon_mod_p(M, q))


@dataclass
class EvaluationCode:
    q: int
    degree: int
    points: PointSet
    monomials: list
    generator_rows: np.ndarray  # one row per degree-d monomial
    basis: np.ndarray  # k x m, row reduced
    min_distance: int | NotComputed | None = field(default=None)

    @property
    def length(self) -> int:
        return self.generator_rows.shape[1]

    @property
    def dimension(self) -> int:
        return self.basis.shape[0]


def build_code(Y: PointSet, d: int) -> EvaluationCode:
    """The image of S_d under evaluation at the normalized points of Y.

    Each representative has leftmost nonzero coordinate 1, so dividing by
    t_j^d at that coordinate is the identity and evaluation is plain.
    """
    if not Y.projective:
        raise ValueError("codes are built over projective point sets")
    if len(Y) == 0:
        raise ValueError("cannot build a code over the empty set")
    if d < 1:
        raise ValueError("degree must be at least 1")
    q = Y.q
    P = Y.as_array()
    monos = all_monomials(Y.s, d)
    rows = np.ones((len(monos), len(Y)), dtype=np.int64)
    for r, m in enumerate(monos):
        for i, e in enumerate(m):
            if e:
                rows[r] = rows[r] * (P[:, i] ** e % q) % q
    return EvaluationCode(q, d, Y, monos, rows, row_echelon_mod_p(rows, q))


def projective_class_count(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def _block_min(G: np.ndarray, j: int, start: int, stop: int, q: int) -> int:
    tail = G[j + 1 :]
    r = tail.shape[0]
    idx = np.arange(start, stop, dtype=np.int64)
    if r:
        digits = np.stack([(idx // q ** (r - 1 - i)) % q for i in range(r)], axis=1)
        words = (digits @ tail + G[j]) % q
    else:
        words = G[j][None, :] % q
    return int(np.count_nonzero(words, axis=1).min())


def minimum_distance(
    code: EvaluationCode,
    cap: int = DEFAULT_CLASS_CAP,
    reg: int | None = None,
    jobs: int = 1,
) -> int | NotComputed:
    """Smallest Hamming weight of a nonzero codeword.

    If ``reg`` is given and d >= reg the answer is 1. Otherwise every message
    whose first nonzero entry is 1 is enumerated (scaling does not change
    weight); above ``cap`` such classes the result is NotComputed.
    """
    if reg is not None and code.degree >= reg:
        return 1
    q, k = code.q, code.dimension
    classes = projective_class_count(q, k)
    if classes > cap:
        return NotComputed(f"{classes} message classes exceed the cap of {cap}", classes)
    G = code.basis
    tasks = []
    for j in range(k):
        total = q ** (k - j - 1)
        tasks += [(j, a, min(a + _BLOCK, total)) for a in range(0, total, _BLOCK)]
    best = code.length
    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            best = min(ex.map(lambda t: _block_min(G, t[0], t[1], t[2], q), tasks))
    else:
        for j, a, b in tasks:
            best = min(best, _block_min(G, j, a, b, q))
            if best == 1:
                break
    return best


@dataclass
class TableRow:
    d: int
    length: int
    dimension: int
    min_distance: int | NotComputed


def parameter_table(
    spec: ParameterizationSpec,
    d_range: Iterable[int],
    kind: str | None = None,
    cap: int = DEFAULT_CLASS_CAP,
    grid_cap: int = DEFAULT_GRID_CAP,
    use_regularity: bool = True,
    jobs: int = 1,
) -> list[TableRow]:
    """Length, dimension and minimum distance of C_Y(d) for each d."""
    kind = kind or spec.mode
    if kind not in PROJECTIVE_KINDS:
        raise ValueError(f"codes need a projective set, not {kind!r}")
    Y = enumerate_set(spec, kind, grid_cap, jobs)
    if len(Y) == 0:
        raise ValueError("the parameterized set is empty")
    reg = None
    if use_regularity:
        res = vanishing_ideal(spec, kind)
        if res.status is Status.PROPER:
            reg = regularity(res.ideal)
    rows = []
    for d in d_range:
        code = build_code(Y, d)
        delta = minimum_distance(code, cap, reg, jobs)
        code.min_distance = delta
        rows.append(TableRow(d, code.length, code.dimension, delta))
    return rows
