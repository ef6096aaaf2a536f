"""Sparse multivariate polynomials over a prime field.

Monomials are exponent tuples, one entry per ring variable. A polynomial
is a dict mapping monomials to nonzero residues in [1, q-1].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from vanish.field import FieldElement, PrimeField

Monomial = tuple  # tuple[int, ...]


class RingMismatchError(ValueError):
    pass


# -- monomial orders ---------------------------------------------------------


def _grevlex_key(e: Sequence[int]) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e))


class MonomialOrder:
    """A term order. ``key(m)`` is increasing in the order.

    ``key`` returns a flat tuple of ints so that negating it componentwise
    reverses the order (used by heap-based reduction).
    """

    name = "order"

    def key(self, m: Monomial) -> tuple:
        raise NotImplementedError

    def compare(self, u: Monomial, v: Monomial) -> int:
        """Return -1, 0 or 1 as u <, =, > v."""
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))

    def __repr__(self):
        return self.name


class Lex(MonomialOrder):
    name = "Lex"

    def key(self, m):
        return m


class GrevLex(MonomialOrder):
    name = "GrevLex"

    def key(self, m):
        return _grevlex_key(m)


class Block(MonomialOrder):
    """Elimination order for the first ``k`` variables.

    Both blocks are compared by GrevLex, the eliminated block first.
    """

    def __init__(self, k: int):
        if k < 0:
            raise ValueError("block size must be non-negative")
        self.k = k

    @property
    def name(self):
        return f"Block({self.k})"

    def key(self, m):
        k = self.k
        return _grevlex_key(m[:k]) + _grevlex_key(m[k:])


LEX = Lex()
GREVLEX = GrevLex()


def compare(order: MonomialOrder, u: Monomial, v: Monomial) -> int:
    return order.compare(u, v)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mono_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a if a > b else b for a, b in zip(u, v))


def mono_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def mono_div(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(u, v))


# -- rings -------------------------------------------------------------------


@dataclass(frozen=True)
class Ring:
    """Polynomial ring K[variables] over a prime field K."""

    field: PrimeField
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if any(not v for v in self.variables):
            raise ValueError("empty variable name")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: int) -> Polynomial:
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self}")
        return Polynomial(self, {exps: coeff})

    def var(self, name: str) -> Polynomial:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.variables]

    def __call__(self, src) -> Polynomial:
        if isinstance(src, int):
            return self.const(src)
        if isinstance(src, str):
            from vanish.parser import parse_polynomial

            return parse_polynomial(src, self)
        raise TypeError(f"cannot convert {type(src).__name__} to a polynomial")

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}]"


RingDescriptor = Ring


# -- polynomials -------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial. Coefficients are stored as residues."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict, _clean: bool = False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            q = ring.q
            n = ring.nvars
            clean = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n:
                    raise ValueError(f"monomial {m} has wrong length for {ring}")
                c = int(c) % q
                if c:
                    clean[m] = c
            self.terms = clean
        self._hash = None

    # construction helpers

    def _new(self, terms: dict) -> Polynomial:
        return Polynomial(self.ring, terms, _clean=True)

    def _check(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.const(int(other))
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        q = self.ring.q
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % q
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        q = self.ring.q
        return self._new({m: q - c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        q = self.ring.q
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % q
        return self._new({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> Polynomial:
        c %= self.ring.q
        if c == 0:
            return self.ring.zero()
        q = self.ring.q
        return self._new({m: (a * c) % q for m, a in self.terms.items()})

    def mul_term(self, m: Monomial, c: int) -> Polynomial:
        q = self.ring.q
        return self._new(
            {tuple(a + b for a, b in zip(e, m)): (a * c) % q for e, a in self.terms.items()}
        )

    # comparison

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[Monomial, int]]:
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> int:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient(order)))

    def homogeneous_components(self) -> list[Polynomial]:
        """Graded pieces in increasing degree."""
        by_deg: dict[int, dict] = {}
        for m, c in self.terms.items():
            by_deg.setdefault(sum(m), {})[m] = c
        return [self._new(by_deg[d]) for d in sorted(by_deg)]

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    # evaluation and substitution

    def evaluate(self, point: Sequence) -> FieldElement:
        if len(point) != self.ring.nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables"
            )
        q = self.ring.q
        x = [int(v) % q for v in point]
        total = 0
        for m, c in self.terms.items():
            v = c
            for xi, e in zip(x, m):
                if e:
                    v = v * pow(xi, e, q) % q
            total += v
        return FieldElement(total % q, self.ring.field)

    __call__ = evaluate

    def embed(self, ring: Ring, positions: Sequence[int]) -> Polynomial:
        """Map variable i of this ring to variable positions[i] of ``ring``."""
        if ring.field != self.ring.field:
            raise RingMismatchError("fields differ")
        n = ring.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, a in enumerate(m):
                if a:
                    e[positions[i]] += a
            out[tuple(e)] = c
        return Polynomial(ring, out, _clean=True)

    def to_ring(self, ring: Ring) -> Polynomial:
        """Embed by variable name."""
        return self.embed(ring, [ring.index(v) for v in self.ring.variables])

    # rendering

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r})"


def render(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    """Canonical expression string, terms in descending order."""
    if not f.terms:
        return "0"
    names = f.ring.variables
    parts = []
    for m, c in f.sorted_terms(order):
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def evaluate(f: Polynomial, point: Sequence) -> FieldElement:
    return f.evaluate(point)


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()


def homogeneous_components(f: Polynomial) -> list[Polynomial]:
    return f.homogeneous_components()


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = GREVLEX
) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division with remainder.

    Returns quotients and remainder with f = sum(q_i * d_i) + r, where no
    term of r is divisible by any leading monomial of the divisors.
    """
    ring = f.ring
    for d in divisors:
        if d.ring != ring:
            raise RingMismatchError(f"{d.ring} vs {ring}")
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
    q = ring.q
    key = order.key
    lead = []
    for d in divisors:
        lm = d.leading_monomial(order)
        lead.append((lm, ring.field.inv(d.terms[lm]), d))
    quots: list[dict] = [{} for _ in divisors]
    rem: dict = {}
    p = dict(f.terms)
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc_inv, d) in enumerate(lead):
            if divides(lm, m):
                t = mono_div(m, lm)
                a = c * lc_inv % q
                quots[i][t] = (quots[i].get(t, 0) + a) % q
                for e, b in d.terms.items():
                    e2 = mono_mul(e, t)
                    v = (p.get(e2, 0) - a * b) % q
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[m] = c
            del p[m]
    return [Polynomial(ring, qd) for qd in quots], Polynomial(ring, rem, _clean=True)


@dataclass(frozen=True)
class RationalFunction:
    """A quotient f/g with g nonzero. No cancellation is attempted."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if self.numerator.ring != self.denominator.ring:
            raise RingMismatchError("numerator and denominator live in different rings")
        if self.denominator.is_zero():
            raise ZeroDivisionError("denominator is the zero polynomial")

    @property
    def ring(self) -> Ring:
        return self.numerator.ring

    def evaluate(self, point: Sequence) -> FieldElement | None:
        """Value at ``point``, or None where the denominator vanishes."""
        g = self.denominator.evaluate(point)
        if not g:
            return None
        return self.numerator.evaluate(point) / g

    def __str__(self):
        num, den = render(self.numerator), render(self.denominator)
        if den == "1":
            return num
        return f"({num})/({den})"


def all_monomials(nvars: int, d: int) -> list[Monomial]:
    """All exponent vectors of total degree d, in descending lex order."""
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in all_monomials(nvars - 1, d - a):
            out.append((a,) + rest)
    return out


def product(polys: Iterable[Polynomial], ring: Ring) -> Polynomial:
    out = ring.one()
    for p in polys:
        out = out * p
    return out
