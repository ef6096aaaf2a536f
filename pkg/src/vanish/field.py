"""Arithmetic in prime fields Z/qZ."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


class FieldMismatchError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_q for a prime q."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not is_prime(self.q):
            raise ValueError(f"q = {self.q!r} is not a prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value % self.q, self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    @property
    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self) -> list[FieldElement]:
        return enumerate_field(self)

    def inv(self, a: int) -> int:
        """Inverse of a residue, as an int."""
        a %= self.q
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
        return _inverse(a, self.q)

    def __repr__(self):
        return f"F_{self.q}"


@lru_cache(maxsize=None)
def _inverse(a: int, q: int) -> int:
    return pow(a, q - 2, q)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"{self.value} is not reduced modulo {self.field.q}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def _make(self, v: int) -> FieldElement:
        return FieldElement(v % self.field.q, self.field)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._make(self.value + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._make(self.value - b)

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._make(b - self.value)

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._make(self.value * b)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return self._make(pow(self.value, n, self.field.q))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._make(self.value * self.field.inv(b))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return str(self.value)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Apply ``op`` in {'add', 'sub', 'mul'} to two elements of one field."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def enumerate_field(field: PrimeField) -> list[FieldElement]:
    """All elements of the field in ascending residue order."""
    return [FieldElement(v, field) for v in range(field.q)]
