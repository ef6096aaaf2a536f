"""Expression parser and the parameterization file format.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' natural)?
    base   := natural | identifier | '(' expr ')'

There is no implicit multiplication: ``y1y2`` is one identifier.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from vanish.field import PrimeField, is_prime
from vanish.polyring import Polynomial, RationalFunction, Ring, render

MODES = ("projective", "projective_algebraic", "affine", "affine_algebraic")
MAX_EXPONENT = 4096


class SpecError(ValueError):
    """Invalid parameterization input."""


class ParseError(SpecError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()])"
)


def _tokenize(src: str, line: int = 1, col0: int = 1):
    tokens = []
    pos = 0
    ln, col = line, col0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", ln, col)
        text = m.group()
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, text, ln, col))
        for ch in text:
            if ch == "\n":
                ln, col = ln + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(("end", "", ln, col))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: Ring, line: int = 1, column: int = 1):
        self.ring = ring
        self.tokens = _tokenize(src, line, column)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], tok[3])

    def expect(self, text):
        tok = self.next()
        if tok[1] != text:
            found = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise self.error(f"expected {text!r}, found {found}", tok)
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return result

    def expr(self) -> Polynomial:
        if self.peek()[1] == "-":
            self.next()
            result = -self.term()
        else:
            result = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self.peek()[1] == "*":
            self.next()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        base = self.base()
        if self.peek()[1] == "^":
            self.next()
            tok = self.next()
            if tok[1] == "-":
                raise self.error(
                    "negative exponents are not allowed; move the factor to the denominator",
                    tok,
                )
            if tok[0] != "num":
                raise self.error("exponent must be a natural number", tok)
            if int(tok[1]) > MAX_EXPONENT:
                raise self.error(f"exponent above the limit of {MAX_EXPONENT}", tok)
            return base ** int(tok[1])
        return base

    def base(self) -> Polynomial:
        tok = self.next()
        kind, text = tok[0], tok[1]
        if kind == "num":
            return self.ring.const(int(text))
        if kind == "ident":
            if text not in self.ring.variables:
                raise self.error(f"unknown identifier {text!r}", tok)
            return self.ring.var(text)
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        found = repr(text) if kind != "end" else "end of input"
        raise self.error(f"expected a number, variable or '(', found {found}", tok)


def parse_polynomial(src: str, ring: Ring, line: int = 1, column: int = 1) -> Polynomial:
    """Parse ``src`` into a polynomial of ``ring``; literals are reduced mod q."""
    return _Parser(src, ring, line, column).parse()


@dataclass
class ParameterizationSpec:
    """Rational functions f_i/g_i in K[y_1..y_n] plus a target set kind."""

    q: int
    parameter_variables: list
    functions: list  # (numerator source, denominator source) pairs
    mode: str = "projective"
    _parsed: list = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        validate_spec(self)

    @property
    def s(self) -> int:
        return len(self.functions)

    @property
    def n(self) -> int:
        return len(self.parameter_variables)

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.q)

    @property
    def ring(self) -> Ring:
        return Ring(self.field, tuple(self.parameter_variables))

    @property
    def rational_functions(self) -> list[RationalFunction]:
        if self._parsed is None:
            self._parsed = _parse_functions(self)
        return self._parsed

    @property
    def numerators(self) -> list[Polynomial]:
        return [r.numerator for r in self.rational_functions]

    @property
    def denominators(self) -> list[Polynomial]:
        return [r.denominator for r in self.rational_functions]

    def with_mode(self, mode: str) -> ParameterizationSpec:
        return ParameterizationSpec(self.q, list(self.parameter_variables), list(self.functions), mode)

    def to_text(self) -> str:
        lines = [f"q = {self.q}", "vars = " + ", ".join(self.parameter_variables)]
        for i, (f, g) in enumerate(self.functions, 1):
            lines.append(f"f{i} = {f} ; g{i} = {g}")
        lines.append(f"mode = {self.mode}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_polynomials(
        cls,
        numerators: Sequence[Polynomial],
        denominators: Sequence[Polynomial] | None = None,
        mode: str = "projective",
    ) -> ParameterizationSpec:
        if not numerators:
            raise SpecError("need at least one function")
        ring = numerators[0].ring
        if denominators is None:
            denominators = [ring.one()] * len(numerators)
        if len(denominators) != len(numerators):
            raise SpecError("numerators and denominators differ in number")
        funcs = [(render(f), render(g)) for f, g in zip(numerators, denominators)]
        return cls(ring.q, list(ring.variables), funcs, mode)


def _parse_functions(spec: ParameterizationSpec) -> list[RationalFunction]:
    ring = spec.ring
    out = []
    for i, (fsrc, gsrc) in enumerate(spec.functions, 1):
        f = parse_polynomial(fsrc, ring)
        g = parse_polynomial(gsrc, ring)
        if g.is_zero():
            raise SpecError(f"denominator g{i} = {gsrc!r} is the zero polynomial")
        out.append(RationalFunction(f, g))
    return out


def validate_spec(spec: ParameterizationSpec) -> None:
    if not isinstance(spec.q, int) or not is_prime(spec.q):
        raise SpecError(f"q = {spec.q} is not a prime")
    names = list(spec.parameter_variables)
    if not names:
        raise SpecError("at least one parameter variable is required")
    seen = set()
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
            raise SpecError(f"invalid variable name {v!r}")
        if v in seen:
            raise SpecError(f"duplicate variable {v!r}")
        seen.add(v)
    if not spec.functions:
        raise SpecError("at least one function f1 is required")
    if spec.mode not in MODES:
        raise SpecError(f"unknown mode {spec.mode!r}; expected one of {', '.join(MODES)}")
    spec._parsed = _parse_functions(spec)


_FUNC_KEY = re.compile(r"([fg])(\d+)")


def parse_spec(src: str) -> ParameterizationSpec:
    """Read the ``key = value`` parameterization format.

    Assignments are separated by newlines or ';'; '#' starts a comment.
    """
    entries: dict[str, tuple[str, int, int]] = {}
    for lineno, raw in enumerate(src.splitlines(), 1):
        line = raw.split("#", 1)[0]
        offset = 0
        for chunk in line.split(";"):
            col = offset + 1
            offset += len(chunk) + 1
            if not chunk.strip():
                continue
            if "=" not in chunk:
                raise ParseError(f"expected 'key = value', got {chunk.strip()!r}", lineno, col)
            key, value = chunk.split("=", 1)
            key = key.strip()
            vcol = col + len(chunk.split("=", 1)[0]) + 1
            vcol += len(value) - len(value.lstrip())
            if key in entries:
                raise ParseError(f"duplicate key {key!r}", lineno, col)
            entries[key] = (value.strip(), lineno, vcol)

    if "q" not in entries:
        raise SpecError("missing key 'q'")
    qtext, ln, col = entries.pop("q")
    if not qtext.isdigit():
        raise ParseError(f"q must be a natural number, got {qtext!r}", ln, col)
    q = int(qtext)
    if not is_prime(q):
        raise SpecError(f"q = {q} is not a prime")

    if "vars" not in entries:
        raise SpecError("missing key 'vars'")
    vtext, ln, col = entries.pop("vars")
    names = [v.strip() for v in vtext.split(",") if v.strip()]
    seen = set()
    for v in names:
        if v in seen:
            raise SpecError(f"duplicate variable {v!r}")
        seen.add(v)

    mode = entries.pop("mode", ("projective", 0, 0))[0]

    nums: dict[int, tuple] = {}
    dens: dict[int, tuple] = {}
    for key, val in entries.items():
        m = _FUNC_KEY.fullmatch(key)
        if m is None:
            raise ParseError(f"unknown key {key!r}", val[1], 1)
        (nums if m.group(1) == "f" else dens)[int(m.group(2))] = val
    s = len(nums)
    if s == 0:
        raise SpecError("no functions given (expected keys f1, f2, ...)")
    if sorted(nums) != list(range(1, s + 1)):
        raise SpecError(f"function keys must be f1..f{s} without gaps")
    for i in dens:
        if i not in nums:
            raise SpecError(f"g{i} given without f{i}")

    try:
        ring = Ring(PrimeField(q), tuple(names))
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    functions = []
    for i in range(1, s + 1):
        ftext, fl, fc = nums[i]
        gtext, gl, gc = dens.get(i, ("1", fl, fc))
        f = parse_polynomial(ftext, ring, fl, fc)
        g = parse_polynomial(gtext, ring, gl, gc)
        if g.is_zero():
            raise SpecError(f"denominator g{i} = {gtext!r} is the zero polynomial")
        functions.append((ftext, gtext))
    return ParameterizationSpec(q, names, functions, mode)


def load_spec(path) -> ParameterizationSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_spec(fh.read())
