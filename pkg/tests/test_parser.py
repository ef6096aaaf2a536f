from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from vanish.field import PrimeField
from vanish.parser import (
    ParameterizationSpec,
    ParseError,
    SpecError,
    load_spec,
    parse_polynomial,
    parse_spec,
)
from vanish.polyring import Polynomial, Ring, render

DATA = Path(__file__).resolve().parent.parent / "data"

R5 = Ring(PrimeField(5), ("y1", "y2"))
R2 = Ring(PrimeField(2), ("y1",))


def test_monomial():
    assert parse_polynomial("y1*y2", R5) == R5.monomial((1, 1))


def test_literal_reduced():
    assert parse_polynomial("7", R5) == R5.const(2)


def test_char_two_square():
    y1 = R2.gens()[0]
    assert parse_polynomial("(y1+1)^2", R2) == y1**2 + 1


def test_precedence_and_unary_minus():
    y1, y2 = R5.gens()
    assert parse_polynomial("-y1 + 2*y2^2*y1 - 3", R5) == -y1 + 2 * y2**2 * y1 - 3
    assert parse_polynomial("-(y1 - y2)^2", R5) == -((y1 - y2) ** 2)
    assert parse_polynomial("2^3*y1", R5) == 3 * y1


def test_no_implicit_multiplication():
    with pytest.raises(ParseError, match="unknown identifier 'y1y2'"):
        parse_polynomial("y1y2", R5)
    with pytest.raises(ParseError):
        parse_polynomial("2 y1", R5)


def test_negative_exponent_message():
    with pytest.raises(ParseError, match="denominator") as err:
        parse_polynomial("y1^-2", R5)
    assert err.value.column == 4


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_polynomial("y1 + \n  (y2 * ", R5)
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_polynomial("y1 + w", R5)
    assert (err.value.line, err.value.column) == (1, 6)


@pytest.mark.parametrize("src", ["", "+", "y1 +", "(y1", "y1)", "y1^", "y1^y2", "y1 ** 2", "1.5", "y1 $ 2"])
def test_syntax_errors(src):
    with pytest.raises(ParseError):
        parse_polynomial(src, R5)


def test_exponent_limit():
    with pytest.raises(ParseError, match="limit"):
        parse_polynomial("y1^99999999", R5)


F5 = """\
q = 5
vars = y1, y2
f1 = y1+1 ; g1 = 1
f2 = y2+1 ; g2 = 1
f3 = y1*y2 ; g3 = 1
mode = projective
"""


def test_parse_spec_example():
    spec = parse_spec(F5)
    assert (spec.q, spec.n, spec.s, spec.mode) == (5, 2, 3, "projective")
    assert all(g == R5.one() for g in spec.denominators)
    y1, y2 = spec.ring.gens()
    assert spec.numerators == [y1 + 1, y2 + 1, y1 * y2]


def test_data_file_matches():
    assert load_spec(DATA / "f5_example.spec") == parse_spec(F5)


def test_denominator_defaults_to_one():
    spec = parse_spec("q = 3\nvars = a\nf1 = a\nf2 = a + 1; g2 = a^2 + 1\n")
    assert spec.functions == [("a", "1"), ("a + 1", "a^2 + 1")]


def test_comments_and_semicolons():
    spec = parse_spec("# header\nq = 3 ; vars = x  # trailing\nf1 = x^2 ; mode = affine\n")
    assert spec.mode == "affine" and spec.s == 1


@pytest.mark.parametrize(
    "src, message",
    [
        ("q = 4\nvars = y1\nf1 = y1\n", "not a prime"),
        ("q = 5\nvars = y1\nf1 = y1 ; g1 = y1-y1\n", "zero polynomial"),
        ("q = 5\nvars = y1\nf1 = y2\n", "unknown identifier"),
        ("q = 5\nvars = y1, y1\nf1 = y1\n", "duplicate variable"),
        ("q = 5\nvars = y1\nf1 = y1\nf3 = y1\n", "without gaps"),
        ("q = 5\nvars = y1\nf1 = y1\ng2 = 1\n", "g2 given without f2"),
        ("q = 5\nvars = y1\nf1 = y1\nmode = sideways\n", "unknown mode"),
        ("vars = y1\nf1 = y1\n", "missing key 'q'"),
        ("q = 5\nvars = y1\n", "no functions"),
        ("q = 5\nvars = y1\nf1 = y1\nh1 = 2\n", "unknown key"),
        ("q = 5\nq = 5\n", "duplicate key"),
        ("q = 5\nvars y1\n", "key = value"),
    ],
)
def test_spec_errors(src, message):
    with pytest.raises(SpecError, match=message):
        parse_spec(src)


def test_spec_error_reports_line():
    with pytest.raises(ParseError) as err:
        parse_spec("q = 5\nvars = y1\nf1 = y1 +* 2\n")
    assert err.value.line == 3


def test_spec_text_round_trip():
    spec = parse_spec(F5)
    assert parse_spec(spec.to_text()) == spec
    other = spec.with_mode("affine_algebraic")
    assert other.mode == "affine_algebraic" and other.functions == spec.functions


def test_from_polynomials():
    y1, y2 = R5.gens()
    spec = ParameterizationSpec.from_polynomials([y1, y2 + 1], [R5.one(), y1**2])
    assert spec.rational_functions[1].denominator == y1**2
    with pytest.raises(SpecError):
        ParameterizationSpec.from_polynomials([y1], [R5.zero()])


@st.composite
def polys(draw):
    q = draw(st.sampled_from([2, 3, 5, 7]))
    R = Ring(PrimeField(q), ("a", "b", "c"))
    mons = draw(st.lists(st.tuples(*[st.integers(0, 5)] * 3), max_size=6))
    coefs = draw(st.lists(st.integers(0, q - 1), min_size=len(mons), max_size=len(mons)))
    return Polynomial(R, dict(zip(mons, coefs)))


@given(polys())
def test_render_round_trip(f):
    assert parse_polynomial(render(f), f.ring) == f


ALPHABET = "ab c y1 0123456789+-*^()\n\t$"


@settings(max_examples=300)
@given(st.text(alphabet=ALPHABET, max_size=30))
def test_fuzz_polynomial_is_total(src):
    R = Ring(PrimeField(3), ("a", "b", "y1"))
    try:
        result = parse_polynomial(src, R)
    except ParseError as exc:
        assert exc.line >= 1 and exc.column >= 1
    else:
        assert isinstance(result, Polynomial)


@settings(max_examples=200)
@given(st.text(alphabet="qvarsfgmode=;#,12345 y\n+*", max_size=60))
def test_fuzz_spec_is_total(src):
    try:
        parse_spec(src)
    except SpecError:
        pass
