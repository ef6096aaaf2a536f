import random

import pytest

from randspec import random_spec
from vanish.groebner import Ideal, colon, ideal_equal
from vanish.invariants import degree, regularity
from vanish.parser import ParameterizationSpec, parse_spec
from vanish.points import enumerate_set, oracle_vanishing_ideal
from vanish.polyring import product
from vanish.vanishing import (
    Status,
    affine_algebraic_vanishing_ideal,
    affine_vanishing_ideal,
    colon_to_algebraic,
    polynomial_shortcut,
    projective_algebraic_vanishing_ideal,
    projective_vanishing_ideal,
    target_ring_of,
    vanishing_ideal,
)

F5 = "q = 5\nvars = y1, y2\nf1 = y1+1\nf2 = y2+1\nf3 = y1*y2\n"


def spec(text, mode="projective"):
    return parse_spec(text + f"mode = {mode}\n")


def gens(result):
    return [str(g) for g in result.ideal.groebner().elements]


@pytest.fixture(scope="module")
def f5():
    return spec(F5)


@pytest.fixture(scope="module")
def f5_projective(f5):
    return projective_vanishing_ideal(f5)


def test_projective_example(f5_projective):
    I = f5_projective.ideal
    assert f5_projective.status is Status.PROPER
    assert (degree(I), regularity(I)) == (19, 5)


def test_construction_record(f5_projective):
    c = f5_projective.construction
    assert c.ring.variables == ("y0", "y1", "y2", "z", "t1", "t2", "t3")
    assert c.eliminated == 4
    y0, y1, y2, z, t1, t2, t3 = c.ring.gens()
    assert c.generators == [
        t1 - (y1 + 1) * z,
        t2 - (y2 + 1) * z,
        t3 - y1 * y2 * z,
        y1**5 - y1,
        y2**5 - y2,
        y0 - 1,
    ]


def test_two_points():
    r = projective_vanishing_ideal(spec("q = 2\nvars = y1\nf1 = y1\nf2 = y1+1\n"))
    assert gens(r) == ["t1*t2"]


def test_denominator_vanishing_everywhere():
    text = "q = 2\nvars = y1\nf1 = y1 ; g1 = y1^2 - y1\nf2 = 1\n"
    assert projective_vanishing_ideal(spec(text)).status is Status.EMPTY_SET
    r = affine_vanishing_ideal(spec(text, "affine"))
    assert r.status is Status.EMPTY_SET and r.ideal.is_unit()


def test_projective_algebraic_example(f5):
    r = projective_algebraic_vanishing_ideal(f5)
    assert (degree(r.ideal), regularity(r.ideal)) == (6, 2)
    w = projective_algebraic_vanishing_ideal(f5, form="w")
    assert w.construction.ring.variables[:2] == ("y0", "w")
    assert ideal_equal(r.ideal, w.ideal)


def test_all_ones():
    r = projective_algebraic_vanishing_ideal(spec("q = 3\nvars = y1\nf1 = 1\nf2 = 1\nf3 = 1\n"))
    assert gens(r) == ["t1 + 2*t3", "t2 + 2*t3"]
    S = target_ring_of(spec("q = 3\nvars = y1\nf1 = 1\nf2 = 1\nf3 = 1\n"))
    t1, t2, t3 = S.gens()
    assert ideal_equal(r.ideal, Ideal([t2 - t1, t3 - t1], S))


def test_affine_examples():
    r = affine_vanishing_ideal(spec("q = 2\nvars = y1\nf1 = y1\n", "affine"))
    assert gens(r) == ["t1^2 + t1"] and degree(r.ideal) == 2


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2])
def test_identity_parameterization(q, n):
    names = ", ".join(f"y{i}" for i in range(1, n + 1))
    funcs = "".join(f"f{i} = y{i}\n" for i in range(1, n + 1))
    r = affine_vanishing_ideal(spec(f"q = {q}\nvars = {names}\n{funcs}", "affine"))
    S = r.ring
    assert r.ideal.groebner().elements == [t**q - t for t in S.gens()]


def test_affine_algebraic_examples():
    r = affine_algebraic_vanishing_ideal(
        spec("q = 2\nvars = y1\nf1 = y1\nf2 = y1+1\n", "affine_algebraic")
    )
    assert r.status is Status.EMPTY_SET
    r = affine_algebraic_vanishing_ideal(spec("q = 3\nvars = y1\nf1 = y1\n", "affine_algebraic"))
    assert gens(r) == ["t1^2 + 2"]
    r = affine_algebraic_vanishing_ideal(spec("q = 5\nvars = y1\nf1 = 1\nf2 = 1\n", "affine_algebraic"))
    assert gens(r) == ["t1 + 4", "t2 + 4"]


def test_origin_only():
    r = affine_vanishing_ideal(spec("q = 2\nvars = y1, y2\nf1 = y1^2 - y1\nf2 = 0\n", "affine"))
    assert r.status is Status.ORIGIN_ONLY
    assert gens(r) == ["t1", "t2"]


def test_colon_to_algebraic(f5, f5_projective):
    r = colon_to_algebraic(f5_projective, f5)
    assert r.hypothesis is True and degree(r.ideal) == 6
    two = spec("q = 2\nvars = y1\nf1 = y1\nf2 = y1+1\n")
    r = colon_to_algebraic(projective_vanishing_ideal(two), two)
    assert r.ideal.is_unit() and r.hypothesis is False and r.notes


def test_colon_to_algebraic_rejects_other_modes(f5):
    with pytest.raises(ValueError):
        colon_to_algebraic(projective_algebraic_vanishing_ideal(f5))


def test_polynomial_shortcut(f5, f5_projective):
    a = polynomial_shortcut(f5)
    assert "y0" not in a.construction.ring.variables
    assert ideal_equal(a.ideal, f5_projective.ideal)
    b = polynomial_shortcut(f5, algebraic=True)
    assert degree(b.ideal) == 6
    single = polynomial_shortcut(spec("q = 3\nvars = y1\nf1 = 1\n"))
    assert single.ideal.groebner().is_zero()


def test_polynomial_shortcut_needs_trivial_denominators():
    with pytest.raises(ValueError):
        polynomial_shortcut(spec("q = 3\nvars = y1\nf1 = 1 ; g1 = y1\n"))


def test_mode_dispatch(f5):
    for mode in ("projective", "projective_algebraic", "affine", "affine_algebraic"):
        assert vanishing_ideal(f5, mode).mode == mode
    with pytest.raises(ValueError):
        vanishing_ideal(f5, "nowhere")


def test_zero_numerator_allowed():
    r = projective_vanishing_ideal(spec("q = 3\nvars = y1\nf1 = 0\nf2 = y1\n"))
    assert gens(r) == ["t1"]


# -- random specs ----------------------------------------------------------------


def suite(count, seed, qs=(2, 3, 5)):
    rng = random.Random(seed)
    return [random_spec(rng, qs=qs) for _ in range(count)]


CONE = {"projective": "affine", "projective_algebraic": "affine_algebraic"}


def expected_status(sp, mode):
    # a projective set is classified through its affine cone
    cone = enumerate_set(sp, CONE.get(mode, mode))
    if len(cone) == 0:
        return Status.EMPTY_SET
    if cone.points == ((0,) * sp.s,):
        return Status.ORIGIN_ONLY
    return Status.PROPER


@pytest.mark.parametrize("sp", suite(25, 11), ids=lambda s: s.to_text().replace("\n", "|"))
def test_oracle_and_status(sp):
    S = target_ring_of(sp)
    for mode in ("projective", "projective_algebraic", "affine", "affine_algebraic"):
        r = vanishing_ideal(sp, mode)
        Y = enumerate_set(sp, mode)
        assert r.status is expected_status(sp, mode)
        if mode in CONE:
            assert (r.status is Status.PROPER) == (len(Y) > 0)
        if len(Y) == 0:
            continue
        assert ideal_equal(r.ideal, oracle_vanishing_ideal(Y, S))
        for g in r.ideal.generators:
            assert all(g.evaluate(P).value == 0 for P in Y)
        if mode in CONE:
            assert all(g.is_homogeneous() for g in r.ideal.groebner().elements)


# without the hints some q = 5 eliminations take minutes, so compare on q <= 3
@pytest.mark.parametrize("sp", suite(25, 12, qs=(2, 3)), ids=lambda s: s.to_text().replace("\n", "|"))
def test_hints_do_not_change_the_ideal(sp):
    assert ideal_equal(projective_vanishing_ideal(sp).ideal,
                       projective_vanishing_ideal(sp, hints=False).ideal)
    assert ideal_equal(affine_vanishing_ideal(sp).ideal, affine_vanishing_ideal(sp, hints=False).ideal)
    assert ideal_equal(projective_algebraic_vanishing_ideal(sp).ideal,
                       projective_algebraic_vanishing_ideal(sp, form="w").ideal)


def test_hints_are_members(f5_projective):
    # each hint lies in the ideal generated by the literal generators
    c = f5_projective.construction
    I = Ideal(c.generators, c.ring)
    assert c.hints and all(I.contains(h) for h in c.hints)


def test_algebraic_colon_identity_on_suite():
    for sp in suite(15, 13):
        X = enumerate_set(sp, "projective_algebraic")
        if len(X) == 0:
            continue
        r = projective_vanishing_ideal(sp)
        S = r.ring
        assert ideal_equal(colon(r.ideal, product(S.gens(), S)),
                           projective_algebraic_vanishing_ideal(sp).ideal)


def test_spec_from_polynomials_round_trip():
    sp = suite(1, 14)[0]
    again = ParameterizationSpec.from_polynomials(sp.numerators, sp.denominators)
    assert ideal_equal(projective_vanishing_ideal(sp).ideal, projective_vanishing_ideal(again).ideal)
