"""Vanishing ideals of sets parameterized by rational functions over prime fields,
their Hilbert invariants, and the associated Reed-Muller-type codes."""

from vanish.field import FieldElement, PrimeField
from vanish.groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    colon,
    eliminate,
    ideal_equal,
    intersect,
    is_binomial_basis,
    normal_form,
)
from vanish.invariants import (
    HilbertProfile,
    degree,
    hilbert_function,
    hilbert_profile,
    krull_dimension,
    regularity,
)
from vanish.parser import ParameterizationSpec, parse_polynomial, parse_spec
from vanish.points import (
    PointSet,
    enumerate_set,
    is_multiplicative_monoid,
    monoid_to_laurent_parameterization,
    oracle_vanishing_ideal,
    point_ideal,
)
from vanish.polyring import GREVLEX, LEX, Block, GrevLex, Lex, Polynomial, RationalFunction, Ring
from vanish.rmcode import EvaluationCode, NotComputed, build_code, minimum_distance, parameter_table
from vanish.vanishing import (
    Status,
    VanishingResult,
    affine_algebraic_vanishing_ideal,
    affine_vanishing_ideal,
    colon_to_algebraic,
    polynomial_shortcut,
    projective_algebraic_vanishing_ideal,
    projective_vanishing_ideal,
    vanishing_ideal,
)

__version__ = "0.1.0"
