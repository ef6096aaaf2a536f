"""Random small parameterizations for oracle suites."""

import random

from vanish.field import PrimeField
from vanish.parser import ParameterizationSpec
from vanish.polyring import Polynomial, Ring, all_monomials


def random_poly(rng: random.Random, ring: Ring, maxdeg: int = 2, density: float = 0.4):
    q = ring.q
    terms = {}
    for d in range(maxdeg + 1):
        for m in all_monomials(ring.nvars, d):
            if rng.random() < density:
                terms[m] = rng.randrange(1, q)
    return Polynomial(ring, terms)


def random_spec(rng: random.Random, qs=(2, 3, 5), max_n=2, max_s=3, maxdeg=2) -> ParameterizationSpec:
    q = rng.choice(qs)
    n = rng.randint(1, max_n)
    s = rng.randint(1, max_s)
    ring = Ring(PrimeField(q), tuple(f"y{i}" for i in range(1, n + 1)))
    nums, dens = [], []
    for _ in range(s):
        nums.append(random_poly(rng, ring, maxdeg))
        g = ring.zero()
        # denominators are 1 about half of the time
        if rng.random() < 0.5:
            g = ring.one()
        while g.is_zero():
            g = random_poly(rng, ring, maxdeg)
        dens.append(g)
    return ParameterizationSpec.from_polynomials(nums, dens)


def random_laurent_spec(rng: random.Random, qs=(2, 3), max_n=3, max_s=3, maxexp=3):
    q = rng.choice(qs)
    n = rng.randint(1, max_n)
    s = rng.randint(2, max_s)
    ring = Ring(PrimeField(q), tuple(f"y{i}" for i in range(1, n + 1)))
    nums, dens = [], []
    for _ in range(s):
        a = [rng.randint(0, maxexp) for _ in range(n)]
        b = [rng.randint(0, maxexp) if rng.random() < 0.5 else 0 for _ in range(n)]
        nums.append(ring.monomial(a))
        dens.append(ring.monomial(b))
    return ParameterizationSpec.from_polynomials(nums, dens)
