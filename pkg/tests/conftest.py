import random

import pytest

from golod import GF, Ideal, Polynomial, PolyRing


@pytest.fixture
def R2():
    return PolyRing(("x", "y"))


@pytest.fixture
def R3():
    return PolyRing(("x", "y", "z"))


def random_homogeneous(ring, rng, degree, nterms=2):
    """Random nonzero homogeneous polynomial with small integer coefficients."""
    monos = ring.monomials_of_degree(degree)
    chosen = rng.sample(monos, k=min(nterms, len(monos)))
    terms = {}
    for m in chosen:
        c = rng.choice([c for c in range(-3, 4) if c])
        terms[m] = ring.field.coerce(c)
    p = Polynomial(ring, {m: c for m, c in terms.items() if c != ring.field.zero})
    if p.is_zero():
        return random_homogeneous(ring, rng, degree, nterms)
    return p


def random_ideal(ring, rng, ngens=2, maxdeg=3, monomial_bias=0.5):
    """Random proper homogeneous ideal with mixed monomial/binomial generators."""
    gens = []
    for _ in range(ngens):
        deg = rng.randint(1, maxdeg)
        if rng.random() < monomial_bias:
            gens.append(random_homogeneous(ring, rng, deg, nterms=1))
        else:
            gens.append(random_homogeneous(ring, rng, deg, nterms=2))
    ideal = Ideal(ring, gens)
    if ideal.is_unit() or ideal.is_zero():
        return random_ideal(ring, rng, ngens, maxdeg, monomial_bias)
    return ideal


@pytest.fixture
def rng():
    return random.Random(94130028)
