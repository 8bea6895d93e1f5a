"""Shared helpers for the test suite: seeded random polynomial factories."""

from fractions import Fraction
from random import Random

from wildmdeg import Polynomial

#: Fixed seed so every run exercises the identical instances.
SEED = 20260814


def random_poly(
    rng: Random,
    max_terms: int = 5,
    max_exponent: int = 4,
    max_coeff: int = 9,
    fractions: bool = False,
) -> Polynomial:
    """Random sparse polynomial (possibly zero) from a seeded generator."""
    terms: dict = {}
    for _ in range(rng.randrange(max_terms + 1)):
        term = (
            rng.randrange(max_exponent + 1),
            rng.randrange(max_exponent + 1),
            rng.randrange(max_exponent + 1),
        )
        coeff = rng.randrange(-max_coeff, max_coeff + 1)
        if fractions and rng.random() < 0.3:
            coeff = Fraction(coeff, rng.randrange(1, 7))
        terms[term] = terms.get(term, 0) + coeff
    return Polynomial(terms)


def random_nonzero_poly(rng: Random, **kwargs) -> Polynomial:
    """Like :func:`random_poly` but never the zero polynomial."""
    while True:
        poly = random_poly(rng, **kwargs)
        if not poly.is_zero():
            return poly
