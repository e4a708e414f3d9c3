"""
Shared builders for the test suites
"""

import random
from typing import List, Sequence

from ringbasis.coeffring import RingDescriptor
from ringbasis.parser import ParseContext, parse_polynomial
from ringbasis.poly import Polynomial


def polys(ring: RingDescriptor, names: Sequence[str], *texts: str) -> List[Polynomial]:
    """Parse polynomials over ``ring`` in the given variable names."""
    ctx = ParseContext(ring, tuple(names))
    return [parse_polynomial(text, ctx) for text in texts]


def poly(ring: RingDescriptor, names: Sequence[str], text: str) -> Polynomial:
    return polys(ring, names, text)[0]


def random_monomial(rng: random.Random, nvars: int, max_degree: int):
    degree = rng.randint(0, max_degree)
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_poly(rng: random.Random, ring: RingDescriptor, nvars: int, max_degree: int,
                max_terms: int = 3, bound: int = 9, coefficient=None) -> Polynomial:
    """Random polynomial with integer coefficients in [-bound, bound]."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = coefficient(rng) if coefficient else rng.randint(-bound, bound)
        terms[random_monomial(rng, nvars, max_degree)] = c
    return Polynomial(ring, nvars, terms)


def nonzero_random_poly(rng: random.Random, ring: RingDescriptor, nvars: int, max_degree: int,
                        max_terms: int = 3, bound: int = 9, coefficient=None) -> Polynomial:
    while True:
        f = random_poly(rng, ring, nvars, max_degree, max_terms, bound, coefficient)
        if not f.is_zero():
            return f
