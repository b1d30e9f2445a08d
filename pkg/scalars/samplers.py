import random
from fractions import Fraction

from .types import UNIT_NAMES, SymbolicScalar, gaussian, QuadraticSurd

SQUAREFREE_RADICANDS = (2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19)


def random_gaussian(rng, *, bound=5, imaginary=True):
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if imaginary else 0
    return gaussian(re, im)


def random_monomial(rng, *, units=("L", "th", "tau", "z", "c")):
    exponents = [0] * len(UNIT_NAMES)
    for name in rng.sample(units, rng.randint(0, min(2, len(units)))):
        if name == "L":
            power = rng.choice((-2, -1, 1, 2))
            exponents[0 if power > 0 else 1] = abs(power)
        else:
            exponents[UNIT_NAMES.index(name)] = rng.randint(1, 2)
    return tuple(exponents)


def random_polynomial(rng, *, max_terms=3, units=("L", "th", "tau", "z", "c")):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(rng, units=units)] = random_gaussian(rng)
    return SymbolicScalar.from_terms(terms)


def random_scalar(rng=None, *, max_terms=3, fraction_probability=0.3):
    rng = rng or random.Random()
    value = random_polynomial(rng, max_terms=max_terms)
    if rng.random() < fraction_probability:
        denominator = random_polynomial(rng, max_terms=2)
        if not denominator.is_zero:
            value = value / denominator
    return value


def random_nonzero_scalar(rng=None, **kwargs):
    rng = rng or random.Random()
    while True:
        value = random_scalar(rng, **kwargs)
        if not value.is_zero:
            return value


def random_surd(rng=None, *, bound=20):
    rng = rng or random.Random()
    q = 0
    while q == 0:
        q = rng.randint(-9, 9)
    return QuadraticSurd(
        rng.randint(-bound, bound),
        q,
        rng.choice(SQUAREFREE_RADICANDS),
        rng.randint(1, 12),
    )
