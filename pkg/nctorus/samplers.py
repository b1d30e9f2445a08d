import random

from scalars.samplers import random_gaussian, random_polynomial
from scalars.types import SymbolicScalar

from .types import NCElement


def random_coefficient(rng, *, symbolic=True):
    if symbolic and rng.random() < 0.5:
        return random_polynomial(rng, max_terms=2)
    return SymbolicScalar.constant(random_gaussian(rng))


def random_element(rng=None, *, max_terms=4, exponent_bound=2, symbolic=True):
    rng = rng or random.Random()
    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        key = (
            rng.randint(-exponent_bound, exponent_bound),
            rng.randint(-exponent_bound, exponent_bound),
        )
        coeffs[key] = random_coefficient(rng, symbolic=symbolic)
    return NCElement(coeffs)


def random_monomial_element(rng=None, *, exponent_bound=2):
    rng = rng or random.Random()
    return NCElement.monomial(
        rng.randint(-exponent_bound, exponent_bound),
        rng.randint(-exponent_bound, exponent_bound),
    )
