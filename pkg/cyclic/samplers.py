import random

from scalars.types import gaussian

from .types import AlgebraPresentation


def random_chain(rng=None, *, dimension, domain, density=0.3):
    """Sparse vector with small integer coefficients in `domain`."""
    rng = rng or random.Random()
    vector = {}
    for index in range(dimension):
        if rng.random() < density:
            value = rng.randint(-3, 3)
            if value:
                vector[index] = domain.convert(value)
    return vector


def rescaled_algebra(algebra, scales):
    """The same algebra in the basis e_i' = scales[i] * e_i."""
    scales = [gaussian(s) for s in scales]
    mult = [
        (i, j, k, scales[i] * scales[j] * gaussian(value) / scales[k])
        for i, j, k, value in algebra.structure_constants()
    ]
    unit = None
    if algebra.is_unital:
        unit = [gaussian(value) / scales[i] for i, value in enumerate(algebra.unit_vector())]
    return AlgebraPresentation(algebra.basis, unit, mult)
