import random

from scalars.samplers import random_surd

from .types import FormalObject, Theta

LABELS = ("", "a", "b")


def random_theta(rng=None):
    rng = rng or random.Random()
    return Theta(random_surd(rng, bound=6))


def random_charge_pair(rng):
    while True:
        r, d = rng.randint(0, 4), rng.randint(-5, 5)
        if r > 0 or d > 0:
            return r, d


def random_object(rng=None, *, max_summands=4, degrees=(-2, 2)):
    rng = rng or random.Random()
    obj = FormalObject()
    for _ in range(rng.randint(0, max_summands)):
        r, d = random_charge_pair(rng)
        obj = obj + FormalObject.from_charge(
            rng.randint(*degrees), r, d, label=rng.choice(LABELS), mult=rng.randint(1, 3)
        )
    return obj
