import random
from fractions import Fraction

from nctorus.matrices import NCMatrix
from nctorus.samplers import random_element
from nctorus.types import NCElement
from scalars.samplers import random_gaussian
from scalars.types import ZERO, SymbolicScalar

from .services import section_term
from .types import GaussJet

LEIBNIZ_CHARGES = ((1, 1), (1, 2), (2, -1), (0, 1))


def random_coefficient(rng):
    value = SymbolicScalar.constant(random_gaussian(rng))
    if rng.random() < 0.3:
        value = value * SymbolicScalar.unit(rng.choice(("th", "tau", "z")))
    return value


def random_section(rng=None, ch=None, *, max_terms=2, max_degree=2):
    """Random Gaussian section with real negative quadratic exponent on every residue."""
    rng = rng or random.Random()
    components = {}
    for alpha in range(ch.modulus):
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            poly = [random_coefficient(rng) for _ in range(rng.randint(1, max_degree + 1))]
            q2 = SymbolicScalar.constant(-Fraction(rng.randint(1, 8), 4))
            q1 = SymbolicScalar.constant(random_gaussian(rng, bound=2))
            q0 = SymbolicScalar.constant(random_gaussian(rng, bound=2)) if rng.random() < 0.5 else ZERO
            terms.append(section_term(poly, q2, q1, q0))
        components[alpha] = terms
    return GaussJet(ch.modulus, components)


def random_matrix(rng, rows, columns, *, max_terms=2):
    return NCMatrix(
        [[random_element(rng, max_terms=max_terms, exponent_bound=1) for _ in range(columns)] for _ in range(rows)]
    )


def _elementary(size, i, j, entry):
    rows = [[NCElement.scalar(1) if r == s else NCElement() for s in range(size)] for r in range(size)]
    rows[i][j] = entry
    return NCMatrix(rows)


def random_invertible(rng, size, *, steps=2):
    """Product of elementary matrices together with its inverse."""
    matrix, inverse = NCMatrix.identity(size), NCMatrix.identity(size)
    if size < 2:
        return matrix, inverse
    for _ in range(steps):
        i, j = rng.sample(range(size), 2)
        entry = random_element(rng, max_terms=1, exponent_bound=1, symbolic=False)
        matrix = matrix @ _elementary(size, i, j, entry)
        inverse = _elementary(size, i, j, -entry) @ inverse
    return matrix, inverse


def random_lift_problem(rng=None, *, max_rank=3):
    """(F, S, B2) with F S = I built as F = G (I | X) E, S = E^-1 (I ; 0) G^-1."""
    rng = rng or random.Random()
    p = rng.randint(1, max_rank)
    q = rng.randint(1, p)
    X = random_matrix(rng, q, p - q) if p > q else None
    rows = []
    for i in range(q):
        row = [NCElement.scalar(1) if i == j else NCElement() for j in range(q)]
        if X is not None:
            row.extend(X.rows[i])
        rows.append(row)
    F = NCMatrix(rows)
    S = NCMatrix([[1 if i == j else 0 for j in range(q)] for i in range(p)])

    E, E_inverse = random_invertible(rng, p)
    G, G_inverse = random_invertible(rng, q)
    F = G @ F @ E
    S = E_inverse @ S @ G_inverse
    B2 = random_matrix(rng, q, q)
    return F, S, B2
