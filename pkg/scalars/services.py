import cmath
from fractions import Fraction

from django.conf import settings

from .types import (
    LI_INDEX,
    UNIT_NAMES,
    ScalarError,
    SymbolicScalar,
    gaussian_to_complex,
    sign_of_root_expression,
)

ORDERING_SYMBOLS = {-1: "<", 0: "=", 1: ">"}


def scalar_add(a, b):
    return SymbolicScalar.coerce(a) + b


def scalar_sub(a, b):
    return SymbolicScalar.coerce(a) - b


def scalar_mul(a, b):
    return SymbolicScalar.coerce(a) * b


def scalar_neg(a):
    return -SymbolicScalar.coerce(a)


def scalar_inv(a):
    return SymbolicScalar.coerce(a).inverse()


def unit(name):
    return SymbolicScalar.unit(name)


def lambda_power(exponent):
    return SymbolicScalar.unit("L") ** exponent


def theta_affine(n, m):
    """n + m*th, the dimension of the Heisenberg module with charge (n, m)."""
    return SymbolicScalar.constant(n) + SymbolicScalar.constant(m) * unit("th")


def coupled_assignment(theta, *, tau=None, z=None):
    """Assignment of complex values that re-couples L = exp(2*pi*i*th) and c = 2*pi*i."""
    assignment = {
        "th": complex(theta),
        "L": cmath.exp(2j * cmath.pi * theta),
        "c": 2j * cmath.pi,
    }
    if tau is not None:
        assignment["tau"] = complex(tau)
    if z is not None:
        assignment["z"] = complex(z)
    return assignment


def _evaluate_polynomial(poly, values):
    total = 0j
    for monom, coeff in poly.items():
        term = gaussian_to_complex(coeff)
        for index, exponent in enumerate(monom):
            if exponent:
                term *= values[index] ** exponent
        total += term
    return total


def evaluate(scalar, assignment):
    scalar = SymbolicScalar.coerce(scalar)
    unbound = sorted(scalar.units() - set(assignment))
    if unbound:
        raise ScalarError(f"Unbound units: {', '.join(unbound)}.")

    values = []
    for index, name in enumerate(UNIT_NAMES):
        if index == LI_INDEX:
            values.append(1 / assignment["L"] if "L" in assignment else 1)
        else:
            values.append(complex(assignment.get(name, 1)))

    denominator = _evaluate_polynomial(scalar.denominator, values)
    if denominator == 0:
        raise ScalarError("Denominator vanishes at the assignment.")
    return _evaluate_polynomial(scalar.numerator, values) / denominator


def surd_sign(surd):
    return sign_of_root_expression(surd.p, surd.q, surd.D)


def surd_compare(surd, value):
    """Exact ordering of `surd` against a rational `value` as one of "<", "=", ">"."""
    value = Fraction(value)
    u = value.denominator * surd.p - value.numerator * surd.r
    v = value.denominator * surd.q
    return ORDERING_SYMBOLS[sign_of_root_expression(u, v, surd.D)]


def affine_sign(n, m, surd):
    """Exact sign of n + m*surd."""
    return sign_of_root_expression(n * surd.r + m * surd.p, m * surd.q, surd.D)


def numerically_close(actual, expected, tolerance=None):
    """|actual - expected| <= tolerance * (1 + |expected|), tolerance defaulting to the settings value."""
    tolerance = settings.WORKBENCH_NUMERIC_TOLERANCE if tolerance is None else tolerance
    return abs(actual - expected) <= tolerance * (1 + abs(expected))
