from scalars.services import evaluate, numerically_close
from scalars.types import ZERO, SymbolicScalar

from .matrices import NCMatrix
from .types import NCElement, twist


def nc_mul(a, b):
    return NCElement.coerce(a) * NCElement.coerce(b)


def monomial_weight(m, n):
    """Eigenvalue c*(m*tau + n) of the derivation on U1^m U2^n."""
    return SymbolicScalar.unit("c") * (SymbolicScalar.unit("tau") * m + n)


def delta_tau(a):
    """The derivation with delta(U1) = c*tau*U1 and delta(U2) = c*U2."""
    return NCElement.coerce(a).map_coefficients(lambda key, value: monomial_weight(*key) * value)


def nc_trace(a):
    return NCElement.coerce(a).coefficient(0, 0)


def derivation_check(a, b):
    """delta(ab) - delta(a) b - a delta(b); identically zero for a derivation."""
    a, b = NCElement.coerce(a), NCElement.coerce(b)
    return delta_tau(a * b) - delta_tau(a) * b - a * delta_tau(b)


def trace_commutator(a, b):
    return nc_trace(nc_mul(a, b)) - nc_trace(nc_mul(b, a))


def delta_matrix(matrix):
    return matrix.map(delta_tau)


def scalar_matrix(size, scalar):
    return NCMatrix([[scalar if i == j else ZERO for j in range(size)] for i in range(size)])


def evaluate_element(a, assignment):
    return {key: evaluate(value, assignment) for key, value in NCElement.coerce(a).coeffs.items()}


def numeric_product(left, right, assignment):
    """Twisted product of complex coefficient maps with L taken from the assignment."""
    lam = assignment["L"]
    total = {}
    for (a, b), x in left.items():
        for (c, d), y in right.items():
            key = (a + c, b + d)
            total[key] = total.get(key, 0j) + x * y * lam ** (-b * c)
    return total


def numeric_consistency_check(a, b, assignment):
    """Evaluating ab agrees with the numeric twisted product of the evaluated factors."""
    exact = evaluate_element(nc_mul(a, b), assignment)
    numeric = numeric_product(evaluate_element(a, assignment), evaluate_element(b, assignment), assignment)
    return all(numerically_close(exact.get(key, 0j), numeric.get(key, 0j)) for key in set(exact) | set(numeric))
