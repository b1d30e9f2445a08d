import cmath

from common.errors import ContractViolation
from common.logs_file import logger
from nctorus.matrices import NCMatrix
from nctorus.services import delta_matrix, delta_tau, scalar_matrix
from nctorus.types import NCElement
from scalars.services import evaluate
from scalars.types import ZERO, SymbolicScalar

from .types import BundleError, FreeConnection, GaussJet, GaussTerm, HeisenbergCharge


def _require_section(f, ch):
    if ch.is_free:
        raise BundleError(f"Charge ({ch.n}, 0) has no Heisenberg sections; use the free module.")
    if f.modulus != ch.modulus:
        raise BundleError(f"Section has modulus {f.modulus} but the charge needs {ch.modulus}.")


def act_u1(f, ch, power=1):
    """(f.U1)(x, alpha) = f(x - eps, alpha - 1), applied `power` times (negative for U1^-1)."""
    modulus = ch.modulus
    step = 1 if power > 0 else -1
    shift = ch.epsilon * -step
    for _ in range(abs(power)):
        f = GaussJet(
            modulus,
            {
                alpha: [term.translate(shift) for term in f.component((alpha - step) % modulus)]
                for alpha in range(modulus)
            },
        )
    return f


def act_u2(f, ch, power=1):
    """(f.U2)(x, alpha) = exp(c x - c alpha n/m) f(x, alpha), alpha taken in 0..|m|-1."""
    c = SymbolicScalar.unit("c")
    components = {}
    for alpha, terms in f.components.items():
        slope = c * power
        offset = -ch.phase_offset(alpha) * power
        components[alpha] = [term.mul_exp_linear(slope, offset) for term in terms]
    return GaussJet(f.modulus, components)


def act(f, a, ch):
    """Right action of the torus algebra; U1^m U2^n acts as U1^m first, then U2^n."""
    _require_section(f, ch)
    result = GaussJet.zero(f.modulus)
    for (m, n), coefficient in NCElement.coerce(a).terms():
        moved = act_u2(act_u1(f, ch, m), ch, n) if m or n else f
        result = result + moved.scale(coefficient)
    return result


def nabla_z(f, ch, z=None):
    """df/dx + c (tau mu x + z) f."""
    _require_section(f, ch)
    z = SymbolicScalar.unit("z") if z is None else SymbolicScalar.coerce(z)
    c = SymbolicScalar.unit("c")
    multiplier = (c * z, c * SymbolicScalar.unit("tau") * ch.mu)
    return f.map_terms(lambda term: term.derivative()) + f.map_terms(lambda term: term.mul_poly(multiplier))


def leibniz_check(f, a, ch, z=None):
    """nabla(f.a) - nabla(f).a - f.delta(a); identically zero for a holomorphic structure."""
    return nabla_z(act(f, a, ch), ch, z) - act(nabla_z(f, ch, z), a, ch) - act(f, delta_tau(a), ch)


def module_law_residual(f, a, b, ch):
    """f.(ab) - (f.a).b; identically zero for a right module."""
    return act(f, NCElement.coerce(a) * NCElement.coerce(b), ch) - act(act(f, a, ch), b, ch)


def assert_representable(f):
    for alpha, terms in f.components.items():
        for term in terms:
            if not isinstance(term, GaussTerm) or not all(
                isinstance(value, SymbolicScalar) for value in (*term.poly, term.q2, term.q1, term.q0)
            ):
                raise ContractViolation(f"Residue {alpha} holds a term outside the Gaussian class.")
    return f


def free_module_connection(rank, z=None):
    """The standard structure delta + c z on A^rank."""
    z = SymbolicScalar.unit("z") if z is None else SymbolicScalar.coerce(z)
    return FreeConnection(scalar_matrix(rank, SymbolicScalar.unit("c") * z))


def nabla_free(v, conn):
    if v.shape != (conn.rank, 1):
        raise BundleError(f"Vector of shape {v.shape} does not match connection rank {conn.rank}.")
    return delta_matrix(v) + conn.B @ v


def free_leibniz_residual(v, a, conn):
    a = NCElement.coerce(a)
    times_a = v.map(lambda entry: entry * a)
    return nabla_free(times_a, conn) - nabla_free(v, conn).map(lambda entry: entry * a) - v.map(
        lambda entry: entry * delta_tau(a)
    )


def intertwining_residual(F, conn1, conn2):
    """F B1 - delta(F) - B2 F: zero exactly when F is compatible with both structures."""
    q, p = F.shape
    if conn1.rank != p or conn2.rank != q:
        raise BundleError(f"Map of shape {F.shape} does not connect ranks {conn1.rank} and {conn2.rank}.")
    return F @ conn1.B - delta_matrix(F) - conn2.B @ F


def lift_connection(F, S, B2):
    """B1 = S (delta(F) + B2 F) for a surjection F: A^p -> A^q with section S."""
    q, p = F.shape
    if S.shape != (p, q):
        raise BundleError(f"Section of shape {S.shape} does not match map of shape {F.shape}.")
    if B2.shape != (q, q):
        raise BundleError(f"Target connection of shape {B2.shape} does not match rank {q}.")
    if F @ S != NCMatrix.identity(q):
        raise BundleError("not a section: F S is not the identity.")

    target = delta_matrix(F) + B2 @ F
    B1 = S @ target
    if F @ B1 != target:
        logger.error("Lifted connection fails to intertwine for F of shape %s", F.shape)
        raise ContractViolation("Lifted connection does not satisfy F B1 = delta(F) + B2 F.")
    return B1


def evaluate_section(f, alpha, x, assignment):
    value = 0j
    for term in f.component(alpha):
        poly = sum(evaluate(coefficient, assignment) * x ** power for power, coefficient in enumerate(term.poly))
        exponent = (
            evaluate(term.q2, assignment) * x * x
            + evaluate(term.q1, assignment) * x
            + evaluate(term.q0, assignment)
        )
        value += poly * cmath.exp(exponent)
    return value


def finite_difference_residual(f, ch, alpha, x, assignment, z=None, step=1e-5):
    """Relative gap between nabla_z(f) at x and a central difference plus the multiplier term."""
    z = SymbolicScalar.unit("z") if z is None else SymbolicScalar.coerce(z)
    c = SymbolicScalar.unit("c")
    derivative = (
        evaluate_section(f, alpha, x + step, assignment) - evaluate_section(f, alpha, x - step, assignment)
    ) / (2 * step)
    multiplier = evaluate(c * z, assignment) + evaluate(c * SymbolicScalar.unit("tau") * ch.mu, assignment) * x
    expected = derivative + multiplier * evaluate_section(f, alpha, x, assignment)
    actual = evaluate_section(nabla_z(f, ch, z), alpha, x, assignment)
    return abs(actual - expected) / max(1.0, abs(expected))


def section_term(poly, q2=ZERO, q1=ZERO, q0=ZERO):
    return GaussTerm(tuple(SymbolicScalar.coerce(value) for value in poly), q2, q1, q0)
