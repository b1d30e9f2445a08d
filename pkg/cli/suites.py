import random
import time
from dataclasses import dataclass, field

from django.conf import settings

from bundles.samplers import LEIBNIZ_CHARGES, random_lift_problem, random_matrix, random_section
from bundles.services import assert_representable, finite_difference_residual, leibniz_check, lift_connection
from bundles.types import HeisenbergCharge
from common.errors import WorkbenchError
from common.logs_file import logger
from cyclic.catalog import SHIPPED_ALGEBRAS, shipped
from cyclic.complexes import count_words
from cyclic.oracles import bar_complex_hh, commutator_quotient_dimension, connes_complex_hc
from cyclic.services import build_cyclic, hc, hh, identity_suite, matrix_algebra, morita_check
from elliptic.samplers import random_object, random_theta
from elliptic.services import (
    axiom_report,
    dual_adjunction_check,
    heart_member,
    heart_to_heisenberg,
    splitting_check,
    truncate,
    truncation_adjunction_check,
)
from elliptic.types import FormalObject
from nctorus.matrices import NCMatrix
from nctorus.samplers import random_element
from nctorus.services import delta_matrix, derivation_check, nc_mul, numeric_consistency_check, trace_commutator
from nctorus.types import U1, U2, NCElement
from scalars.services import affine_sign, coupled_assignment

# Numeric point for the finite-difference and evaluation cross-checks.
FD_THETA = 0.6180339887498949
FD_TAU = 0.3 + 1.1j
FD_Z = 0.2 - 0.4j

IDENTITY_DEGREE = 5
IDENTITY_CATEGORIES = ("square_zero",)
BAR_ORACLE_DEGREE = 3

# (algebra, matrix size, max degree passed to morita_check, smallest scale that runs it)
MORITA_CASES = (
    ("field", 2, 6, 0),
    ("field", 3, 4, 0),
    ("dual_numbers", 2, 4, 0),
    ("dual_numbers", 3, 3, 4),
)
# Degree through which HH and HC of A and M_n(A) should be compared.
MORITA_TARGETS = {"field": 4, "dual_numbers": 3}


def scaled(count, scale):
    return max(1, round(count * scale))


@dataclass
class SuiteResult:
    number: int
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def holds(self):
        return not self.failures

    def check(self, holds, description):
        self.trials += 1
        if not holds:
            self.failures.append(description)

    def to_record(self):
        return {
            "suite": self.number,
            "name": self.name,
            "trials": self.trials,
            "failures": len(self.failures),
            "first_failure": self.failures[0] if self.failures else None,
            "holds": self.holds,
            "notes": list(self.notes),
        }


def algebra_suite(result, rng, scale):
    for index in range(scaled(500, scale)):
        a, b, c = (random_element(rng, max_terms=4) for _ in range(3))
        result.check(nc_mul(nc_mul(a, b), c) == nc_mul(a, nc_mul(b, c)), f"associativity, triple {index}")
        result.check(nc_mul(1, a) == a and nc_mul(a, 1) == a, f"unit law, triple {index}")
        result.check(nc_mul(a, b + c) == nc_mul(a, b) + nc_mul(a, c), f"left distributivity, triple {index}")
        result.check(nc_mul(a + b, c) == nc_mul(a, c) + nc_mul(b, c), f"right distributivity, triple {index}")

    assignment = coupled_assignment(FD_THETA, tau=FD_TAU, z=FD_Z)
    for index in range(scaled(100, scale)):
        a, b = random_element(rng, max_terms=4), random_element(rng, max_terms=4)
        result.check(numeric_consistency_check(a, b, assignment), f"numeric product, pair {index}")


def derivation_suite(result, rng, scale):
    for index in range(scaled(500, scale)):
        a, b = random_element(rng, max_terms=4), random_element(rng, max_terms=4)
        result.check(derivation_check(a, b).is_zero, f"Leibniz rule of delta, pair {index}")
        result.check(not trace_commutator(a, b), f"trace(ab) = trace(ba), pair {index}")


def leibniz_suite(result, rng, scale):
    generators = {"U1": U1, "U2": U2, "U1*U2": nc_mul(U1, U2)}
    for n, m in LEIBNIZ_CHARGES:
        ch = HeisenbergCharge(n, m)
        for index in range(scaled(50, scale)):
            f = random_section(rng, ch)
            for name, a in generators.items():
                residual = assert_representable(leibniz_check(f, a, ch))
                result.check(residual.is_zero, f"charge ({n}, {m}), a = {name}, section {index}")

    assignment = coupled_assignment(FD_THETA, tau=FD_TAU, z=FD_Z)
    tolerance = settings.WORKBENCH_FINITE_DIFFERENCE_TOLERANCE
    for n, m in LEIBNIZ_CHARGES:
        ch = HeisenbergCharge(n, m)
        f = random_section(rng, ch)
        for step in range(10):
            x = -1.5 + step / 3
            for alpha in range(ch.modulus):
                gap = finite_difference_residual(f, ch, alpha, x, assignment)
                result.check(gap < tolerance, f"finite difference at x = {x:.3f}, charge ({n}, {m})")


def lifting_suite(result, rng, scale):
    for index in range(scaled(100, scale)):
        F, S, B2 = random_lift_problem(rng)
        B1 = lift_connection(F, S, B2)
        result.check(F @ B1 == delta_matrix(F) + B2 @ F, f"lift {index} of shape {F.shape}")

    for rank in (1, 2, 3):
        B2 = random_matrix(rng, rank, rank)
        identity = NCMatrix.identity(rank)
        result.check(lift_connection(identity, identity, B2) == B2, f"identity surjection of rank {rank}")


def cyclic_identity_suite(result, rng, scale):
    for name in SHIPPED_ALGEBRAS + IDENTITY_CATEGORIES:
        report = identity_suite(build_cyclic(shipped(name), IDENTITY_DEGREE))
        for check, n, holds in report.checks:
            result.check(holds, f"{check} in degree {n} for {name}")


def homology_suite(result, rng, scale):
    field_algebra = shipped("field")
    result.check(hh(field_algebra, 3).dimensions == (1, 0, 0, 0), "HH of the field")
    result.check(hc(field_algebra, 4).dimensions == (1, 0, 1), "HC of the field")

    for name in SHIPPED_ALGEBRAS:
        algebra = shipped(name)
        computed = hh(algebra, BAR_ORACLE_DEGREE if algebra.dimension <= 3 else 0)
        expected = commutator_quotient_dimension(algebra)
        result.check(computed.dimension(0) == expected, f"HH_0 of {name} against the commutator quotient")
        if algebra.dimension <= 3:
            oracle = bar_complex_hh(algebra, BAR_ORACLE_DEGREE)
            result.check(computed.dimensions == oracle, f"HH of {name} against the bar complex")
            cyclic = hc(algebra, BAR_ORACLE_DEGREE + 2).dimensions
            result.check(
                cyclic == connes_complex_hc(algebra, BAR_ORACLE_DEGREE),
                f"HC of {name} against the Connes complex",
            )


def morita_suite(result, rng, scale):
    budget = settings.WORKBENCH_TERM_BUDGET
    for name, size, n_max, minimum_scale in MORITA_CASES:
        label = f"M_{size}({name})"
        if scale < minimum_scale:
            result.notes.append(f"{label} skipped below scale {minimum_scale}")
            continue
        report = morita_check(shipped(name), size, n_max)
        result.check(report.holds, f"{label} up to degree {n_max}")

        hh_top, hc_top = n_max - 1, n_max - 2
        if min(hh_top, hc_top) < MORITA_TARGETS[name]:
            words = count_words(matrix_algebra(shipped(name), size), n_max + 1)
            result.notes.append(
                f"{label}: HH through {hh_top}, HC through {hc_top}; "
                f"degree {n_max + 1} needs {words} words, budget {budget}"
            )


def tstructure_suite(result, rng, scale):
    thetas = [random_theta(rng) for _ in range(10)]
    for index in range(scaled(1000, scale)):
        theta = thetas[index % len(thetas)]
        n = rng.randint(-1, 1)
        X = random_object(rng)

        result.check(splitting_check(X, theta, n).holds, f"truncation and K0 splitting, object {index}")
        result.check(axiom_report(X, theta).holds, f"t-structure axioms, object {index}")

        lower, _ = truncate(random_object(rng), theta, n)
        _, upper = truncate(random_object(rng), theta, n - 1)
        result.check(truncation_adjunction_check(lower, X, n, theta).holds, f"truncation adjunction, object {index}")
        result.check(dual_adjunction_check(upper, X, n, theta).holds, f"dual adjunction, object {index}")

        heart = FormalObject(s for s in X if heart_member(FormalObject([s]), theta))
        for charge, _ in heart_to_heisenberg(heart, theta):
            result.check(
                affine_sign(charge.n, charge.m, theta.value) == 1,
                f"positive dimension of ({charge.n}, {charge.m}), object {index}",
            )


def one_object_suite(result, rng, scale):
    for name in SHIPPED_ALGEBRAS:
        algebra = shipped(name)
        category = algebra.as_category()
        result.check(hh(algebra, 3).dimensions == hh(category, 3).dimensions, f"HH of {name} as a category")
        result.check(hc(algebra, 4).dimensions == hc(category, 4).dimensions, f"HC of {name} as a category")


SUITES = (
    (1, "algebra", algebra_suite),
    (2, "derivation", derivation_suite),
    (3, "leibniz", leibniz_suite),
    (4, "lifting", lifting_suite),
    (5, "cyclic-identities", cyclic_identity_suite),
    (6, "homology-values", homology_suite),
    (7, "morita", morita_suite),
    (8, "t-structure", tstructure_suite),
    (9, "one-object", one_object_suite),
)

SUITE_NUMBERS = tuple(number for number, _, _ in SUITES)


def run_suite(number, *, seed, scale):
    _, name, suite = next(entry for entry in SUITES if entry[0] == number)
    result = SuiteResult(number=number, name=name)
    started = time.perf_counter()
    try:
        suite(result, random.Random(seed + number), scale)
    except WorkbenchError as exc:
        result.failures.append(f"aborted: {exc.detail}")
    result.seconds = time.perf_counter() - started

    if result.holds:
        logger.info("Suite %s (%s): %s checks passed in %.1fs", number, name, result.trials, result.seconds)
    else:
        logger.error("Suite %s (%s): %s of %s checks failed", number, name, len(result.failures), result.trials)
    return result


def run_suites(numbers=SUITE_NUMBERS, *, seed, scale):
    return [run_suite(number, seed=seed, scale=scale) for number in numbers]
