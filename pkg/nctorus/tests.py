import random

from django.test import SimpleTestCase, override_settings

from scalars.services import coupled_assignment, lambda_power, unit
from scalars.types import ONE, SymbolicScalar

from .grammar import parse_element
from .matrices import NCMatrix
from .samplers import random_element
from .serializers import NCElementSerializer
from .services import (
    delta_tau,
    derivation_check,
    evaluate_element,
    nc_mul,
    nc_trace,
    numeric_consistency_check,
    numeric_product,
    trace_commutator,
)
from .types import U1, U2, NCElement, TorusError


def normal_order(word):
    """Move every U2 letter past every U1 letter one adjacent swap at a time.

    Letters are (generator, power) pairs; a swap of U2^s U1^r contributes L^(-r*s).
    """
    letters = list(word)
    exponent = 0
    swapped = True
    while swapped:
        swapped = False
        for index in range(len(letters) - 1):
            (first, s), (second, r) = letters[index], letters[index + 1]
            if first == "U2" and second == "U1":
                letters[index], letters[index + 1] = letters[index + 1], letters[index]
                exponent -= r * s
                swapped = True
    m = sum(power for name, power in letters if name == "U1")
    n = sum(power for name, power in letters if name == "U2")
    return NCElement.monomial(m, n, lambda_power(exponent))


def word_element(word):
    element = NCElement.scalar(ONE)
    for name, power in word:
        element = element * NCElement.monomial(power if name == "U1" else 0, power if name == "U2" else 0)
    return element


class TwistedProductTests(SimpleTestCase):
    def test_commutation_relation(self):
        self.assertEqual(nc_mul(U2, U1), NCElement.monomial(1, 1, lambda_power(-1)))
        self.assertEqual(nc_mul(U1, U2), NCElement.monomial(1, 1))

    def test_unit_is_neutral(self):
        rng = random.Random(1)
        for _ in range(20):
            a = random_element(rng)
            self.assertEqual(nc_mul(1, a), a)
            self.assertEqual(nc_mul(a, 1), a)

    def test_monomial_product_matches_adjacent_swaps(self):
        left = NCElement.monomial(2, 1)
        right = NCElement.monomial(1, 3)
        expected = normal_order([("U1", 1), ("U1", 1), ("U2", 1), ("U1", 1), ("U2", 1), ("U2", 1), ("U2", 1)])
        self.assertEqual(nc_mul(left, right), expected)
        self.assertEqual(nc_mul(left, right), NCElement.monomial(3, 4, lambda_power(-1)))

    def test_random_words_match_adjacent_swaps(self):
        rng = random.Random(2)
        for _ in range(50):
            word = [(rng.choice(("U1", "U2")), rng.choice((-1, 1))) for _ in range(rng.randint(1, 6))]
            self.assertEqual(word_element(word), normal_order(word))

    def test_associativity_and_distributivity(self):
        rng = random.Random(3)
        for _ in range(60):
            a, b, c = (random_element(rng) for _ in range(3))
            self.assertEqual(nc_mul(nc_mul(a, b), c), nc_mul(a, nc_mul(b, c)))
            self.assertEqual(nc_mul(a, b + c), nc_mul(a, b) + nc_mul(a, c))

    def test_monomial_inverse(self):
        element = NCElement.monomial(2, -3, unit("th"))
        self.assertEqual(nc_mul(element, element.inverse()), NCElement.scalar(1))
        self.assertEqual(nc_mul(element.inverse(), element), NCElement.scalar(1))
        with self.assertRaises(TorusError):
            (U1 + U2).inverse()

    def test_numeric_product_agrees(self):
        rng = random.Random(4)
        assignment = coupled_assignment(0.3819660112501051, tau=0.25 + 1.5j, z=0.1 - 0.2j)
        for _ in range(40):
            a, b = random_element(rng), random_element(rng)
            self.assertTrue(numeric_consistency_check(a, b, assignment))

    def test_numeric_consistency_uses_configured_tolerance(self):
        assignment = coupled_assignment(0.3819660112501051)
        a, b = U2 + U1, U1 * U2 + 2
        self.assertTrue(numeric_consistency_check(a, b, assignment))
        exact = evaluate_element(nc_mul(a, b), assignment)
        numeric = numeric_product(evaluate_element(a, assignment), evaluate_element(b, assignment), assignment)
        self.assertEqual(set(exact), set(numeric))
        with override_settings(WORKBENCH_NUMERIC_TOLERANCE=-1.0):
            self.assertFalse(numeric_consistency_check(a, b, assignment))


class DerivationTests(SimpleTestCase):
    def test_generator_values(self):
        c, tau = unit("c"), unit("tau")
        self.assertEqual(delta_tau(U1), NCElement.monomial(1, 0, c * tau))
        self.assertEqual(delta_tau(U2), NCElement.monomial(0, 1, c))
        self.assertTrue(delta_tau(NCElement.scalar(1)).is_zero)
        self.assertEqual(delta_tau(nc_mul(U1, U2)), NCElement.monomial(1, 1, c * (tau + 1)))

    def test_leibniz_on_generators_and_unit(self):
        self.assertTrue(derivation_check(U1, U2).is_zero)
        self.assertTrue(derivation_check(1, U2 + U1).is_zero)

    def test_leibniz_on_random_pairs(self):
        rng = random.Random(5)
        for _ in range(60):
            a, b = random_element(rng, max_terms=5), random_element(rng, max_terms=5)
            self.assertTrue(derivation_check(a, b).is_zero)


class TraceTests(SimpleTestCase):
    def test_trace_reads_origin_coefficient(self):
        self.assertEqual(nc_trace(NCElement.scalar(1)), ONE)
        self.assertTrue(nc_trace(U1).is_zero)

    def test_trace_of_inverse_pair(self):
        a = nc_mul(U1, U2)
        b = nc_mul(U2.inverse(), U1.inverse())
        self.assertEqual(nc_trace(nc_mul(a, b)), ONE)
        self.assertEqual(nc_trace(nc_mul(b, a)), ONE)

    def test_trace_is_tracial(self):
        rng = random.Random(6)
        for _ in range(60):
            a, b = random_element(rng), random_element(rng)
            self.assertEqual(nc_trace(nc_mul(a, b)), nc_trace(nc_mul(b, a)))
            self.assertFalse(trace_commutator(a, b))


class ElementTextTests(SimpleTestCase):
    def test_inline_expression(self):
        element = parse_element("U1^2*U2^-1 + (1/2)*U2")
        expected = NCElement({(2, -1): 1, (0, 1): SymbolicScalar.constant(1) / 2})
        self.assertEqual(element, expected)

    def test_reordered_product_prints_normal_form(self):
        self.assertEqual(parse_element("U2*U1").to_text(), "L^-1 * U1*U2")

    def test_text_reparses(self):
        rng = random.Random(7)
        for _ in range(40):
            element = random_element(rng)
            self.assertEqual(parse_element(element.to_text()), element)

    def test_division_only_by_scalars(self):
        self.assertEqual(parse_element("U1 / 2"), U1 * (SymbolicScalar.constant(1) / 2))
        with self.assertRaises(TorusError):
            parse_element("1 / U1")

    def test_term_list_serializer(self):
        serializer = NCElementSerializer(data={"items": [
            {"m": 1, "n": 0, "coeff": "c * tau"},
            {"m": 0, "n": 0, "coeff": 2},
        ]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.to_element(), delta_tau(U1) + 2)

    def test_duplicate_terms_are_rejected(self):
        serializer = NCElementSerializer(data={"items": [{"m": 1, "n": 0, "coeff": "1"}] * 2})
        self.assertFalse(serializer.is_valid())


class MatrixTests(SimpleTestCase):
    def test_identity_is_neutral(self):
        matrix = NCMatrix([[U1, U2], [0, unit("L")]])
        self.assertEqual(NCMatrix.identity(2) @ matrix, matrix)
        self.assertEqual(matrix @ NCMatrix.identity(2), matrix)

    def test_shape_mismatch(self):
        with self.assertRaises(TorusError):
            NCMatrix.identity(2) @ NCMatrix.identity(3)
