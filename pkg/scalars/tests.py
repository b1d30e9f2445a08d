import cmath
import copy
import random
from fractions import Fraction

import mpmath
from django.test import SimpleTestCase, override_settings

from .grammar import parse_scalar, parse_surd
from .samplers import random_nonzero_scalar, random_scalar, random_surd
from .serializers import ScalarField
from .services import (
    affine_sign,
    coupled_assignment,
    evaluate,
    lambda_power,
    numerically_close,
    scalar_add,
    scalar_inv,
    scalar_mul,
    scalar_neg,
    scalar_sub,
    surd_compare,
    surd_sign,
    theta_affine,
    unit,
)
from .types import ONE, ZERO, QuadraticSurd, ScalarDivisionError, ScalarError, SymbolicScalar


class SymbolicScalarArithmeticTests(SimpleTestCase):
    def test_lambda_times_inverse_is_one(self):
        self.assertEqual(scalar_mul(unit("L"), lambda_power(-1)), ONE)
        self.assertTrue(scalar_mul(lambda_power(3), lambda_power(-3)).is_constant)

    def test_group_law_cancels_theta(self):
        total = scalar_add(unit("th") + unit("tau"), scalar_neg(unit("th")))
        self.assertEqual(total, unit("tau"))
        self.assertEqual(total.to_text(), "tau")

    def test_subtraction_undoes_addition(self):
        total = unit("th") + unit("tau")
        self.assertEqual(scalar_sub(total, unit("tau")), unit("th"))
        self.assertEqual(scalar_sub(total, total), ZERO)

    def test_inverse_of_theta_affine(self):
        inverse = scalar_inv(theta_affine(1, 1))
        self.assertEqual(inverse, ONE / (1 + unit("th")))
        self.assertEqual(inverse * theta_affine(1, 1), ONE)

    def test_inverting_zero_raises_division_by_zero(self):
        with self.assertRaisesMessage(ScalarDivisionError, "division by zero"):
            scalar_inv(ZERO)
        with self.assertRaises(ZeroDivisionError):
            unit("th") / (unit("L") * lambda_power(-1) - 1)

    def test_equality_uses_cross_multiplication(self):
        left = (unit("th") ** 2 - 1) / (unit("th") - 1)
        self.assertEqual(left, unit("th") + 1)
        self.assertNotEqual(left, unit("th"))

    def test_field_axioms_on_random_scalars(self):
        rng = random.Random(11)
        for _ in range(1000):
            a, b, c = (random_scalar(rng) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a + scalar_neg(a), ZERO)
            nonzero = random_nonzero_scalar(rng)
            self.assertEqual(nonzero * scalar_inv(nonzero), ONE)


class ScalarTextTests(SimpleTestCase):
    def test_documented_syntax_parses(self):
        value = parse_scalar("(3/2 + 1/2i) * L^-2 * th * c")
        expected = SymbolicScalar.constant(Fraction(3, 2), Fraction(1, 2)) * lambda_power(-2) * unit("th") * unit("c")
        self.assertEqual(value, expected)

    def test_imaginary_literal_binds_to_fraction(self):
        self.assertEqual(parse_scalar("1/2i"), SymbolicScalar.constant(0, Fraction(1, 2)))
        self.assertEqual(parse_scalar("i * i"), SymbolicScalar.constant(-1))

    def test_text_reparses_to_equal_value(self):
        rng = random.Random(5)
        for _ in range(100):
            value = random_scalar(rng)
            self.assertEqual(parse_scalar(value.to_text()), value)

    def test_malformed_text_reports_column(self):
        with self.assertRaisesMessage(ScalarError, "column"):
            parse_scalar("th * * tau")
        with self.assertRaises(ScalarError):
            parse_scalar("x + 1")

    def test_literal_with_zero_denominator_is_rejected(self):
        with self.assertRaises(ScalarDivisionError):
            parse_scalar("1/0")

    def test_copies_share_the_immutable_value(self):
        value = unit("th") / (1 + unit("tau"))
        self.assertIs(copy.copy(value), value)
        self.assertIs(copy.deepcopy(ZERO), ZERO)
        field = ScalarField(required=False, default=ZERO)
        self.assertIs(copy.deepcopy(field).default, ZERO)

    def test_serializer_field_reports_invalid_text(self):
        field = ScalarField()
        self.assertEqual(field.to_internal_value(3), SymbolicScalar.constant(3))
        self.assertEqual(field.to_representation(unit("z")), "z")
        with self.assertRaises(Exception):
            field.to_internal_value("th +")


class EvaluateTests(SimpleTestCase):
    def test_lambda_at_quarter_is_i(self):
        value = evaluate(unit("L"), coupled_assignment(0.25))
        self.assertLess(abs(value - 1j), 1e-12)

    def test_constant_evaluates_without_assignment(self):
        self.assertEqual(evaluate(ONE, {}), 1.0)

    def test_c_tau_at_tau_i(self):
        value = evaluate(unit("c") * unit("tau"), coupled_assignment(0.3, tau=1j))
        self.assertLess(abs(value + 2 * cmath.pi), 1e-12)

    def test_missing_units_are_listed(self):
        with self.assertRaisesMessage(ScalarError, "tau, z"):
            evaluate(unit("z") * unit("tau") + unit("th"), {"th": 0.5})

    def test_evaluate_is_multiplicative(self):
        rng = random.Random(3)
        for _ in range(100):
            assignment = coupled_assignment(
                rng.uniform(0.1, 0.9),
                tau=complex(rng.uniform(-1, 1), rng.uniform(0.5, 2)),
                z=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)),
            )
            a, b = random_scalar(rng), random_scalar(rng)
            expected = evaluate(a, assignment) * evaluate(b, assignment)
            self.assertTrue(numerically_close(evaluate(a * b, assignment), expected))

    def test_numeric_tolerance_comes_from_settings(self):
        with override_settings(WORKBENCH_NUMERIC_TOLERANCE=1e-9):
            self.assertTrue(numerically_close(1 + 1e-12, 1))
            self.assertFalse(numerically_close(1 + 1e-6, 1))
        self.assertTrue(numerically_close(1 + 1e-6, 1, tolerance=1e-5))
        with override_settings(WORKBENCH_NUMERIC_TOLERANCE=1e-3):
            self.assertTrue(numerically_close(1 + 1e-6, 1))


class QuadraticSurdTests(SimpleTestCase):
    def test_documented_comparisons(self):
        self.assertEqual(surd_compare(QuadraticSurd(0, 1, 2, 1), Fraction(3, 2)), "<")
        self.assertEqual(surd_compare(QuadraticSurd(1, 0, 2, 1), 1), "=")
        self.assertEqual(surd_compare(QuadraticSurd(-1, 1, 5, 2), Fraction(1, 2)), ">")

    def test_radicand_must_be_squarefree(self):
        with self.assertRaises(ScalarError):
            QuadraticSurd(0, 1, 8, 1)
        with self.assertRaises(ScalarError):
            QuadraticSurd(0, 1, 2, 0)

    def test_surd_text_round_trip(self):
        surd = parse_surd("(-1+1*sqrt(2))/1")
        self.assertEqual(surd, QuadraticSurd(-1, 1, 2, 1))
        self.assertEqual(parse_surd(QuadraticSurd(3, -2, 7, 5).to_text()), QuadraticSurd(3, -2, 7, 5))

    def test_surd_sign(self):
        self.assertEqual(surd_sign(QuadraticSurd(-1, 1, 2, 1)), 1)
        self.assertEqual(surd_sign(QuadraticSurd(1, -1, 2, 1)), -1)
        self.assertEqual(surd_sign(QuadraticSurd(3, -2, 2, 1)), 1)
        self.assertEqual(surd_sign(QuadraticSurd(0, -1, 3, 4)), -1)

    def test_affine_sign_of_dimension(self):
        theta = QuadraticSurd(-1, 1, 2, 1)
        self.assertEqual(affine_sign(1, -1, theta), 1)
        self.assertEqual(affine_sign(0, 1, theta), 1)
        self.assertEqual(affine_sign(0, -3, theta), -1)

    def test_compare_agrees_with_high_precision_evaluation(self):
        rng = random.Random(29)
        mpmath.mp.dps = 50
        for _ in range(1000):
            surd = random_surd(rng)
            value = Fraction(rng.randint(-40, 40), rng.randint(1, 15))
            exact = (surd.p + surd.q * mpmath.sqrt(surd.D)) / surd.r
            difference = exact - mpmath.mpf(value.numerator) / value.denominator
            expected = ">" if difference > 0 else "<"
            self.assertEqual(surd_compare(surd, value), expected)
