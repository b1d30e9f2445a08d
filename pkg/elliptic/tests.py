import random

from django.test import SimpleTestCase

from bundles.types import HeisenbergCharge
from scalars.types import QuadraticSurd

from .samplers import random_object, random_theta
from .serializers import FormalObjectSerializer, ThetaField
from .services import (
    axiom_report,
    charge_to_heisenberg,
    classify,
    dual_adjunction_check,
    euler_form,
    ext_dim,
    graded_hom_dimension,
    heart_member,
    heart_to_heisenberg,
    hom_dimension,
    hom_dims,
    hom_vanishing_check,
    in_ge,
    in_le,
    k0_class,
    splitting_check,
    truncate,
    truncation_adjunction_check,
)
from .types import ABOVE, AT_OR_BELOW, Charge, EllipticError, FormalObject, StablePiece, Summand, Theta

THETA = Theta(QuadraticSurd(-1, 1, 2, 1))


def piece(r, d, label=""):
    return StablePiece(Charge(r, d), label)


def obj(*summands):
    return FormalObject(Summand(k, piece(r, d), 1) for k, r, d in summands)


class ClassifyTests(SimpleTestCase):
    def test_slopes_against_theta(self):
        self.assertEqual(classify(Charge(1, 1), THETA), ABOVE)
        self.assertEqual(classify(Charge(0, 3), THETA), ABOVE)
        self.assertEqual(classify(Charge(2, 0), THETA), AT_OR_BELOW)

    def test_theta_must_be_irrational(self):
        with self.assertRaises(EllipticError):
            Theta(QuadraticSurd(1, 0, 2, 3))

    def test_charges_validate(self):
        with self.assertRaises(EllipticError):
            Charge(0, 0)
        with self.assertRaises(EllipticError):
            piece(2, 4)


class HomTests(SimpleTestCase):
    def test_euler_form(self):
        self.assertEqual(euler_form(Charge(1, 0), Charge(1, 1)), 1)
        self.assertEqual(euler_form(Charge(2, 3), Charge(2, 3)), 0)
        self.assertEqual(euler_form(Charge(0, 1), Charge(1, 0)), -1)

    def test_hom_dims(self):
        self.assertEqual(hom_dims(piece(1, 0), piece(1, 0)), (1, 1))
        self.assertEqual(hom_dims(piece(1, 0), piece(1, 1)), (1, 0))
        self.assertEqual(hom_dims(piece(1, 1), piece(1, 0)), (0, 1))
        self.assertEqual(hom_dims(piece(1, 0, "a"), piece(1, 0, "b")), (0, 0))

    def test_ext_dim_by_degree(self):
        A, B = piece(1, 1), piece(1, 0)
        self.assertEqual(ext_dim(A, B, 0), 0)
        self.assertEqual(ext_dim(A, B, 1), 1)
        self.assertEqual(ext_dim(B, A, 0), 1)
        self.assertEqual(ext_dim(A, B, 2), 0)
        self.assertEqual(ext_dim(A, B, -1), 0)

    def test_graded_hom_dimension(self):
        X, Y = obj((0, 1, 1)), obj((0, 1, 0))
        self.assertEqual(hom_dimension(X, Y), 0)
        self.assertEqual([graded_hom_dimension(X, Y, k) for k in (-1, 0, 1, 2)], [0, 0, 1, 0])
        self.assertEqual(graded_hom_dimension(X, Y, 1), hom_dimension(X, Y.shift(1)))

    def test_riemann_roch_identity(self):
        rng = random.Random(1)
        for _ in range(200):
            a = random_object(rng, max_summands=1)
            b = random_object(rng, max_summands=1)
            if a.is_empty or b.is_empty:
                continue
            A, B = a.summands[0].piece, b.summands[0].piece
            hom, ext1 = hom_dims(A, B)
            self.assertEqual(hom - ext1, euler_form(A.charge, B.charge))


class TruncationTests(SimpleTestCase):
    def test_documented_partitions(self):
        X0, X1 = truncate(obj((0, 1, 1), (0, 1, 0)), THETA)
        self.assertEqual(X0, obj((0, 1, 1)))
        self.assertEqual(X1, obj((0, 1, 0)))

        X = obj((-2, 1, 0), (-2, 0, 1))
        self.assertEqual(truncate(X, THETA), (X, FormalObject()))

        X = FormalObject.from_charge(1, 0, 2)
        self.assertEqual(truncate(X, THETA), (FormalObject(), X))

    def test_heart_membership(self):
        self.assertTrue(heart_member(obj((0, 1, 1)), THETA))
        self.assertTrue(heart_member(obj((-1, 1, 0)), THETA))
        self.assertFalse(heart_member(obj((0, 1, 0)), THETA))

    def test_k0_classes(self):
        self.assertEqual(k0_class(obj((0, 1, 1))), (1, 1))
        self.assertEqual(k0_class(obj((1, 1, 1))), (-1, -1))
        X = obj((0, 2, 3), (2, 0, 1))
        self.assertEqual(k0_class(X + X.shift(1)), (0, 0))

    def test_random_objects_split(self):
        rng = random.Random(2)
        for _ in range(200):
            X, theta = random_object(rng), random_theta(rng)
            report = splitting_check(X, theta)
            self.assertTrue(report.holds)
            X0, X1 = truncate(X, theta)
            self.assertEqual(truncate(X0, theta), (X0, FormalObject()))
            self.assertTrue(in_le(X0.shift(1), 0, theta))
            self.assertTrue(in_ge(X1.shift(-1), 1, theta))

    def test_empty_object_splits(self):
        report = splitting_check(FormalObject(), THETA)
        self.assertEqual((report.whole, report.lower, report.upper), ((0, 0), (0, 0), (0, 0)))


class AxiomTests(SimpleTestCase):
    def test_hom_vanishing_between_truncation_classes(self):
        self.assertEqual(hom_vanishing_check(obj((0, 1, 1)), obj((1, 1, 0)), THETA).total, 0)
        self.assertEqual(hom_vanishing_check(obj((0, 1, 1)), obj((2, 1, 0)), THETA).total, 0)
        self.assertEqual(hom_vanishing_check(obj((0, 2, 1)), obj((1, 2, 1)), THETA).total, 0)

    def test_membership_is_enforced(self):
        with self.assertRaisesMessage(EllipticError, "membership"):
            hom_vanishing_check(obj((1, 1, 1)), obj((1, 1, 0)), THETA)

    def test_adjunction_documented_case(self):
        report = truncation_adjunction_check(obj((0, 1, 1)), obj((0, 1, 1), (1, 1, 0)), 0, THETA)
        self.assertTrue(report.holds)
        self.assertIn((0, 1, 1), report.rows)

    def test_adjunction_precondition(self):
        with self.assertRaises(EllipticError):
            truncation_adjunction_check(obj((1, 1, 1)), obj((0, 1, 1)), 0, THETA)

    def test_random_adjunctions(self):
        rng = random.Random(3)
        for _ in range(150):
            theta, n = random_theta(rng), rng.randint(-1, 1)
            X, _ = truncate(random_object(rng), theta, n)
            Y = random_object(rng)
            self.assertTrue(truncation_adjunction_check(X, Y, n, theta).holds)
            _, W = truncate(random_object(rng), theta, n - 1)
            self.assertTrue(dual_adjunction_check(W, Y, n, theta).holds)

    def test_axiom_report_on_random_objects(self):
        rng = random.Random(4)
        for _ in range(100):
            self.assertTrue(axiom_report(random_object(rng), random_theta(rng)).holds)


class HeartChargeTests(SimpleTestCase):
    def test_documented_charges(self):
        self.assertEqual(charge_to_heisenberg(Summand(0, piece(1, 1)), THETA), HeisenbergCharge(1, -1))
        self.assertEqual(charge_to_heisenberg(Summand(0, piece(0, 1)), THETA), HeisenbergCharge(1, 0))
        self.assertEqual(charge_to_heisenberg(Summand(-1, piece(1, 0)), THETA), HeisenbergCharge(0, 1))

    def test_non_heart_piece(self):
        with self.assertRaises(EllipticError):
            charge_to_heisenberg(Summand(0, piece(1, 0)), THETA)
        with self.assertRaises(EllipticError):
            heart_to_heisenberg(obj((1, 1, 1)), THETA)

    def test_heart_pieces_have_positive_dimension(self):
        rng = random.Random(5)
        for _ in range(200):
            theta = random_theta(rng)
            summands = []
            for s in random_object(rng):
                k = 0 if classify(s.piece.charge, theta) == ABOVE else -1
                summands.append(Summand(k, s.piece, s.mult))
            heart = FormalObject(summands)
            self.assertTrue(heart_member(heart, theta))
            for charge, mult in heart_to_heisenberg(heart, theta):
                self.assertGreater(float(charge.n) + charge.m * float(theta), 0)


class ObjectSerializerTests(SimpleTestCase):
    def test_semistable_charge_is_split(self):
        serializer = FormalObjectSerializer(data={"items": [
            {"k": 0, "r": 2, "d": 2, "label": "a"},
            {"k": 1, "r": 0, "d": 3},
        ]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        X = serializer.to_object()
        self.assertEqual(X.summands, (
            Summand(0, piece(1, 1, "a"), 2),
            Summand(1, piece(0, 1), 3),
        ))

    def test_torsion_needs_positive_degree(self):
        serializer = FormalObjectSerializer(data={"items": [{"k": 0, "r": 0, "d": -1}]})
        self.assertFalse(serializer.is_valid())

    def test_theta_field(self):
        self.assertEqual(ThetaField().to_internal_value("(-1 + 1*sqrt(2))/1"), THETA)
        with self.assertRaises(Exception):
            ThetaField().to_internal_value("(1 + 0*sqrt(2))/1")
