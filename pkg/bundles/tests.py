import json
import os
import random
import tempfile
from fractions import Fraction
from unittest.mock import patch

from django.conf import settings
from django.test import SimpleTestCase

from common.errors import ContractViolation
from nctorus.matrices import NCMatrix
from nctorus.samplers import random_monomial_element
from nctorus.services import delta_matrix
from nctorus.types import U1, U2, NCElement
from scalars.services import coupled_assignment, unit
from scalars.types import ONE, ZERO, SymbolicScalar

from .samplers import LEIBNIZ_CHARGES, random_lift_problem, random_section
from .serializers import LiftProblemSerializer, SectionSerializer, load_section
from .services import (
    act,
    assert_representable,
    finite_difference_residual,
    free_leibniz_residual,
    free_module_connection,
    intertwining_residual,
    leibniz_check,
    lift_connection,
    module_law_residual,
    nabla_free,
    nabla_z,
    section_term,
)
from .types import BundleError, FreeConnection, GaussJet, HeisenbergCharge

c, tau, z = unit("c"), unit("tau"), unit("z")


class HeisenbergChargeTests(SimpleTestCase):
    def test_slope_and_translation_are_reciprocal(self):
        ch = HeisenbergCharge(1, 2)
        self.assertEqual(ch.mu * ch.epsilon, ONE)
        self.assertEqual(ch.dim, 1 + 2 * unit("th"))

    def test_zero_charge_is_rejected(self):
        with self.assertRaises(BundleError):
            HeisenbergCharge(0, 0)

    def test_free_charge_has_no_sections(self):
        with self.assertRaises(BundleError):
            act(GaussJet.constant(1, 0), U1, HeisenbergCharge(2, 0))


class ActionTests(SimpleTestCase):
    def test_unit_acts_trivially(self):
        ch = HeisenbergCharge(1, 2)
        f = random_section(random.Random(1), ch)
        self.assertEqual(act(f, 1, ch), f)

    def test_u2_multiplies_by_phase(self):
        ch = HeisenbergCharge(1, 3)
        expected = GaussJet(3, {2: [section_term([1], ZERO, c, -c * Fraction(2, 3))]})
        self.assertEqual(act(GaussJet.constant(3, 2), U2, ch), expected)

    def test_u1_moves_residue_and_translates(self):
        ch = HeisenbergCharge(1, 2)
        f = GaussJet(2, {0: [section_term([0, 1])]})
        expected = GaussJet(2, {1: [section_term([-ch.epsilon, 1])]})
        self.assertEqual(act(f, U1, ch), expected)

    def test_module_law_on_generator_pairs(self):
        for n, m in LEIBNIZ_CHARGES:
            ch = HeisenbergCharge(n, m)
            f = random_section(random.Random(n * 10 + m), ch)
            for a, b in ((U1, U2), (U2, U1), (U2, U2.inverse()), (U1.inverse(), U2)):
                self.assertTrue(module_law_residual(f, a, b, ch).is_zero, (n, m))

    def test_module_law_on_random_monomials(self):
        rng = random.Random(2)
        for _ in range(25):
            ch = HeisenbergCharge(*rng.choice(LEIBNIZ_CHARGES))
            f = random_section(rng, ch, max_terms=1, max_degree=1)
            a = random_monomial_element(rng)
            b = random_monomial_element(rng)
            self.assertTrue(module_law_residual(f, a, b, ch).is_zero)

    def test_results_stay_representable(self):
        ch = HeisenbergCharge(2, -1)
        f = random_section(random.Random(3), ch)
        assert_representable(act(f, U1 + U2, ch))
        assert_representable(nabla_z(f, ch))


class NablaTests(SimpleTestCase):
    def test_zero_section(self):
        ch = HeisenbergCharge(1, 1)
        self.assertTrue(nabla_z(GaussJet.zero(1), ch).is_zero)

    def test_constant_section(self):
        ch = HeisenbergCharge(1, 2)
        expected = GaussJet(2, {1: [section_term([c * z, c * tau * ch.mu])]})
        self.assertEqual(nabla_z(GaussJet.constant(2, 1), ch), expected)

    def test_exponential_section(self):
        ch = HeisenbergCharge(1, 1)
        s = SymbolicScalar.constant(3, -1)
        f = GaussJet(1, {0: [section_term([1], ZERO, s)]})
        expected = GaussJet(1, {0: [section_term([s + c * z, c * tau * ch.mu], ZERO, s)]})
        self.assertEqual(nabla_z(f, ch), expected)

    def test_leibniz_for_unit_and_constant_section(self):
        ch = HeisenbergCharge(1, 1)
        self.assertTrue(leibniz_check(GaussJet.constant(1, 0), 1, ch).is_zero)
        self.assertTrue(leibniz_check(GaussJet.constant(1, 0), U1, ch).is_zero)

    def test_leibniz_gate_on_sampled_charges(self):
        rng = random.Random(4)
        for n, m in LEIBNIZ_CHARGES:
            ch = HeisenbergCharge(n, m)
            for a in (U1, U2, U1 * U2):
                for _ in range(3):
                    f = random_section(rng, ch)
                    self.assertTrue(leibniz_check(f, a, ch).is_zero, (n, m, a.to_text()))

    def test_leibniz_with_numeric_z(self):
        ch = HeisenbergCharge(1, 2)
        f = random_section(random.Random(5), ch)
        point = SymbolicScalar.constant(Fraction(1, 3), 2)
        self.assertTrue(leibniz_check(f, U2.inverse() * U1, ch, point).is_zero)

    def test_matches_finite_differences(self):
        rng = random.Random(6)
        assignment = coupled_assignment(0.6180339887498949, tau=0.3 + 1.1j, z=0.2 - 0.4j)
        for n, m in LEIBNIZ_CHARGES:
            ch = HeisenbergCharge(n, m)
            f = random_section(rng, ch)
            for step in range(10):
                x = -1.5 + step / 3
                for alpha in range(ch.modulus):
                    self.assertLess(
                        finite_difference_residual(f, ch, alpha, x, assignment),
                        settings.WORKBENCH_FINITE_DIFFERENCE_TOLERANCE,
                    )


class SectionSerializerTests(SimpleTestCase):
    def test_terms_become_section(self):
        serializer = SectionSerializer(data={"items": [
            {"alpha": 1, "poly": ["1", "th"], "q2": "-1/2"},
            {"alpha": 0, "poly": [2]},
        ]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        section = serializer.to_section(2)
        self.assertEqual(section.term_count(), 2)
        self.assertEqual(
            section,
            GaussJet(2, {
                1: [section_term([1, unit("th")], SymbolicScalar.constant(Fraction(-1, 2)))],
                0: [section_term([2])],
            }),
        )

    def test_residue_outside_modulus(self):
        serializer = SectionSerializer(data={"items": [{"alpha": 3, "poly": ["1"]}]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        with self.assertRaises(BundleError):
            serializer.to_section(2)

    def test_section_file_with_default_exponents(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "section.json")
            with open(path, "w", encoding="utf-8") as handle:
                json.dump([{"alpha": 0, "poly": ["1"], "q2": "-1/2"}, {"alpha": 0, "poly": ["th"]}], handle)
            section = load_section(path, 1)
            again = load_section(path, 1)
        expected = GaussJet(1, {0: [
            section_term([1], SymbolicScalar.constant(Fraction(-1, 2))),
            section_term([unit("th")]),
        ]})
        self.assertEqual(section, expected)
        self.assertEqual(again, expected)


class FreeConnectionTests(SimpleTestCase):
    def test_rank_one_standard_structure(self):
        conn = free_module_connection(1)
        self.assertEqual(nabla_free(NCMatrix.column([U1]), conn), NCMatrix.column([U1 * (c * tau) + U1 * (c * z)]))

    def test_zero_structure_kills_unit(self):
        conn = FreeConnection(NCMatrix.zeros(1, 1))
        self.assertTrue(nabla_free(NCMatrix.column([1]), conn).is_zero)

    def test_rank_two_matches_entrywise_expansion(self):
        B = NCMatrix([[U1, 2], [unit("th"), U2 * U1]])
        v = NCMatrix.column([U2 + 1, U1.inverse()])
        expected = NCMatrix.column([
            U2 * c + U1 * (U2 + 1) + 2 * U1.inverse(),
            U1.inverse() * (-c * tau) + (U2 + 1) * unit("th") + U2 * U1 * U1.inverse(),
        ])
        self.assertEqual(nabla_free(v, FreeConnection(B)), expected)
        self.assertTrue(free_leibniz_residual(v, U1 * U2 + 3, FreeConnection(B)).is_zero)

    def test_dimension_mismatch(self):
        with self.assertRaises(BundleError):
            nabla_free(NCMatrix.column([1, 1]), free_module_connection(1))


class LiftConnectionTests(SimpleTestCase):
    def test_projection_onto_first_factor(self):
        F = NCMatrix([[1, 0]])
        S = NCMatrix([[1], [0]])
        B2 = NCMatrix([[c * z]])
        B1 = lift_connection(F, S, B2)
        self.assertEqual(B1, NCMatrix([[c * z, 0], [0, 0]]))
        self.assertEqual(F @ B1, NCMatrix([[c * z, 0]]))

    def test_identity_surjection_returns_target(self):
        B2 = NCMatrix([[U1, c], [0, U2]])
        self.assertEqual(lift_connection(NCMatrix.identity(2), NCMatrix.identity(2), B2), B2)

    def test_nontrivial_section(self):
        F = NCMatrix([[U1, 1]])
        S = NCMatrix([[0], [1]])
        B1 = lift_connection(F, S, NCMatrix.zeros(1, 1))
        self.assertEqual(B1, NCMatrix([[0, 0], [U1 * (c * tau), 0]]))
        self.assertEqual(F @ B1, delta_matrix(F))

    def test_rejects_non_section(self):
        with self.assertRaisesMessage(BundleError, "not a section"):
            lift_connection(NCMatrix([[1, 0]]), NCMatrix([[0], [1]]), NCMatrix.zeros(1, 1))
        with self.assertRaises(BundleError):
            lift_connection(NCMatrix([[1, 0]]), NCMatrix([[1, 0]]), NCMatrix.zeros(1, 1))

    def test_random_problems_intertwine(self):
        rng = random.Random(8)
        for _ in range(30):
            F, S, B2 = random_lift_problem(rng)
            B1 = lift_connection(F, S, B2)
            self.assertTrue(intertwining_residual(F, FreeConnection(B1), FreeConnection(B2)).is_zero)

    def test_post_check_failure_is_a_contract_violation(self):
        F = NCMatrix([[1, 0]])
        S = NCMatrix([[1], [0]])
        with patch.object(NCMatrix, "__matmul__", autospec=True, side_effect=_sabotaged_product):
            with self.assertRaises(ContractViolation):
                lift_connection(F, S, NCMatrix([[c]]))

    def test_serializer_reads_lift_problem(self):
        serializer = LiftProblemSerializer(data={"F": [["U1", "1"]], "S": [["0"], ["1"]], "B2": [["0"]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["F"], NCMatrix([[U1, 1]]))


def _sabotaged_product(left, right):
    """Plain matrix product, off by U2 in the first entry of F B1."""
    rows = [
        [sum((row[k] * right.rows[k][j] for k in range(len(row))), NCElement()) for j in range(right.shape[1])]
        for row in left.rows
    ]
    product = NCMatrix(rows)
    if left.shape == (1, 2) and right.shape == (2, 2):
        return product + NCMatrix([[U2, 0]])
    return product
