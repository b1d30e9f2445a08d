import json
import os
import random
import tempfile

from django.test import SimpleTestCase
from sympy.polys.domains import QQ, QQ_I

from common.errors import BudgetExceeded, ContractViolation, InputError
from scalars.types import gaussian

from .catalog import SHIPPED_ALGEBRAS, SHIPPED_CATEGORIES, shipped
from .complexes import MixedComplex, count_words
from .oracles import bar_complex_hh, commutator_quotient_dimension, connes_complex_hc
from .samplers import random_chain, rescaled_algebra
from .serializers import load_presentation
from .services import (
    build_cyclic,
    connes_B,
    hc,
    hh,
    hochschild_b,
    hp,
    identity_suite,
    matrix_algebra,
    morita_check,
    sign_convention_report,
)
from .types import KOSZUL, PRINTED, AlgebraPresentation, CyclicError, DgCategoryPresentation


def write_document(directory, name, payload):
    path = os.path.join(directory, name)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(payload if isinstance(payload, str) else json.dumps(payload))
    return path


class PresentationTests(SimpleTestCase):
    def test_shipped_presentations_load(self):
        for name in SHIPPED_ALGEBRAS:
            self.assertIsInstance(shipped(name), AlgebraPresentation)
        for name in SHIPPED_CATEGORIES:
            self.assertIsInstance(shipped(name), DgCategoryPresentation)

    def test_rational_fixtures_use_rational_field(self):
        self.assertEqual(shipped("matrix2").domain, QQ)
        rescaled = rescaled_algebra(shipped("matrix2"), [1, gaussian(0, 1), 2, gaussian(1, -1)])
        self.assertEqual(rescaled.domain, QQ_I)

    def test_associativity_is_verified(self):
        with self.assertRaisesMessage(CyclicError, "not associative"):
            AlgebraPresentation(["1", "x"], None, [(0, 0, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1), (0, 1, 1, 1)])

    def test_unit_law_is_verified(self):
        with self.assertRaisesMessage(CyclicError, "unit law"):
            AlgebraPresentation(["1", "x"], [1, 0], [(0, 0, 0, 1), (0, 1, 1, 1)])

    def test_differential_degree_is_verified(self):
        with self.assertRaisesMessage(CyclicError, "wrong degree"):
            DgCategoryPresentation(
                ["*"],
                [("1", "*", "*", 0), ("e", "*", "*", 0)],
                {"*": {"1": 1}},
                [("e", "1", 1)],
                [("1", "1", "1", 1), ("1", "e", "e", 1), ("e", "1", "e", 1)],
            )

    def test_leibniz_is_verified(self):
        with self.assertRaisesMessage(CyclicError, "Leibniz"):
            DgCategoryPresentation(
                ["*"],
                [("1", "*", "*", 0), ("y", "*", "*", 0), ("e", "*", "*", -1)],
                {"*": {"1": 1}},
                [("e", "y", 1)],
                [
                    ("1", "1", "1", 1),
                    ("1", "y", "y", 1),
                    ("y", "1", "y", 1),
                    ("1", "e", "e", 1),
                    ("e", "1", "e", 1),
                    ("y", "y", "y", 1),
                ],
            )

    def test_composition_endpoints_are_verified(self):
        with self.assertRaisesMessage(CyclicError, "not composable"):
            DgCategoryPresentation(
                ["x", "y"],
                [("1x", "x", "x", 0), ("1y", "y", "y", 0), ("a", "x", "y", 0)],
                {"x": {"1x": 1}, "y": {"1y": 1}},
                [],
                [("1x", "1x", "1x", 1), ("1y", "1y", "1y", 1), ("a", "1x", "a", 1), ("1y", "a", "a", 1), ("a", "1y", "a", 1)],
            )

    def test_as_category_keeps_structure(self):
        category = shipped("path_a2").as_category()
        self.assertEqual(category.names, ("e1", "e2", "a"))
        self.assertEqual(category.objects, ("*",))
        self.assertTrue(category.is_unital)


class PresentationFileTests(SimpleTestCase):
    def test_json_errors_report_position(self):
        with tempfile.TemporaryDirectory() as directory:
            path = write_document(directory, "broken.alg", '{"basis": ["1"],\n "unit": [1,]}')
            with self.assertRaisesMessage(InputError, "line 2 column"):
                load_presentation(path)

    def test_field_errors_name_the_field(self):
        with tempfile.TemporaryDirectory() as directory:
            path = write_document(directory, "short.alg", {"basis": ["1"], "unit": [1], "mult": [[0, 0, 1]]})
            with self.assertRaisesMessage(InputError, "Expected a list of 4 entries"):
                load_presentation(path)

            path = write_document(directory, "range.alg", {"basis": ["1"], "unit": [1], "mult": [[0, 0, 5, 1]]})
            with self.assertRaisesMessage(InputError, "presentation: mult: index 5 is outside the basis."):
                load_presentation(path)

            path = write_document(directory, "symbolic.alg", {"basis": ["1"], "unit": ["th"], "mult": [[0, 0, 0, 1]]})
            with self.assertRaisesMessage(InputError, "unit"):
                load_presentation(path)

    def test_gaussian_coefficients_parse(self):
        with tempfile.TemporaryDirectory() as directory:
            path = write_document(
                directory,
                "scaled.alg",
                {"basis": ["u"], "unit": ["-i"], "mult": [[0, 0, 0, "i"]]},
            )
            algebra = load_presentation(path)
        self.assertEqual(algebra.domain, QQ_I)
        self.assertEqual(hh(algebra, 2).dimensions, (1, 0, 0))


class CyclicModuleTests(SimpleTestCase):
    def test_field_module_is_trivial(self):
        module = build_cyclic(shipped("field"), 2)
        self.assertEqual(module.dimension(2), 1)
        identity = [[QQ.one]]
        for i in range(3):
            self.assertEqual(module.face(2, i).to_lists(), identity)
        self.assertEqual(module.cyclic_operator(2).to_lists(), identity)

    def test_one_object_category_matches_algebra(self):
        for name in SHIPPED_ALGEBRAS:
            algebra = shipped(name)
            left = build_cyclic(algebra, 3)
            right = build_cyclic(algebra.as_category(), 3)
            self.assertEqual(left.words, right.words)
            for n in range(1, 4):
                for i in range(n + 1):
                    self.assertEqual(left.face(n, i), right.face(n, i))
            for n in range(4):
                self.assertEqual(left.cyclic_operator(n), right.cyclic_operator(n))
            for n in range(3):
                self.assertEqual(left.connes_operator(n), right.connes_operator(n))

        field_file = build_cyclic(shipped("field_category"), 3)
        field = build_cyclic(shipped("field"), 3)
        for n in range(1, 4):
            self.assertEqual(hochschild_b(field_file)[n], hochschild_b(field)[n])

    def test_cyclic_sign_on_graded_word(self):
        module = build_cyclic(shipped("square_zero"), 2)
        word = (0, 0, 1)  # (1, 1, e) with the degree one morphism last
        rotated = (1, 0, 0)
        t = module.cyclic_operator(2)
        column = module.words[2].index(word)
        row = module.words[2].index(rotated)
        self.assertEqual(t.rows[row][column], QQ.one)

        odd = build_cyclic(shipped("square_zero"), 1).cyclic_operator(1)
        words = build_cyclic(shipped("square_zero"), 1).words[1]
        # (e, e) rotates to itself with sign (-1)^(1 + 1*1)
        self.assertEqual(odd.rows[words.index((1, 1))][words.index((1, 1))], QQ.one)

    def test_word_count_matches_enumeration(self):
        for name in ("matrix2", "quiver_a2"):
            module = build_cyclic(shipped(name), 3)
            for n in range(4):
                self.assertEqual(count_words(shipped(name), n), module.dimension(n))
        self.assertEqual(build_cyclic(shipped("quiver_a2"), 2).dimension(2), 2)

    def test_budget_exceeded_reports_dimension(self):
        with self.assertRaises(BudgetExceeded) as caught:
            build_cyclic(shipped("matrix2"), 3, budget=100)
        self.assertEqual(caught.exception.dimension, 256)
        self.assertEqual(caught.exception.exit_status, 2)

    def test_budget_comes_from_settings(self):
        with self.settings(WORKBENCH_TERM_BUDGET=10):
            with self.assertRaises(BudgetExceeded):
                build_cyclic(shipped("matrix2"), 2)

    def test_connes_operator_needs_unit(self):
        algebra = AlgebraPresentation(["x"], None, [])
        module = build_cyclic(algebra, 2)
        with self.assertRaisesMessage(CyclicError, "non-unital"):
            connes_B(module)
        self.assertEqual(hh(algebra, 1).dimensions, (1, 1))


class IdentitySuiteTests(SimpleTestCase):
    def test_shipped_presentations_pass_through_degree_five(self):
        for name in SHIPPED_ALGEBRAS + SHIPPED_CATEGORIES:
            report = identity_suite(build_cyclic(shipped(name), 5))
            self.assertTrue(report.holds, f"{name}: {report.failures}")

    def test_differential_checks_run_for_dg_input(self):
        report = identity_suite(build_cyclic(shipped("contractible"), 4))
        names = {name for name, _, _ in report.checks}
        self.assertIn("b_delta_anticommute", names)
        self.assertIn("B_delta_anticommute", names)
        self.assertTrue(report.holds)

    def test_boundary_squares_to_zero_on_random_chains(self):
        rng = random.Random(7)
        module = build_cyclic(shipped("dual_numbers"), 4)
        b = hochschild_b(module)
        for _ in range(20):
            n = rng.randint(2, 4)
            chain = random_chain(rng, dimension=module.dimension(n), domain=module.domain)
            self.assertEqual(b[n - 1].apply(b[n].apply(chain)), {})

    def test_printed_sign_reading_is_reported(self):
        reports = sign_convention_report(shipped("field"), 3)
        self.assertTrue(reports[KOSZUL].holds)
        self.assertFalse(reports[PRINTED].holds_for("b_squared"))
        self.assertTrue(reports[PRINTED].holds_for("t_order"))

    def test_printed_sign_reading_refuses_homology(self):
        with self.assertRaises(ContractViolation):
            hh(shipped("field"), 2, convention=PRINTED)


class HochschildTests(SimpleTestCase):
    def test_field(self):
        result = hh(shipped("field"), 3)
        self.assertEqual(result.dimensions, (1, 0, 0, 0))
        self.assertEqual(result.exact_through, 3)
        self.assertEqual(result.field, "QQ")

    def test_dual_numbers_degree_zero(self):
        self.assertEqual(hh(shipped("dual_numbers"), 1).dimension(0), 2)

    def test_degree_zero_is_commutator_quotient(self):
        for name in SHIPPED_ALGEBRAS:
            algebra = shipped(name)
            self.assertEqual(hh(algebra, 0).dimension(0), commutator_quotient_dimension(algebra), name)

    def test_bar_complex_oracle(self):
        for name in ("field", "dual_numbers", "split_pair", "path_a2"):
            algebra = shipped(name)
            self.assertEqual(hh(algebra, 3).dimensions, bar_complex_hh(algebra, 3), name)

    def test_matrix_algebra_matches_field(self):
        self.assertEqual(hh(shipped("matrix2"), 3).dimensions, hh(shipped("field"), 3).dimensions)

    def test_gaussian_rescaling_keeps_dimensions(self):
        algebra = rescaled_algebra(shipped("matrix2"), [1, gaussian(0, 1), 2, gaussian(1, -1)])
        result = hh(algebra, 2)
        self.assertEqual(result.dimensions, (1, 0, 0))
        self.assertEqual(result.field, "QQ_I")

    def test_quiver_category_matches_path_algebra(self):
        self.assertEqual(hh(shipped("quiver_a2"), 2).dimensions, (2, 0, 0))
        self.assertEqual(hh(shipped("path_a2"), 2).dimensions, (2, 0, 0))

    def test_contractible_dg_algebra(self):
        result = hh(shipped("contractible"), 3)
        self.assertEqual(result.dimensions, (0, 0, 0, 0))
        self.assertEqual(result.exact_through, 3)

    def test_positive_degrees_are_windowed(self):
        module = build_cyclic(shipped("square_zero"), 3)
        self.assertIsNone(MixedComplex(module).exact_through)
        self.assertIsNone(hh(shipped("square_zero"), 2).exact_through)


class CyclicHomologyTests(SimpleTestCase):
    def test_field(self):
        self.assertEqual(hc(shipped("field"), 4).dimensions, (1, 0, 1))

    def test_connes_complex_oracle(self):
        self.assertEqual(connes_complex_hc(shipped("field"), 3), (1, 0, 1, 0))
        for name in ("field", "dual_numbers", "split_pair", "path_a2"):
            algebra = shipped(name)
            self.assertEqual(hc(algebra, 5).dimensions, connes_complex_hc(algebra, 3), name)

    def test_matrix_algebra_degree_zero(self):
        algebra = shipped("matrix2")
        self.assertEqual(hc(algebra, 2).dimension(0), commutator_quotient_dimension(algebra))
        self.assertEqual(hc(algebra, 2).dimension(0), 1)

    def test_zero_algebra(self):
        self.assertEqual(hc(AlgebraPresentation([], [], []), 4).dimensions, (0, 0, 0))

    def test_contractible_dg_algebra(self):
        self.assertEqual(hc(shipped("contractible"), 4).dimensions, (0, 0, 0))

    def test_small_window_is_rejected(self):
        with self.assertRaises(CyclicError):
            hc(shipped("field"), 1)


class PeriodicHomologyTests(SimpleTestCase):
    def test_field_stabilizes(self):
        result = hp(shipped("field"), 6)
        self.assertTrue(result.stabilized)
        self.assertEqual(result.dimension("even"), 1)
        self.assertEqual(result.dimension("odd"), 0)

    def test_field_stabilizes_in_the_smallest_window(self):
        result = hp(shipped("field"), 4)
        self.assertTrue(result.stabilized)
        self.assertEqual(result.dimensions, (1, 0))

    def test_matrix_algebra_in_the_smallest_window(self):
        self.assertEqual(hp(shipped("matrix2"), 4).dimensions, (1, 0))

    def test_positive_degrees_never_stabilize(self):
        self.assertFalse(hp(shipped("square_zero"), 4).stabilized)

    def test_window_must_be_four(self):
        with self.assertRaises(CyclicError):
            hp(shipped("field"), 3)


class MoritaTests(SimpleTestCase):
    def test_matrix_algebra_structure(self):
        matrices = matrix_algebra(shipped("dual_numbers"), 2)
        self.assertEqual(matrices.dimension, 8)
        self.assertEqual(matrices.basis[:2], ("E00.1", "E00.x"))
        self.assertEqual(commutator_quotient_dimension(matrices), 2)

    def test_field(self):
        self.assertTrue(morita_check(shipped("field"), 2, 4).holds)
        self.assertTrue(morita_check(shipped("field"), 1, 2).holds)

    def test_dual_numbers(self):
        report = morita_check(shipped("dual_numbers"), 2, 3)
        self.assertTrue(report.holds)
        self.assertEqual(report.hh_matrix.dimension(0), 2)

    def test_field_through_degree_four(self):
        report = morita_check(shipped("field"), 2, 6)
        self.assertTrue(report.holds)
        self.assertEqual(report.hc_matrix.dimensions, (1, 0, 1, 0, 1))
        self.assertEqual(report.hh_matrix.dimensions, (1, 0, 0, 0, 0, 0))

    def test_dual_numbers_through_degree_three(self):
        report = morita_check(shipped("dual_numbers"), 2, 4)
        self.assertTrue(report.holds)
        self.assertEqual(report.hh_matrix.dimensions, (2, 1, 1, 1))

    def test_budget_applies_to_matrix_side(self):
        with self.assertRaises(BudgetExceeded):
            morita_check(shipped("dual_numbers"), 3, 3, budget=1000)

    def test_matrix_algebra_needs_algebra(self):
        with self.assertRaises(CyclicError):
            matrix_algebra(shipped("field_category"), 2)
