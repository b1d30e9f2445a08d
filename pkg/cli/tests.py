import json
import os
import tempfile
from io import StringIO
from types import SimpleNamespace
from unittest.mock import patch

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from common.errors import InputError
from nctorus.grammar import parse_element
from nctorus.types import U1, NCElement
from scalars.grammar import parse_scalar
from scalars.services import lambda_power, unit

from .records import parse_records, render_records, render_table
from .runner import SUBCOMMANDS, run
from .suites import SUITES, SuiteResult, run_suite, scaled

THETA = "(-1+1*sqrt(2))/1"

# theta = sqrt(2) - 1: (1,1) lies above theta, (1,0) at or below it.
MIXED_OBJECT = [
    {"k": 0, "r": 1, "d": 1},
    {"k": 0, "r": 1, "d": 0},
    {"k": -1, "r": 2, "d": 0},
]


def invoke(*argv):
    stdout, stderr = StringIO(), StringIO()
    with patch("sys.stderr", new_callable=StringIO):
        status = run(list(argv), stdout=stdout, stderr=stderr)
    return status, stdout.getvalue(), stderr.getvalue()


class DocumentMixin:
    def setUp(self):
        super().setUp()
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def document(self, name, payload):
        path = os.path.join(self.directory.name, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(payload if isinstance(payload, str) else json.dumps(payload))
        return path


class RecordsTests(SimpleTestCase):
    def test_header_line(self):
        lines = render_records("nc-mul", [{"m": 1, "n": 1, "coeff": "L^-1"}])
        self.assertEqual(lines[0], '{"format":"ncworkbench-records","version":1,"command":"nc-mul"}')
        self.assertEqual(lines[1], '{"m":1,"n":1,"coeff":"L^-1"}')

    def test_parse_inverts_render(self):
        records = [{"degree": 0, "dimension": 1}, {"degree": 1, "dimension": None}]
        header, parsed = parse_records("\n".join(render_records("hh", records)))
        self.assertEqual(header["command"], "hh")
        self.assertEqual(parsed, records)

    def test_parse_rejects_foreign_streams(self):
        with self.assertRaisesMessage(InputError, "unknown format"):
            parse_records('{"format":"other","version":1}')
        with self.assertRaisesMessage(InputError, "line 2"):
            parse_records('{"format":"ncworkbench-records","version":1}\n{oops')

    def test_table_alignment(self):
        lines = render_table([{"k": 0, "holds": True}, {"k": -12, "holds": False}], ("k", "holds"))
        self.assertEqual(lines, ["k    holds", "0    yes", "-12  no"])


class RunTests(DocumentMixin, SimpleTestCase):
    def test_reordered_product(self):
        status, out, _ = invoke("nc-mul", "U2*U1")
        self.assertEqual(status, 0)
        self.assertEqual(out.splitlines()[0], "L^-1 * U1*U2")

    def test_product_records_reparse(self):
        status, out, _ = invoke("nc-mul", "U2", "U1", "--format", "records")
        self.assertEqual(status, 0)
        header, records = parse_records(out)
        self.assertEqual(header["command"], "nc-mul")
        self.assertEqual(len(records), 1)
        self.assertEqual((records[0]["m"], records[0]["n"]), (1, 1))
        self.assertEqual(parse_scalar(records[0]["coeff"]), lambda_power(-1))

    def test_structured_output_is_deterministic(self):
        first = invoke("derivation-check", "--random", "3", "--seed", "7", "--format", "records")
        second = invoke("derivation-check", "--random", "3", "--seed", "7", "--format", "records")
        self.assertEqual(first, second)
        self.assertEqual(first[0], 0)
        _, records = parse_records(first[1])
        self.assertEqual(records[-1], {"contract": "derivation and trace", "holds": True})

    def test_unknown_subcommand_and_flag(self):
        self.assertEqual(invoke("nc-div", "U1")[0], 2)
        self.assertEqual(invoke("nc-mul", "U1", "--colour")[0], 2)
        self.assertEqual(invoke()[0], 2)

    def test_malformed_expression_names_the_operand(self):
        status, _, err = invoke("nc-mul", "U3*U1")
        self.assertEqual(status, 2)
        self.assertIn("operands", err)

    def test_every_subcommand_is_installed(self):
        for name in SUBCOMMANDS:
            with patch("sys.stdout", new_callable=StringIO) as help_text:
                status, _, _ = invoke(name, "--help")
            self.assertEqual(status, 0, name)
            self.assertIn("--format", help_text.getvalue())

    def test_element_files(self):
        path = self.document("a.json", [{"m": 0, "n": 1, "coeff": "2"}])
        status, out, _ = invoke("nc-delta", path, "--files", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual(parse_scalar(records[0]["coeff"]), unit("c") * 2)

    def test_delta_evaluation_needs_tau(self):
        self.assertEqual(invoke("nc-delta", "U1", "--theta", THETA)[0], 2)
        status, out, _ = invoke("nc-delta", "U2", "--theta", THETA, "--tau", "0.5+1j", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        real, imag = records[0]["value"]
        self.assertAlmostEqual(real, 0.0)
        self.assertAlmostEqual(imag, 6.283185307179586)

    def test_derivation_check_on_a_pair(self):
        self.assertEqual(invoke("derivation-check", "U1^2 + th*U2", "U2^-1*U1")[0], 0)
        self.assertEqual(invoke("derivation-check", "U1")[0], 2)

    def test_leibniz_check(self):
        status, out, _ = invoke("leibniz-check", "--charge", "1", "2", "--samples", "2", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual(len(records), 7)
        self.assertTrue(all(record["holds"] for record in records))

    def test_leibniz_check_rejects_free_charge(self):
        status, _, err = invoke("leibniz-check", "--charge", "2", "0")
        self.assertEqual(status, 2)
        self.assertIn("charge", err)

    def test_leibniz_check_with_section_file(self):
        path = self.document("f.json", [{"alpha": 0, "poly": ["1", "th"], "q2": "-1/2"}])
        self.assertEqual(invoke("leibniz-check", "--charge", "1", "1", "--section", path, "--element", "U1^-1")[0], 0)
        bad = self.document("g.json", [{"alpha": 3, "poly": ["1"]}])
        self.assertEqual(invoke("leibniz-check", "--charge", "1", "1", "--section", bad)[0], 2)

    def test_lift_from_problem_file(self):
        path = self.document("problem.json", {"F": [["U1", "1"]], "S": [["0"], ["1"]], "B2": [["z"]]})
        status, out, _ = invoke("lift", "--problem", path, "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        lifted = [record["entries"] for record in records if record.get("matrix") == "B1"]
        self.assertEqual(len(lifted), 2)
        c, tau, z = unit("c"), unit("tau"), unit("z")
        self.assertEqual([parse_element(entry) for entry in lifted[1]], [U1.scale(c * tau + z), NCElement.scalar(z)])
        self.assertTrue(all(parse_element(entry).is_zero for entry in lifted[0]))

    def test_lift_rejects_non_section(self):
        path = self.document("problem.json", {"F": [["U1"]], "S": [["U1"]], "B2": [["0"]]})
        status, _, err = invoke("lift", "--problem", path)
        self.assertEqual(status, 2)
        self.assertIn("not a section", err)

    def test_random_lift(self):
        self.assertEqual(invoke("lift", "--seed", "11")[0], 0)

    def test_heart_split(self):
        path = self.document("obj.json", MIXED_OBJECT)
        status, out, _ = invoke("heart-split", "--theta", THETA, "--object", path, "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        parts = [record.get("part") for record in records[:-1]]
        self.assertEqual(parts, ["X0", "X0", "X1", "heart", "heart", "K0"])
        heart = [(record["n"], record["m"]) for record in records if record.get("part") == "heart"]
        self.assertEqual(heart, [(0, 1), (1, -1)])
        self.assertEqual(records[-2], {"part": "K0", "whole": [0, 1], "lower": [-1, 1], "upper": [1, 0]})

    def test_heart_split_human_listing(self):
        path = self.document("obj.json", MIXED_OBJECT)
        status, out, _ = invoke("heart-split", "--theta", THETA, "--object", path)
        self.assertEqual(status, 0)
        self.assertIn("K0: (0, 1) = (-1, 1) + (1, 0)", out)
        self.assertIn("K0 splitting: holds", out)

    def test_rational_theta_is_rejected(self):
        path = self.document("obj.json", MIXED_OBJECT)
        status, _, err = invoke("heart-split", "--theta", "(1+0*sqrt(2))/2", "--object", path)
        self.assertEqual(status, 2)
        self.assertIn("theta", err)

    def test_k0(self):
        path = self.document("obj.json", MIXED_OBJECT)
        status, out, _ = invoke("k0", "--object", path, "--format", "records")
        self.assertEqual(status, 0)
        self.assertEqual(parse_records(out)[1], [{"r": 0, "d": 1}])

    def test_object_file_diagnostics(self):
        path = self.document("obj.json", '[{"k": 0, "r": 0, "d": -1}]')
        status, _, err = invoke("k0", "--object", path)
        self.assertEqual(status, 2)
        self.assertIn("items[0].d", err)
        broken = self.document("broken.json", '[{"k": 0,\n "r": }]')
        status, _, err = invoke("k0", "--object", broken)
        self.assertEqual(status, 2)
        self.assertIn("line 2", err)

    def test_adjunction_check(self):
        lower = self.document("x.json", [{"k": 0, "r": 1, "d": 1}])
        other = self.document("y.json", MIXED_OBJECT)
        self.assertEqual(invoke("adjunction-check", "--theta", THETA, "--object", lower, "--other", other)[0], 0)
        self.assertEqual(
            invoke("adjunction-check", "--theta", THETA, "--object", other, "--other", lower, "--n", "-3")[0],
            2,
        )
        upper = self.document("w.json", [{"k": 0, "r": 1, "d": 0}])
        self.assertEqual(
            invoke("adjunction-check", "--theta", THETA, "--object", upper, "--other", other, "--n", "1", "--dual")[0],
            0,
        )

    def test_axiom_report(self):
        status, out, _ = invoke("axiom-report", "--theta", THETA, "--samples", "15", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual(len(records), 16)
        self.assertTrue(all(record["hom_vanishing"] == 0 for record in records[:-1]))

    def test_hh_of_the_field(self):
        status, out, _ = invoke("hh", "--shipped", "field", "--max-degree", "3", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual([record["dimension"] for record in records], [1, 0, 0, 0])
        self.assertEqual(records[0]["theory"], "HH")

    def test_hh_from_algebra_file(self):
        path = self.document("field.alg", {"basis": ["1"], "unit": ["1"], "mult": [[0, 0, 0, "1"]]})
        status, out, _ = invoke("hh", "--algebra", path, "--max-degree", "3")
        self.assertEqual(status, 0)
        self.assertIn("HH over QQ, exact through degree 3", out)

    def test_hc_of_the_field(self):
        status, out, _ = invoke("hc", "--shipped", "field", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual([record["dimension"] for record in records], [1, 0, 1])

    def test_hp_of_the_field(self):
        status, out, _ = invoke("hp", "--shipped", "field", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual([(record["degree"], record["dimension"]) for record in records], [("even", 1), ("odd", 0)])
        self.assertTrue(records[0]["stabilized"])
        self.assertEqual(invoke("hp", "--shipped", "field", "--window", "3")[0], 2)

    def test_printed_signs_are_a_contract_violation(self):
        status, _, err = invoke("hh", "--shipped", "field", "--convention", "printed")
        self.assertEqual(status, 1)
        self.assertIn("b^2 = 0", err)

    def test_budget_flag(self):
        status, _, err = invoke("hh", "--shipped", "matrix2", "--budget", "10")
        self.assertEqual(status, 2)
        self.assertIn("budget is 10", err)

    def test_malformed_algebra_file(self):
        path = self.document("bad.alg", '{"basis": ["1"],\n "mult": [[0, 0, 5, "1"]]}')
        status, _, err = invoke("hh", "--algebra", path)
        self.assertEqual(status, 2)
        self.assertIn("bad.alg", err)

    def test_presentation_source_is_required(self):
        self.assertEqual(invoke("hh", "--max-degree", "2")[0], 2)

    def test_morita_check(self):
        status, out, _ = invoke("morita-check", "--shipped", "field", "--size", "2", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual(records[-1], {"contract": "Morita invariance", "holds": True})
        self.assertEqual({record["side"] for record in records[:-1]}, {"A", "M2(A)"})

    def test_morita_check_refuses_categories(self):
        self.assertEqual(invoke("morita-check", "--shipped", "square_zero")[0], 2)


class CallCommandTests(SimpleTestCase):
    def test_input_errors_carry_status_two(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("k0", object="/nonexistent/object.json", stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_management_entry_point(self):
        out = StringIO()
        call_command("nc_mul", "U2*U1", stdout=out)
        self.assertEqual(out.getvalue().splitlines()[0], "L^-1 * U1*U2")


class SuiteTests(SimpleTestCase):
    def test_scaled_counts(self):
        self.assertEqual(scaled(500, 1.0), 500)
        self.assertEqual(scaled(500, 0.001), 1)

    def test_suite_numbers(self):
        self.assertEqual([number for number, _, _ in SUITES], list(range(1, 10)))

    def test_quick_suites_pass(self):
        for number in (1, 2, 4, 8):
            result = run_suite(number, seed=3, scale=0.02)
            self.assertTrue(result.holds, result.failures)
            self.assertGreater(result.trials, 0)

    def test_morita_cases_note_what_they_skip(self):
        with patch("cli.suites.morita_check", return_value=SimpleNamespace(holds=True)) as check:
            result = run_suite(7, seed=0, scale=1.0)
        self.assertTrue(result.holds)
        self.assertEqual(result.trials, 3)
        self.assertEqual(check.call_args_list[0].args[1:], (2, 6))
        budget = settings.WORKBENCH_TERM_BUDGET
        self.assertEqual(
            result.notes,
            [
                f"M_3(field): HH through 3, HC through 2; degree 5 needs 531441 words, budget {budget}",
                f"M_2(dual_numbers): HH through 3, HC through 2; degree 5 needs 262144 words, budget {budget}",
                "M_3(dual_numbers) skipped below scale 4",
            ],
        )

    def test_aborted_suite_is_a_failure(self):
        def aborting(result, rng, scale):
            raise InputError("no data")

        with patch("cli.suites.SUITES", ((1, "algebra", aborting),)):
            result = run_suite(1, seed=0, scale=1.0)
        self.assertFalse(result.holds)
        self.assertEqual(result.failures, ["aborted: no data"])

    def test_selftest_reports_each_suite(self):
        status, out, _ = invoke("selftest", "--suite", "1", "--suite", "2", "--scale", "0.02", "--format", "records")
        self.assertEqual(status, 0)
        _, records = parse_records(out)
        self.assertEqual([record.get("suite") for record in records[:-1]], [1, 2])
        self.assertEqual(records[-1], {"contract": "all suites pass", "holds": True})

    def test_selftest_fails_with_status_one(self):
        def failing(result, rng, scale):
            result.check(False, "forced")

        with patch("cli.suites.SUITES", ((1, "algebra", failing),)):
            status, out, _ = invoke("selftest", "--suite", "1")
        self.assertEqual(status, 1)
        self.assertIn("suite 1: forced", out)

    def test_selftest_rejects_bad_scale(self):
        self.assertEqual(invoke("selftest", "--suite", "1", "--scale", "0")[0], 2)

    def test_suite_record_shape(self):
        result = SuiteResult(number=5, name="cyclic-identities")
        result.check(True, "ok")
        self.assertEqual(
            result.to_record(),
            {
                "suite": 5,
                "name": "cyclic-identities",
                "trials": 1,
                "failures": 0,
                "first_failure": None,
                "holds": True,
                "notes": [],
            },
        )
