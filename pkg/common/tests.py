import os
import tempfile

from django.test import SimpleTestCase
from rest_framework import serializers

from .errors import BudgetExceeded, ContractViolation, InputError
from .serializers import load_json_document, load_validated, validate_serializer_or_raise


class PairSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    label = serializers.CharField(required=False)


class ItemsSerializer(serializers.Serializer):
    items = serializers.ListField(child=serializers.IntegerField(), allow_empty=False)


class ErrorTests(SimpleTestCase):
    def test_exit_statuses(self):
        self.assertEqual(InputError().exit_status, 2)
        self.assertEqual(ContractViolation().exit_status, 1)
        self.assertEqual(BudgetExceeded().exit_status, 2)
        self.assertEqual(InputError("bad", exit_status=1).exit_status, 1)

    def test_default_and_custom_detail(self):
        self.assertEqual(str(ContractViolation().detail), "Contract violated.")
        self.assertEqual(str(InputError("theta: missing").detail), "theta: missing")

    def test_budget_detail_names_dimension(self):
        exc = BudgetExceeded(dimension=300, budget=200)
        self.assertEqual(exc.dimension, 300)
        self.assertEqual(str(exc.detail), "Term dimension 300 exceeds budget 200.")


class ValidationTests(SimpleTestCase):
    def test_valid_data_is_returned(self):
        data = validate_serializer_or_raise(PairSerializer(data={"k": "3"}))
        self.assertEqual(data["k"], 3)

    def test_first_error_names_field(self):
        with self.assertRaises(InputError) as ctx:
            validate_serializer_or_raise(PairSerializer(data={"k": "x"}))
        self.assertEqual(str(ctx.exception.detail), "k: A valid integer is required.")

    def test_missing_field(self):
        with self.assertRaises(InputError) as ctx:
            validate_serializer_or_raise(PairSerializer(data={}))
        self.assertEqual(str(ctx.exception.detail), "k: This field is required.")


class DocumentTests(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write(self, name, text):
        path = os.path.join(self.directory.name, name)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return path

    def test_decode_error_reports_line_and_column(self):
        path = self.write("bad.json", '{\n  "a": 1,\n}')
        with self.assertRaises(InputError) as ctx:
            load_json_document(path)
        self.assertIn(f"{path}: line 3 column 1:", str(ctx.exception.detail))

    def test_missing_file(self):
        with self.assertRaises(InputError) as ctx:
            load_json_document(os.path.join(self.directory.name, "absent.json"))
        self.assertIn("absent.json", str(ctx.exception.detail))

    def test_top_level_list_is_wrapped_as_items(self):
        path = self.write("items.json", "[1, 2, 3]")
        self.assertEqual(load_validated(ItemsSerializer, path)["items"], [1, 2, 3])

    def test_validation_error_is_prefixed_with_path(self):
        path = self.write("empty.json", "[]")
        with self.assertRaises(InputError) as ctx:
            load_validated(ItemsSerializer, path)
        self.assertTrue(str(ctx.exception.detail).startswith(f"{path}: items: "))
