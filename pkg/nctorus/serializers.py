from rest_framework import serializers

from common.serializers import load_validated, validate_serializer_or_raise
from scalars.serializers import ScalarField

from .grammar import parse_element
from .matrices import NCMatrix
from .types import NCElement, TorusError


class NCElementField(serializers.Field):
    default_error_messages = {
        "invalid": "Element has wrong format. {reason}",
    }

    def to_internal_value(self, value):
        try:
            return parse_element(value)
        except TorusError as exc:
            self.fail("invalid", reason=str(exc.detail))

    def to_representation(self, value):
        return value.to_text()


class NCTermSerializer(serializers.Serializer):
    m = serializers.IntegerField()
    n = serializers.IntegerField()
    coeff = ScalarField()


class NCElementSerializer(serializers.Serializer):
    items = NCTermSerializer(many=True, allow_empty=True)

    def validate_items(self, value):
        seen = set()
        for term in value:
            key = (term["m"], term["n"])
            if key in seen:
                raise serializers.ValidationError(f"Duplicate term U1^{key[0]} U2^{key[1]}.")
            seen.add(key)
        return value

    def to_element(self):
        return element_from_items(self.validated_data["items"])


def element_from_items(items):
    return NCElement({(term["m"], term["n"]): term["coeff"] for term in items})


def load_element(path):
    """Element file: a list of {m, n, coeff} records."""
    return element_from_items(load_validated(NCElementSerializer, path)["items"])


class NCMatrixField(serializers.ListField):
    """Row-major list of rows of element expressions."""

    child = serializers.ListField(child=NCElementField(), allow_empty=False)

    def __init__(self, **kwargs):
        kwargs.setdefault("allow_empty", False)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        rows = super().to_internal_value(data)
        try:
            return NCMatrix(rows)
        except TorusError as exc:
            raise serializers.ValidationError(str(exc.detail))

    def to_representation(self, value):
        return value.to_rows()


def element_records(element):
    return [
        {"m": m, "n": n, "coeff": value.to_text()}
        for (m, n), value in element.terms()
    ]


class ElementOperandsSerializer(serializers.Serializer):
    operands = serializers.ListField(child=NCElementField(), allow_empty=False)


def read_elements(operands, *, files=False):
    """Inline expressions, or element files when `files` is set."""
    if files:
        return [load_element(path) for path in operands]
    data = {"operands": list(operands)}
    return validate_serializer_or_raise(ElementOperandsSerializer(data=data))["operands"]
