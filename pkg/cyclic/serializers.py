from rest_framework import serializers

from common.errors import InputError
from common.serializers import load_json_document, validate_serializer_or_raise
from scalars.serializers import ScalarField
from scalars.types import ScalarError, gaussian, gaussian_text

from .types import AlgebraPresentation, CyclicError, DgCategoryPresentation


class CoefficientField(ScalarField):
    """A constant scalar, returned as a Gaussian rational."""

    default_error_messages = {
        "invalid": "Coefficient has wrong format. {reason}",
    }

    def to_internal_value(self, value):
        scalar = super().to_internal_value(value)
        try:
            return scalar.constant_value()
        except ScalarError as exc:
            self.fail("invalid", reason=str(exc.detail))

    def to_representation(self, value):
        return gaussian_text(gaussian(value))


class TupleField(serializers.Field):
    default_error_messages = {
        "invalid": "Expected a list of {length} entries.",
    }

    def __init__(self, children, **kwargs):
        self.children = tuple(children)
        super().__init__(**kwargs)
        for child in self.children:
            child.bind(field_name="", parent=self)

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != len(self.children):
            self.fail("invalid", length=len(self.children))

        values, errors = [], {}
        for index, (child, item) in enumerate(zip(self.children, data)):
            try:
                values.append(child.run_validation(item))
            except serializers.ValidationError as exc:
                errors[index] = exc.detail
        if errors:
            raise serializers.ValidationError(errors)
        return tuple(values)

    def to_representation(self, value):
        return [child.to_representation(item) for child, item in zip(self.children, value)]


def _index():
    return serializers.IntegerField(min_value=0)


class AlgebraSerializer(serializers.Serializer):
    basis = serializers.ListField(child=serializers.CharField(), allow_empty=True)
    unit = serializers.ListField(child=CoefficientField(), required=False, allow_null=True, default=None)
    mult = serializers.ListField(
        child=TupleField([_index(), _index(), _index(), CoefficientField()]),
        allow_empty=True,
    )

    def validate(self, attrs):
        try:
            attrs["presentation"] = AlgebraPresentation(attrs["basis"], attrs["unit"], attrs["mult"])
        except CyclicError as exc:
            raise serializers.ValidationError({"presentation": str(exc.detail)})
        return attrs


class MorphismSerializer(serializers.Serializer):
    name = serializers.CharField()
    source = serializers.CharField()
    target = serializers.CharField()
    degree = serializers.IntegerField(required=False, default=0)


class DgCategorySerializer(serializers.Serializer):
    objects = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    morphisms = MorphismSerializer(many=True, allow_empty=True)
    identities = serializers.DictField(
        child=serializers.DictField(child=CoefficientField()),
        required=False,
        allow_null=True,
        default=None,
    )
    differential = serializers.ListField(
        child=TupleField([serializers.CharField(), serializers.CharField(), CoefficientField()]),
        required=False,
        default=list,
    )
    composition = serializers.ListField(
        child=TupleField([serializers.CharField(), serializers.CharField(), serializers.CharField(), CoefficientField()]),
        allow_empty=True,
    )

    def validate(self, attrs):
        try:
            attrs["presentation"] = DgCategoryPresentation(
                attrs["objects"],
                [(m["name"], m["source"], m["target"], m["degree"]) for m in attrs["morphisms"]],
                attrs["identities"],
                attrs["differential"],
                attrs["composition"],
            )
        except CyclicError as exc:
            raise serializers.ValidationError({"presentation": str(exc.detail)})
        return attrs


def load_presentation(path):
    """Algebra files carry `basis`; dg-category files carry `objects`."""
    payload = load_json_document(path)
    if not isinstance(payload, dict):
        raise InputError(f"{path}: expected a JSON object.")
    serializer_class = DgCategorySerializer if "objects" in payload else AlgebraSerializer
    try:
        return validate_serializer_or_raise(serializer_class(data=payload))["presentation"]
    except InputError as exc:
        raise InputError(f"{path}: {exc.detail}")


def homology_records(result):
    return [
        {
            "theory": result.theory,
            "degree": degree,
            "dimension": dimension,
            "field": result.field,
            "exact_through": result.exact_through,
            "stabilized": result.stabilized,
        }
        for degree, dimension in result.table()
    ]
