from rest_framework import serializers

from common.serializers import load_validated
from scalars.serializers import SurdField

from .types import EllipticError, FormalObject, Theta


class SummandSerializer(serializers.Serializer):
    k = serializers.IntegerField()
    r = serializers.IntegerField(min_value=0)
    d = serializers.IntegerField()
    label = serializers.CharField(required=False, allow_blank=True, default="")
    mult = serializers.IntegerField(required=False, min_value=1, default=1)

    def validate(self, attrs):
        if attrs["r"] == 0 and attrs["d"] <= 0:
            raise serializers.ValidationError({"d": "Torsion summands need positive degree."})
        return attrs


class FormalObjectSerializer(serializers.Serializer):
    items = SummandSerializer(many=True, allow_empty=True)

    def to_object(self):
        return object_from_items(self.validated_data["items"])


def object_from_items(items):
    obj = FormalObject()
    for item in items:
        obj = obj + FormalObject.from_charge(
            item["k"], item["r"], item["d"], label=item["label"], mult=item["mult"]
        )
    return obj


def load_object(path):
    """Object file: a list of {k, r, d, label, mult} summands."""
    return object_from_items(load_validated(FormalObjectSerializer, path)["items"])


class ThetaField(SurdField):
    def __init__(self, **kwargs):
        super().__init__(irrational=True, **kwargs)

    def to_internal_value(self, value):
        surd = super().to_internal_value(value)
        try:
            return Theta(surd)
        except EllipticError as exc:
            self.fail("invalid", reason=str(exc.detail))

    def to_representation(self, value):
        return value.to_text()


def summand_records(X):
    return [
        {
            "k": s.k,
            "r": s.piece.charge.r,
            "d": s.piece.charge.d,
            "label": s.piece.label,
            "mult": s.mult,
        }
        for s in X
    ]


class ThetaOptionsSerializer(serializers.Serializer):
    theta = ThetaField()
