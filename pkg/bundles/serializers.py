from rest_framework import serializers

from common.serializers import load_validated
from nctorus.serializers import NCMatrixField
from scalars.serializers import ScalarField
from scalars.types import ZERO

from .services import section_term
from .types import BundleError, GaussJet, HeisenbergCharge


class HeisenbergChargeSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    m = serializers.IntegerField()

    def validate(self, attrs):
        try:
            attrs["charge"] = HeisenbergCharge(attrs["n"], attrs["m"])
        except BundleError as exc:
            raise serializers.ValidationError({"m": str(exc.detail)})
        return attrs


class SectionTermSerializer(serializers.Serializer):
    alpha = serializers.IntegerField(min_value=0)
    poly = serializers.ListField(child=ScalarField(), allow_empty=False)
    q2 = ScalarField(required=False, default=ZERO)
    q1 = ScalarField(required=False, default=ZERO)
    q0 = ScalarField(required=False, default=ZERO)


class SectionSerializer(serializers.Serializer):
    items = SectionTermSerializer(many=True, allow_empty=True)

    def to_section(self, modulus):
        return section_from_items(self.validated_data["items"], modulus)


def section_from_items(items, modulus):
    components = {}
    for index, item in enumerate(items):
        if item["alpha"] >= modulus:
            raise BundleError(f"items[{index}].alpha: residue {item['alpha']} exceeds modulus {modulus}.")
        components.setdefault(item["alpha"], []).append(
            section_term(item["poly"], item["q2"], item["q1"], item["q0"])
        )
    return GaussJet(modulus, components)


class SectionRecordSerializer(serializers.Serializer):
    alpha = serializers.IntegerField()
    poly = serializers.ListField(child=serializers.CharField())
    q2 = serializers.CharField()
    q1 = serializers.CharField()
    q0 = serializers.CharField()


class LiftProblemSerializer(serializers.Serializer):
    F = NCMatrixField()
    S = NCMatrixField()
    B2 = NCMatrixField()


def load_section(path, modulus):
    """Section file: a list of {alpha, poly, q2, q1, q0} term records."""
    items = load_validated(SectionSerializer, path)["items"]
    try:
        return section_from_items(items, modulus)
    except BundleError as exc:
        raise BundleError(f"{path}: {exc.detail}")


def load_lift_problem(path):
    values = load_validated(LiftProblemSerializer, path)
    return values["F"], values["S"], values["B2"]


def matrix_records(name, matrix):
    return [
        {"matrix": name, "row": index, "entries": row}
        for index, row in enumerate(matrix.to_rows())
    ]
