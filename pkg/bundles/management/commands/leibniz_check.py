import random

from rest_framework import serializers

from bundles.samplers import random_section
from bundles.serializers import HeisenbergChargeSerializer, load_section
from bundles.services import assert_representable, leibniz_check
from cli.base import Outcome, WorkbenchCommand, add_seed_argument, seed_of
from cli.serializers import PairField
from nctorus.serializers import NCElementField
from scalars.serializers import ScalarField

DEFAULT_ELEMENTS = ["U1", "U2", "U1*U2"]


class LeibnizOptions(serializers.Serializer):
    charge = PairField()
    element = serializers.ListField(child=NCElementField(), allow_empty=False)
    z = ScalarField(required=False)
    samples = serializers.IntegerField(min_value=1)

    def validate_charge(self, value):
        charge = HeisenbergChargeSerializer(data={"n": value[0], "m": value[1]})
        if not charge.is_valid():
            raise serializers.ValidationError(next(iter(charge.errors.values())))
        if charge.validated_data["charge"].is_free:
            raise serializers.ValidationError("Heisenberg sections need m != 0.")
        return charge.validated_data["charge"]


class Command(WorkbenchCommand):
    help = "Check nabla_z(f.a) = nabla_z(f).a + f.delta(a) on the Heisenberg module E_{n,m}."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--charge", nargs=2, type=int, required=True, metavar=("N", "M"))
        parser.add_argument(
            "--element",
            action="append",
            help="Element a acting on the section; repeatable (default: U1, U2 and U1*U2).",
        )
        parser.add_argument("--section", help="Section file; random Gaussian sections are used without it.")
        parser.add_argument("--samples", type=int, default=1, help="Number of random sections (default: 1).")
        parser.add_argument("--z", help="Value of z in scalar syntax (default: the formal unit z).")
        add_seed_argument(parser)

    def compute(self, **options):
        options = {**options, "element": options["element"] or DEFAULT_ELEMENTS}
        values = self.validate_options(LeibnizOptions, options, ["charge", "element", "z", "samples"])
        ch = values["charge"]

        if options["section"]:
            sections = [load_section(options["section"], ch.modulus)]
        else:
            rng = random.Random(seed_of(options))
            sections = [random_section(rng, ch) for _ in range(values["samples"])]

        records, residuals = [], []
        for index, f in enumerate(sections):
            for text, a in zip(options["element"], values["element"]):
                residual = assert_representable(leibniz_check(f, a, ch, values.get("z")))
                records.append(
                    {
                        "section": index,
                        "element": a.to_text(),
                        "section_terms": f.term_count(),
                        "residual_terms": residual.term_count(),
                        "holds": residual.is_zero,
                    }
                )
                if not residual.is_zero:
                    residuals.append((index, text, residual))

        return Outcome(
            records=records,
            columns=("section", "element", "section_terms", "residual_terms", "holds"),
            title=f"E_({ch.n},{ch.m}), dim {ch.dim.to_text()}",
            notes=[f"section {index}, a = {text}: residual {residual.to_records()}" for index, text, residual in residuals],
            contract="Leibniz rule",
            holds=not residuals,
            failure=f"{len(residuals)} Leibniz residuals are nonzero.",
        )
