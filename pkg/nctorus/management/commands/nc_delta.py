from rest_framework import serializers

from cli.base import Outcome, WorkbenchCommand, add_theta_argument
from cli.serializers import ComplexField
from common.errors import InputError
from nctorus.serializers import element_records, read_elements
from nctorus.services import delta_tau, evaluate_element
from scalars.serializers import SurdField
from scalars.services import coupled_assignment

from ._operands import add_operand_arguments


class EvaluationOptions(serializers.Serializer):
    theta = SurdField(irrational=True, required=False)
    tau = ComplexField(required=False)
    z = ComplexField(required=False)


class Command(WorkbenchCommand):
    help = "Apply the derivation delta_tau; with --theta and --tau also evaluate the coefficients."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_operand_arguments(parser, nargs=1)
        add_theta_argument(parser, required=False)
        parser.add_argument("--tau", help="Numeric tau, e.g. 0.3+1.1j.")
        parser.add_argument("--z", help="Numeric z used if the element mentions it.")

    def compute(self, **options):
        (element,) = read_elements(options["operands"], files=options["files"])
        image = delta_tau(element)
        records = element_records(image)

        values = self.validate_options(EvaluationOptions, options, ["theta", "tau", "z"])
        if "theta" in values or "tau" in values:
            if not {"theta", "tau"} <= values.keys():
                raise InputError("--theta and --tau must be given together.")
            assignment = coupled_assignment(float(values["theta"]), tau=values["tau"], z=values.get("z"))
            numeric = evaluate_element(image, assignment)
            for record in records:
                value = numeric[(record["m"], record["n"])]
                record["value"] = [value.real, value.imag]

        columns = ("m", "n", "coeff", "value") if "theta" in values else ()
        return Outcome(records=records, columns=columns, title=image.to_text())
