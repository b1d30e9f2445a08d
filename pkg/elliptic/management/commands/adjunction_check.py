from cli.base import Outcome, WorkbenchCommand
from elliptic.serializers import load_object
from elliptic.services import dual_adjunction_check, truncation_adjunction_check

from ._objects import add_object_arguments, theta_option


class Command(WorkbenchCommand):
    help = "Compare H^k(X, tau Y) with H^k(X, Y) for X in D^{<=n} (or the dual form with --dual)."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_object_arguments(parser)
        parser.add_argument("--other", required=True, help="Object file for Y.")
        parser.add_argument("--n", type=int, default=0, help="Level n of the aisle (default: 0).")
        parser.add_argument("--dual", action="store_true", help="Check the form for X in D^{>=n}.")
        parser.add_argument("--degrees", nargs=2, type=int, default=(-2, 2), metavar=("LOW", "HIGH"))

    def compute(self, **options):
        theta = theta_option(self, options)
        X, Y = load_object(options["object"]), load_object(options["other"])
        low, high = options["degrees"]
        check = dual_adjunction_check if options["dual"] else truncation_adjunction_check
        report = check(X, Y, options["n"], theta, degrees=range(low, high + 1))

        records = [
            {"k": k, "truncated": truncated, "whole": whole, "holds": truncated == whole}
            for k, truncated, whole in report.rows
        ]
        return Outcome(
            records=records,
            columns=("k", "truncated", "whole", "holds"),
            title=f"{'dual ' if options['dual'] else ''}truncation adjunction at n = {options['n']}",
            contract="Hom dimensions agree",
            holds=report.holds,
            failure="truncation changes a graded Hom dimension.",
        )
