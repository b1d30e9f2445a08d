from cli.base import Outcome, WorkbenchCommand
from elliptic.serializers import load_object, summand_records
from elliptic.services import charge_to_heisenberg, level, splitting_check, truncate

from ._objects import add_object_arguments, theta_option


class Command(WorkbenchCommand):
    help = "Split an object into its truncation pieces X0 and X1 and compare K0 classes."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_object_arguments(parser)
        parser.add_argument("--n", type=int, default=0, help="Truncation level (default: 0).")

    def compute(self, **options):
        theta = theta_option(self, options)
        X = load_object(options["object"])
        n = options["n"]
        X0, X1 = truncate(X, theta, n)
        report = splitting_check(X, theta, n)

        records = []
        for part, piece in (("X0", X0), ("X1", X1)):
            records.extend({"part": part, **record} for record in summand_records(piece))
        for summand in X:
            if level(summand, theta) == 0:
                charge = charge_to_heisenberg(summand, theta)
                records.append({"part": "heart", **summand_records([summand])[0], "n": charge.n, "m": charge.m})
        records.append(
            {
                "part": "K0",
                "whole": list(report.whole),
                "lower": list(report.lower),
                "upper": list(report.upper),
            }
        )

        return Outcome(
            records=records,
            columns=("part", "k", "r", "d", "label", "mult", "n", "m"),
            title=f"theta = {theta.to_text()}, truncation at level {n}",
            notes=[f"K0: {report.whole} = {report.lower} + {report.upper}"],
            contract="K0 splitting",
            holds=report.holds,
            failure="truncation pieces do not add up to the object in K0.",
        )
