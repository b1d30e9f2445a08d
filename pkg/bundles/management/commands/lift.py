import random

from bundles.samplers import random_lift_problem
from bundles.serializers import load_lift_problem, matrix_records
from bundles.services import lift_connection
from cli.base import Outcome, WorkbenchCommand, add_seed_argument, seed_of


class Command(WorkbenchCommand):
    help = "Lift a holomorphic structure B2 along a split surjection F with section S."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--problem", help="File with matrices F, S and B2; a random problem is used without it.")
        add_seed_argument(parser)

    def compute(self, **options):
        if options["problem"]:
            F, S, B2 = load_lift_problem(options["problem"])
        else:
            F, S, B2 = random_lift_problem(random.Random(seed_of(options)))

        B1 = lift_connection(F, S, B2)
        records = []
        for name, matrix in (("F", F), ("S", S), ("B2", B2), ("B1", B1)):
            records.extend(matrix_records(name, matrix))
        return Outcome(
            records=records,
            columns=("matrix", "row", "entries"),
            title=f"F: A^{F.shape[1]} -> A^{F.shape[0]}",
            contract="F B1 = delta(F) + B2 F",
        )
