import random

from cli.base import Outcome, WorkbenchCommand, add_seed_argument, add_theta_argument, seed_of
from common.errors import InputError
from elliptic.samplers import random_object
from elliptic.serializers import load_object
from elliptic.services import axiom_report

from ._objects import theta_option


class Command(WorkbenchCommand):
    help = "Check the t-structure axioms and the K0 splitting on an object or on random objects."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_theta_argument(parser)
        parser.add_argument("--object", help="Object file; random objects are used without it.")
        parser.add_argument("--samples", type=int, default=20, help="Number of random objects (default: 20).")
        add_seed_argument(parser)

    def compute(self, **options):
        theta = theta_option(self, options)
        if options["object"]:
            objects = [load_object(options["object"])]
        elif options["samples"] < 1:
            raise InputError("--samples: must be positive.")
        else:
            rng = random.Random(seed_of(options))
            objects = [random_object(rng) for _ in range(options["samples"])]

        records, notes = [], []
        for index, X in enumerate(objects):
            report = axiom_report(X, theta)
            records.append(
                {
                    "object": index,
                    "summands": len(X),
                    "shift_stable": report.shift_stable,
                    "hom_vanishing": report.hom_vanishing.total,
                    "triangle_split": report.triangle_split,
                    "k0_split": report.splitting.holds,
                    "holds": report.holds,
                }
            )
            for x, y, degree, dimension in report.hom_vanishing.contributions:
                if degree in (0, 1):
                    notes.append(f"object {index}: {x.piece}[{-x.k}] -> {y.piece}[{-y.k}] via Ext^{degree}: {dimension}")

        failed = sum(not record["holds"] for record in records)
        return Outcome(
            records=records,
            columns=("object", "summands", "shift_stable", "hom_vanishing", "triangle_split", "k0_split", "holds"),
            title=f"theta = {theta.to_text()}",
            notes=notes,
            contract="t-structure axioms",
            holds=not failed,
            failure=f"{failed} of {len(records)} objects violate an axiom.",
        )
