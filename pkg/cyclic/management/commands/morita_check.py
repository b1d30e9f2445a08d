from cli.base import Outcome, WorkbenchCommand
from common.errors import InputError
from cyclic.serializers import homology_records
from cyclic.services import morita_check

from ._presentations import add_presentation_arguments, presentation_option


class Command(WorkbenchCommand):
    help = "Compare HH and HC of an algebra A with those of the matrix algebra M_n(A)."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_presentation_arguments(parser, categories=False)
        parser.add_argument("--size", type=int, default=2, help="Matrix size n (default: 2).")
        parser.add_argument(
            "--max-degree",
            type=int,
            default=2,
            help="Highest HH degree compared; HC is compared one degree lower (default: 2).",
        )

    def compute(self, **options):
        if options["max_degree"] < 1:
            raise InputError("--max-degree: must be at least 1.")
        report = morita_check(
            presentation_option(options),
            options["size"],
            options["max_degree"] + 1,
            convention=options["convention"],
            budget=options["budget"],
        )

        records = []
        for side, result in (
            ("A", report.hh_algebra),
            (f"M{report.size}(A)", report.hh_matrix),
            ("A", report.hc_algebra),
            (f"M{report.size}(A)", report.hc_matrix),
        ):
            records.extend({"side": side, **record} for record in homology_records(result))
        return Outcome(
            records=records,
            columns=("theory", "side", "degree", "dimension"),
            title=f"Morita comparison with {report.size}x{report.size} matrices",
            contract="Morita invariance",
            holds=report.holds,
            failure="HH or HC of the matrix algebra differs from that of the algebra.",
        )
