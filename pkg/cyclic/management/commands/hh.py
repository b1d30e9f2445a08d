from cli.base import Outcome, WorkbenchCommand
from cyclic.serializers import homology_records
from cyclic.services import hh

from ._presentations import add_presentation_arguments, homology_title, presentation_option


class Command(WorkbenchCommand):
    help = "Hochschild homology dimensions HH_0 .. HH_max-degree."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_presentation_arguments(parser)
        parser.add_argument("--max-degree", type=int, default=3, help="Highest reported degree (default: 3).")

    def compute(self, **options):
        result = hh(
            presentation_option(options),
            options["max_degree"],
            convention=options["convention"],
            budget=options["budget"],
        )
        return Outcome(
            records=homology_records(result),
            columns=("degree", "dimension"),
            title=homology_title(result),
        )
