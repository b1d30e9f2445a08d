from cli.base import Outcome, WorkbenchCommand
from cyclic.serializers import homology_records
from cyclic.services import hc

from ._presentations import add_presentation_arguments, homology_title, presentation_option


class Command(WorkbenchCommand):
    help = "Cyclic homology dimensions HC_0 .. HC_max-degree from the (b, B) bicomplex."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_presentation_arguments(parser)
        parser.add_argument("--max-degree", type=int, default=2, help="Highest reported degree (default: 2).")

    def compute(self, **options):
        # The bicomplex needs two lengths beyond the highest reported degree.
        result = hc(
            presentation_option(options),
            options["max_degree"] + 2,
            convention=options["convention"],
            budget=options["budget"],
        )
        return Outcome(
            records=homology_records(result),
            columns=("degree", "dimension"),
            title=homology_title(result),
        )
