from cli.base import Outcome, WorkbenchCommand
from cyclic.serializers import homology_records
from cyclic.services import hp

from ._presentations import add_presentation_arguments, homology_title, presentation_option


class Command(WorkbenchCommand):
    help = "Periodic cyclic homology (even, odd) read off the periodicity tower inside a window."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_presentation_arguments(parser)
        parser.add_argument("--window", type=int, default=6, help="Largest word length used (default: 6).")

    def compute(self, **options):
        result = hp(
            presentation_option(options),
            options["window"],
            convention=options["convention"],
            budget=options["budget"],
        )
        notes = [] if result.stabilized else ["increase --window to decide the missing parities"]
        return Outcome(
            records=homology_records(result),
            columns=("degree", "dimension"),
            title=homology_title(result),
            notes=notes,
        )
