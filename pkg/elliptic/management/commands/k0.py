from cli.base import Outcome, WorkbenchCommand
from elliptic.serializers import load_object
from elliptic.services import k0_class

from ._objects import add_object_arguments


class Command(WorkbenchCommand):
    help = "Print the K0 class (rank, degree) of an object."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_object_arguments(parser, theta=False)

    def compute(self, **options):
        r, d = k0_class(load_object(options["object"]))
        return Outcome(records=[{"r": r, "d": d}], columns=("r", "d"))
