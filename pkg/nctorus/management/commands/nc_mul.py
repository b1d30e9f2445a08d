from functools import reduce

from cli.base import Outcome, WorkbenchCommand
from nctorus.serializers import element_records, read_elements
from nctorus.services import nc_mul

from ._operands import add_operand_arguments


class Command(WorkbenchCommand):
    help = "Multiply elements of the noncommutative torus left to right and print the normal form."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_operand_arguments(parser)

    def compute(self, **options):
        elements = read_elements(options["operands"], files=options["files"])
        product = reduce(nc_mul, elements)
        return Outcome(records=element_records(product), title=product.to_text())
