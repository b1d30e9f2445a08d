import random

from cli.base import Outcome, WorkbenchCommand, add_seed_argument, seed_of
from common.errors import InputError
from nctorus.samplers import random_element
from nctorus.serializers import read_elements
from nctorus.services import derivation_check, trace_commutator

from ._operands import add_operand_arguments


class Command(WorkbenchCommand):
    help = "Check delta(ab) = delta(a) b + a delta(b) and trace(ab) = trace(ba) on a pair or on random pairs."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_operand_arguments(parser, nargs="*")
        add_seed_argument(parser)
        parser.add_argument("--random", type=int, default=0, help="Number of random pairs to check instead.")

    def _pairs(self, options):
        if options["random"]:
            if options["operands"]:
                raise InputError("--random: operands and random pairs are exclusive.")
            rng = random.Random(seed_of(options))
            return [(random_element(rng), random_element(rng)) for _ in range(options["random"])]
        elements = read_elements(options["operands"], files=options["files"]) if options["operands"] else []
        if len(elements) != 2:
            raise InputError("operands: expected exactly two elements a and b.")
        return [tuple(elements)]

    def compute(self, **options):
        if options["random"] < 0:
            raise InputError("--random: must be nonnegative.")
        records = []
        for a, b in self._pairs(options):
            residual = derivation_check(a, b)
            trace_gap = trace_commutator(a, b)
            records.append(
                {
                    "a": a.to_text(),
                    "b": b.to_text(),
                    "residual": residual.to_text(),
                    "trace_gap": trace_gap.to_text(),
                    "holds": residual.is_zero and not trace_gap,
                }
            )
        failed = sum(not record["holds"] for record in records)
        return Outcome(
            records=records,
            columns=("a", "b", "residual", "trace_gap", "holds"),
            contract="derivation and trace",
            holds=not failed,
            failure=f"{failed} of {len(records)} pairs violate the derivation or trace identity.",
        )
