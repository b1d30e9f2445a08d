from dataclasses import dataclass, field

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from common.errors import ContractViolation, WorkbenchError
from common.logs_file import logger
from common.serializers import validate_serializer_or_raise

from .records import render_records, render_table

HUMAN = "human"
RECORDS = "records"


@dataclass
class Outcome:
    """What a subcommand produced: records, how to tabulate them and whether its contract held."""

    records: list = field(default_factory=list)
    columns: tuple = ()
    title: str = ""
    notes: list = field(default_factory=list)
    contract: str = ""
    holds: bool = True
    failure: str = ""

    def all_records(self):
        if not self.contract:
            return list(self.records)
        return [*self.records, {"contract": self.contract, "holds": self.holds}]


class WorkbenchCommand(BaseCommand):
    """Base class of the workbench subcommands.

    Subclasses implement `compute(**options)` and return an `Outcome`. Input
    problems surface as status 2, failed contracts as status 1.
    """

    requires_system_checks = []

    @property
    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1].replace("_", "-")

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            choices=[HUMAN, RECORDS],
            default=HUMAN,
            help="Human table or line-delimited records (default: human).",
        )

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except WorkbenchError as exc:
            logger.error("%s failed with status %s: %s", self.command_name, exc.exit_status, exc.detail)
            raise CommandError(str(exc.detail), returncode=exc.exit_status) from exc

    def handle(self, *args, **options):
        outcome = self.compute(**options)
        if options["format"] == RECORDS:
            for line in render_records(self.command_name, outcome.all_records()):
                self.stdout.write(line)
        else:
            self.write_human(outcome)

        if not outcome.holds:
            raise ContractViolation(outcome.failure or f"{self.command_name}: contract violated.")

    def compute(self, **options):
        raise NotImplementedError("subcommands implement compute()")

    def write_human(self, outcome):
        if outcome.title:
            self.stdout.write(outcome.title)
        if outcome.columns:
            for line in render_table(outcome.records, outcome.columns):
                self.stdout.write(line)
        for note in outcome.notes:
            self.stdout.write(note)
        if outcome.contract and outcome.holds:
            self.stdout.write(self.style.SUCCESS(f"{outcome.contract}: holds"))
        elif outcome.contract:
            self.stdout.write(self.style.ERROR(f"{outcome.contract}: fails"))

    def validate_options(self, serializer_class, options, names):
        """Validate the raw flag values through a serializer; errors name the flag."""
        data = {name: options[name] for name in names if options.get(name) is not None}
        return validate_serializer_or_raise(serializer_class(data=data))


def add_seed_argument(parser):
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"Seed of the randomized samples (default: {settings.WORKBENCH_SEED}).",
    )


def add_budget_argument(parser):
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"Largest allowed term dimension (default: {settings.WORKBENCH_TERM_BUDGET}).",
    )


def add_theta_argument(parser, *, required=True):
    parser.add_argument(
        "--theta",
        required=required,
        help='Quadratic irrational in surd syntax, e.g. "(-1 + 1*sqrt(2))/1".',
    )


def seed_of(options):
    return settings.WORKBENCH_SEED if options.get("seed") is None else options["seed"]
