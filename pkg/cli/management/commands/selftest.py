from django.conf import settings
from rest_framework import serializers

from cli.base import Outcome, WorkbenchCommand, add_seed_argument, seed_of
from cli.suites import SUITE_NUMBERS, run_suites


class SelftestOptions(serializers.Serializer):
    scale = serializers.FloatField(min_value=0.01, required=False)


class Command(WorkbenchCommand):
    help = "Run the invariant suites (algebra through one-object consistency) and report each."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        add_seed_argument(parser)
        parser.add_argument(
            "--scale",
            type=float,
            default=None,
            help=f"Multiplier of the trial counts (default: {settings.WORKBENCH_SELFTEST_SCALE}).",
        )
        parser.add_argument(
            "--suite",
            type=int,
            action="append",
            choices=SUITE_NUMBERS,
            help="Run only this suite; repeat to select several.",
        )

    def compute(self, **options):
        values = self.validate_options(SelftestOptions, options, ["scale"])
        scale = values.get("scale", settings.WORKBENCH_SELFTEST_SCALE)
        numbers = sorted(set(options["suite"] or SUITE_NUMBERS))

        results = run_suites(numbers, seed=seed_of(options), scale=scale)
        failed = [result for result in results if not result.holds]
        return Outcome(
            records=[result.to_record() for result in results],
            columns=("suite", "name", "trials", "failures", "holds"),
            title=f"selftest: {len(results)} suites, seed {seed_of(options)}, scale {scale:g}",
            notes=[f"suite {result.number}: {result.failures[0]}" for result in failed]
            + [f"suite {result.number}: {note}" for result in results for note in result.notes],
            contract="all suites pass",
            holds=not failed,
            failure=f"{len(failed)} suite(s) failed: {', '.join(result.name for result in failed)}.",
        )
