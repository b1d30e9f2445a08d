from cli.base import add_budget_argument
from cyclic.catalog import SHIPPED_ALGEBRAS, SHIPPED_CATEGORIES, shipped
from cyclic.serializers import load_presentation
from cyclic.types import KOSZUL, SIGN_CONVENTION_CHOICES


def add_presentation_arguments(parser, *, categories=True):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--algebra", help="Algebra file {basis, unit, mult}.")
    if categories:
        source.add_argument("--category", help="dg category file {objects, morphisms, composition, ...}.")
    source.add_argument(
        "--shipped",
        choices=SHIPPED_ALGEBRAS + (SHIPPED_CATEGORIES if categories else ()),
        help="One of the presentations that ship with the workbench.",
    )
    parser.add_argument(
        "--convention",
        choices=[value for value, _ in SIGN_CONVENTION_CHOICES],
        default=KOSZUL,
        help="Sign of the wrap-around face (default: koszul).",
    )
    add_budget_argument(parser)


def presentation_option(options):
    if options.get("shipped"):
        return shipped(options["shipped"])
    return load_presentation(options.get("algebra") or options["category"])


def homology_title(result):
    title = f"{result.theory} over {result.field}"
    if result.exact_through is not None:
        title += f", exact through degree {result.exact_through}"
    if result.stabilized is not None:
        title += ", stabilized" if result.stabilized else ", not stabilized in this window"
    return title
