from cli.base import add_theta_argument
from elliptic.serializers import ThetaOptionsSerializer


def add_object_arguments(parser, *, theta=True):
    parser.add_argument("--object", required=True, help="Object file of {k, r, d, label, mult} summands.")
    if theta:
        add_theta_argument(parser)


def theta_option(command, options):
    return command.validate_options(ThetaOptionsSerializer, options, ["theta"])["theta"]
