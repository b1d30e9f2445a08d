def add_operand_arguments(parser, *, nargs="+"):
    parser.add_argument(
        "operands",
        nargs=nargs,
        help='Element expressions such as "U1^2*U2^-1 + (1/2)*U2", or paths with --files.',
    )
    parser.add_argument(
        "--files",
        action="store_true",
        help="Read each operand from an element file of {m, n, coeff} records.",
    )
