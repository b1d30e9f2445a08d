import sys
from importlib import import_module

from django.core.management import get_commands
from django.core.management.base import OutputWrapper

# Subcommand name -> owning app.
SUBCOMMANDS = {
    "nc-mul": "nctorus",
    "nc-delta": "nctorus",
    "derivation-check": "nctorus",
    "leibniz-check": "bundles",
    "lift": "bundles",
    "heart-split": "elliptic",
    "k0": "elliptic",
    "adjunction-check": "elliptic",
    "axiom-report": "elliptic",
    "hh": "cyclic",
    "hc": "cyclic",
    "hp": "cyclic",
    "morita-check": "cyclic",
    "selftest": "cli",
}

PROGRAM = "ncworkbench"


def usage():
    lines = [f"usage: {PROGRAM} <subcommand> [options]", "", "subcommands:"]
    lines.extend(f"  {name}" for name in SUBCOMMANDS)
    return "\n".join(lines)


def load_command(name, *, stdout=None, stderr=None):
    module_name = name.replace("-", "_")
    app = SUBCOMMANDS[name]
    if get_commands().get(module_name) != app:
        raise LookupError(f"{name} is not provided by the {app} app.")
    module = import_module(f"{app}.management.commands.{module_name}")
    return module.Command(stdout=stdout, stderr=stderr)


def run(argv=None, *, stdout=None, stderr=None):
    """Dispatch `argv` to its subcommand and return the exit status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    out = OutputWrapper(stdout or sys.stdout)
    err = OutputWrapper(stderr or sys.stderr)

    if not argv or argv[0] in ("-h", "--help", "help"):
        (out if argv else err).write(usage())
        return 0 if argv else 2

    name = argv[0].replace("_", "-")
    if name not in SUBCOMMANDS:
        err.write(f"Unknown subcommand {argv[0]!r}.\n{usage()}")
        return 2

    command = load_command(name, stdout=stdout, stderr=stderr)
    try:
        command.run_from_argv([PROGRAM, name.replace("-", "_"), *argv[1:]])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    return 0
