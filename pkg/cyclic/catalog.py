from pathlib import Path

from .serializers import load_presentation

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

SHIPPED_ALGEBRAS = ("field", "dual_numbers", "split_pair", "matrix2", "path_a2")
SHIPPED_CATEGORIES = ("field_category", "square_zero", "quiver_a2", "contractible")


def fixture_path(name):
    suffix = ".dgc" if name in SHIPPED_CATEGORIES else ".alg"
    return FIXTURE_DIR / f"{name}{suffix}"


def shipped(name):
    if name not in SHIPPED_ALGEBRAS + SHIPPED_CATEGORIES:
        raise KeyError(name)
    return load_presentation(fixture_path(name))
