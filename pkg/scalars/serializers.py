from rest_framework import serializers

from .grammar import parse_scalar, parse_surd
from .types import ScalarError, SymbolicScalar


class ScalarField(serializers.Field):
    default_error_messages = {
        "invalid": "Scalar has wrong format. {reason}",
    }

    def to_internal_value(self, value):
        if isinstance(value, bool):
            self.fail("invalid", reason="Booleans are not scalars.")
        if isinstance(value, int):
            return SymbolicScalar.constant(value)
        try:
            return parse_scalar(value)
        except ScalarError as exc:
            self.fail("invalid", reason=str(exc.detail))

    def to_representation(self, value):
        return value.to_text()


class SurdField(serializers.Field):
    default_error_messages = {
        "invalid": "Surd has wrong format. {reason}",
        "rational": "Surd must be irrational (q != 0).",
    }

    def __init__(self, *, irrational=False, **kwargs):
        self.irrational = irrational
        super().__init__(**kwargs)

    def to_internal_value(self, value):
        try:
            surd = parse_surd(value)
        except ScalarError as exc:
            self.fail("invalid", reason=str(exc.detail))
        if self.irrational and not surd.is_irrational:
            self.fail("rational")
        return surd

    def to_representation(self, value):
        return value.to_text()
