from rest_framework import serializers


class ComplexField(serializers.Field):
    """Numeric complex value written the Python way, e.g. `0.3+1.1j`."""

    default_error_messages = {
        "invalid": "Complex number has wrong format.",
    }

    def to_internal_value(self, value):
        if isinstance(value, bool):
            self.fail("invalid")
        if isinstance(value, (int, float, complex)):
            return complex(value)
        try:
            return complex(str(value).replace(" ", ""))
        except ValueError:
            self.fail("invalid")

    def to_representation(self, value):
        return [value.real, value.imag]


class PairField(serializers.ListField):
    """Exactly two integers, as given by `--charge N M`."""

    child = serializers.IntegerField()

    def __init__(self, **kwargs):
        kwargs.setdefault("min_length", 2)
        kwargs.setdefault("max_length", 2)
        super().__init__(**kwargs)
