import json

from rest_framework.exceptions import ValidationError

from .errors import InputError


def _flatten_validation_detail(detail, prefix=""):
    if isinstance(detail, dict):
        for field, errors in detail.items():
            path = f"{prefix}.{field}" if prefix else str(field)
            return _flatten_validation_detail(errors, path)

    if isinstance(detail, (list, tuple)) and detail:
        for index, item in enumerate(detail):
            if isinstance(item, (dict, list, tuple)):
                if item:
                    return _flatten_validation_detail(item, f"{prefix}[{index}]")
                continue
            return f"{prefix}: {item}" if prefix else str(item)

    if prefix:
        return f"{prefix}: {detail}"
    return "Invalid input."


def validate_serializer_or_raise(serializer):
    try:
        serializer.is_valid(raise_exception=True)
    except ValidationError as exc:
        raise InputError(_flatten_validation_detail(exc.detail))

    return serializer.validated_data


def load_json_document(path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}")

    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}")


def load_validated(serializer_class, path):
    payload = load_json_document(path)
    if isinstance(payload, list):
        payload = {"items": payload}
    serializer = serializer_class(data=payload)
    try:
        return validate_serializer_or_raise(serializer)
    except InputError as exc:
        raise InputError(f"{path}: {exc.detail}")
