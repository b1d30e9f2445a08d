import json

from django.conf import settings
from rest_framework.renderers import JSONRenderer

from common.errors import InputError

RECORDS_FORMAT = "ncworkbench-records"


def render_record(record):
    return JSONRenderer().render(record).decode("utf-8")


def records_header(command):
    return {
        "format": RECORDS_FORMAT,
        "version": settings.WORKBENCH_RECORDS_VERSION,
        "command": command,
    }


def render_records(command, records):
    """Header line followed by one JSON record per line."""
    return [render_record(records_header(command))] + [render_record(record) for record in records]


def parse_records(text):
    """Inverse of `render_records`: (header, records) from line-delimited output."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError("records: empty stream.")
    decoded = []
    for number, line in enumerate(lines, start=1):
        try:
            decoded.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise InputError(f"records: line {number} column {exc.colno}: {exc.msg}")
    header, *records = decoded
    kind = header.get("format") if isinstance(header, dict) else None
    if kind != RECORDS_FORMAT:
        raise InputError(f"records: unknown format {kind!r}.")
    if header.get("version") != settings.WORKBENCH_RECORDS_VERSION:
        raise InputError(f"records: unsupported version {header.get('version')!r}.")
    return header, records


def _cell(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(item) for item in value)
    return str(value)


def render_table(records, columns):
    """Left-aligned text table of `columns` taken from each record."""
    rows = [[str(column) for column in columns]]
    rows.extend([_cell(record.get(column)) for column in columns] for record in records)
    widths = [max(len(row[index]) for row in rows) for index in range(len(columns))]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
