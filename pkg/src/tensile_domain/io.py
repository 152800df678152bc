"""Deterministic CSV/JSON writers and the matching readers.

Floats are written with ``repr`` (shortest round-trip form, at most 17
significant digits), so re-reading and re-writing a file reproduces it
byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import IO, Iterable, List, Mapping, Sequence


def format_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, int):
        return repr(float(v))
    return str(v)


def parse_value(text: str):
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    try:
        return float(text)
    except ValueError:
        return text


def write_csv(rows: Iterable[Mapping], fieldnames: Sequence[str], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([format_value(row.get(k)) for k in fieldnames])


def read_csv(fh: IO[str]) -> List[dict]:
    reader = csv.reader(fh)
    header = next(reader)
    return [dict(zip(header, (parse_value(x) for x in rec))) for rec in reader]


def csv_text(rows: Iterable[Mapping], fieldnames: Sequence[str]) -> str:
    buf = io.StringIO()
    write_csv(rows, fieldnames, buf)
    return buf.getvalue()


def _jsonable(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None if math.isnan(obj) else ("inf" if obj > 0 else "-inf")
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def json_text(record: Mapping) -> str:
    """One JSON object, two-space indented, newline terminated."""
    return json.dumps(_jsonable(record), indent=2, allow_nan=False) + "\n"


def read_json(fh: IO[str]) -> dict:
    return json.load(fh)
