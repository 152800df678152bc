import io
import json
import math

import pytest
from hypothesis import given, strategies as st

from tensile_domain.io import csv_text, format_value, json_text, parse_value, read_csv, read_json


def test_format_value():
    assert format_value(None) == ""
    assert format_value(True) == "true"
    assert format_value(0.1) == "0.1"
    assert format_value(3) == "3.0"
    assert format_value(math.inf) == "inf"
    assert format_value("tense") == "tense"


@given(st.floats(allow_nan=False))
def test_float_round_trip(x):
    assert parse_value(format_value(x)) == x
    assert len(format_value(x).lstrip("-").replace(".", "").split("e")[0].lstrip("0")) <= 17


def test_csv_round_trip_bytes():
    rows = [
        {"a": 1 / 3, "b": "curve", "c": None, "d": True},
        {"a": -1e-300, "b": "asymptote", "c": math.inf, "d": False},
    ]
    text = csv_text(rows, ["a", "b", "c", "d"])
    back = read_csv(io.StringIO(text))
    assert back == rows
    assert csv_text(back, ["a", "b", "c", "d"]) == text


def test_json_text():
    text = json_text({"x": math.inf, "y": [1.5, None], "z": math.nan})
    assert text.endswith("\n")
    rec = read_json(io.StringIO(text))
    assert rec == {"x": "inf", "y": [1.5, None], "z": None}
    assert json_text(rec) == text
    assert json.loads(text)["y"][0] == 1.5
