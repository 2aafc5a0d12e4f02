"""
Unit tests for the intervals module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest

# Module Under Test
from rcskit.common.errors import ValidationError
from rcskit.common.intervals import (
    BAND,
    EFFICIENCY,
    FIDELITY,
    POSITIVE,
    RATE,
    format_interval,
    require_in,
    )

# Test Constants
formatted = [
    (RATE,          "[0, 1)"),
    (FIDELITY,      "[0, 1]"),
    (BAND,          "(0, 1)"),
    (EFFICIENCY,    "(0, 1]"),
    (POSITIVE,      "(0, inf)"),
]

inside = [
    (RATE,          0.0),
    (RATE,          0.999),
    (FIDELITY,      1.0),
    (BAND,          0.25),
    (EFFICIENCY,    1.0),
    (POSITIVE,      1e300),
]

outside = [
    (RATE,          1.0),
    (RATE,          -1e-9),
    (FIDELITY,      1.0000001),
    (BAND,          0.0),
    (BAND,          1.0),
    (EFFICIENCY,    0.0),
    (POSITIVE,      0.0),
    (POSITIVE,      float("inf")),
    (RATE,          float("nan")),
]


# Test Cases
@pytest.mark.parametrize("interval, text", formatted)
def test_format_interval(interval, text):
    assert format_interval(interval) == text


@pytest.mark.parametrize("interval, value", inside)
def test_require_in_accepts(interval, value):
    assert require_in("x", value, interval) == value


@pytest.mark.parametrize("interval, value", outside)
def test_require_in_rejects(interval, value):
    with pytest.raises(ValidationError, match="x = "):
        require_in("x", value, interval)


def test_require_in_converts_to_float():
    assert isinstance(require_in("count", 3, POSITIVE), float)
