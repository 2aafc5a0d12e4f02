"""
Numeric Ranges

Interval constants for the quantities rcskit validates, and a single range check.

Functions:
    require_in: Raise a ValidationError unless a value lies inside an interval
    format_interval: Render an interval with bracket notation, e.g. "[0, 1)"
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import math

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
# Interval arithmetic
from sympy  import  Interval, oo

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from .errors import ValidationError

__all__ = [
    "RATE",
    "FIDELITY",
    "BAND",
    "EFFICIENCY",
    "POSITIVE",
    "format_interval",
    "require_in",
]

RATE:       Interval = Interval.Ropen(0, 1)
"""Error probabilities (Pauli, readout, idle)."""

FIDELITY:   Interval = Interval(0, 1)
"""Mixture fidelity."""

BAND:       Interval = Interval.open(0, 1)
"""Relative stability band."""

EFFICIENCY: Interval = Interval.Lopen(0, 1)
"""Fraction of peak machine performance, also the target fidelity of noisy sampling."""

POSITIVE:   Interval = Interval.open(0, oo)
"""Durations, peak performance, memory constraints."""


def format_interval(interval: Interval) -> str:
    """
    Format an interval as a bracket string.

    Args:
        interval: A sympy interval

    Returns:
        e.g. "[0, 1)" or "(0, inf)"
    """
    left  = "(" if interval.left_open  else "["
    right = ")" if interval.right_open else "]"
    lo    = "-inf" if interval.start == -oo else f"{float(interval.start):g}"
    hi    = "inf"  if interval.end   ==  oo else f"{float(interval.end):g}"
    return f"{left}{lo}, {hi}{right}"


def require_in(name: str, value: float, interval: Interval) -> float:
    """
    Check that a finite value lies inside an interval.

    Args:
        name:     Field name used in the error message
        value:    Value to check
        interval: Allowed range

    Returns:
        The value, as a float.

    Raises:
        ValidationError: If the value is not finite or falls outside the interval.
    """
    value = float(value)
    if not math.isfinite(value) or not bool(interval.contains(value)):
        raise ValidationError(f"{name} = {value!r} is outside {format_interval(interval)}")
    return value
