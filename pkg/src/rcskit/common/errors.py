"""
# errors.py

## rcskit.common.errors

### Summary

Exception hierarchy shared by every rcskit module. Each class carries the process exit code the
command line front end uses when the error escapes a command.

| Exception          | Exit code | Raised for                                              |
|--------------------|-----------|---------------------------------------------------------|
| `UsageError`       | 2         | Bad flag combinations the CLI parser cannot catch      |
| `ParseError`       | 3         | Malformed documents (message carries the field path)   |
| `ValidationError`  | 3         | Well-formed but invalid inputs                          |
| `MissingRateError` | 3         | A profile lacks a rate for an element a circuit uses    |
| `CapacityError`    | 4         | Qubit count above the simulator limit                   |
| `InfeasibleError`  | 4         | Memory constraint below the largest gate tensor         |
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from __future__ import annotations

from typing     import Iterable

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import pydantic

__all__ = [
    "RcsKitError",
    "UsageError",
    "ParseError",
    "ValidationError",
    "MissingRateError",
    "CapacityError",
    "InfeasibleError",
    "parse_error_from_pydantic",
]


class RcsKitError(Exception):
    """Base class for all rcskit errors."""

    exit_code: int = 1


class UsageError(RcsKitError):
    """Invalid combination of command line options."""

    exit_code = 2


class ParseError(RcsKitError):
    """
    A document could not be parsed.

    Attributes:
        location: Dotted path of the offending field (e.g. `gates.12.kind`), when known.
    """

    exit_code = 3

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ValidationError(RcsKitError):
    """Input is well-formed but violates an invariant."""

    exit_code = 3


class MissingRateError(ValidationError):
    """A profile has no error rate (or gate parameter) for an element a circuit uses."""

    def __init__(self, quantity: str, element: object):
        self.quantity = quantity
        self.element  = element
        super().__init__(f"profile has no {quantity} for {element}")


class CapacityError(RcsKitError):
    """The requested simulation exceeds the configured qubit capacity."""

    exit_code = 4


class InfeasibleError(RcsKitError):
    """No contraction plan can satisfy the requested memory constraint."""

    exit_code = 4


def _join_loc(loc: Iterable[object]) -> str:
    return ".".join(str(part) for part in loc)


def parse_error_from_pydantic(exc: pydantic.ValidationError, source: str | None = None) -> ParseError:
    """
    Convert a pydantic validation failure into a `ParseError` listing every failing field path.

    Args:
        exc:    The pydantic exception
        source: Optional document name prefixed to the message

    Returns:
        A `ParseError` whose `location` is the first failing path.
    """
    problems = [(_join_loc(err["loc"]), err["msg"]) for err in exc.errors()]
    first    = problems[0][0] if problems else None
    detail   = "; ".join(f"{loc}: {msg}" for loc, msg in problems)
    prefix   = f"{source}: " if source else ""
    error    = ParseError(f"{prefix}{detail}")
    error.location = first
    return error
