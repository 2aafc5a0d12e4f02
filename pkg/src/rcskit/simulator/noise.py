"""
Noise Specifications

Classes:
    Mixture: Global depolarizing mixture f * p_ideal + (1 - f) / D
    Trajectory: Independent Pauli faults after every gate and idle slot, plus readout bit flips

Functions:
    parse_noise: Parse "ideal", "mixture:F" or "trajectory:e1=..,e2=..,idle=..,ro=.."
    noise_text: Canonical text form of a noise spec
    trajectory_from_profile: Trajectory rates from a profile's device-wide defaults
"""

from typing import Optional, Union

import regex
from attrs import frozen, field

from ..common.errors    import MissingRateError, UsageError
from ..common.intervals import FIDELITY, RATE, require_in
from ..device.profile   import DeviceProfile

__all__ = [
    "Mixture",
    "Trajectory",
    "NoiseSpec",
    "parse_noise",
    "noise_text",
    "trajectory_from_profile",
]


@frozen
class Mixture:
    f: float = field(converter=float, validator=lambda _, a, v: require_in(a.name, v, FIDELITY))


def _rate(instance, attribute, value) -> None:
    require_in(attribute.name, value, RATE)


@frozen
class Trajectory:
    """Rates: single-qubit gate, two-qubit gate, idle slot, readout flip."""

    e1:     float = field(default=0.0, converter=float, validator=_rate)
    e2:     float = field(default=0.0, converter=float, validator=_rate)
    e_idle: float = field(default=0.0, converter=float, validator=_rate)
    e_ro:   float = field(default=0.0, converter=float, validator=_rate)


NoiseSpec = Union[Mixture, Trajectory]

_NUMBER     = r"[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?"
_MIXTURE    = regex.compile(rf"mixture:(?P<f>{_NUMBER})")
_TRAJECTORY = regex.compile(rf"trajectory(?::(?P<body>(?:(?:e1|e2|idle|ro)={_NUMBER})(?:,(?:e1|e2|idle|ro)={_NUMBER})*))?")
_ASSIGNMENT = regex.compile(rf"(?P<key>e1|e2|idle|ro)=(?P<value>{_NUMBER})")
_KEYS       = {"e1": "e1", "e2": "e2", "idle": "e_idle", "ro": "e_ro"}


def parse_noise(text: Optional[str], profile: Optional[DeviceProfile] = None) -> Optional[NoiseSpec]:
    """
    Parse a noise flag.

    Accepted forms: "ideal" / "none" / empty, "mixture:0.5", "trajectory:e2=0.01,ro=0.005"
    (missing rates are zero) and "trajectory:profile" (rates from `profile`).

    Raises:
        UsageError: Unrecognized text.
        ValidationError: A rate or fidelity out of range.
    """
    if text is None or text.strip().lower() in ("", "ideal", "none"):
        return None
    text = text.strip().lower()

    if text == "trajectory:profile":
        if profile is None:
            raise UsageError("trajectory:profile needs a device profile")
        return trajectory_from_profile(profile)

    if match := _MIXTURE.fullmatch(text):
        return Mixture(float(match["f"]))

    if match := _TRAJECTORY.fullmatch(text):
        rates: dict[str, float] = {}
        for assignment in _ASSIGNMENT.finditer(match["body"] or ""):
            key = _KEYS[assignment["key"]]
            if key in rates:
                raise UsageError(f"noise rate {assignment['key']} given twice in {text!r}")
            rates[key] = float(assignment["value"])
        return Trajectory(**rates)

    raise UsageError(f"unrecognized noise spec {text!r}; expected ideal, mixture:F or trajectory:e1=..,e2=..,idle=..,ro=..")


def noise_text(noise: Optional[NoiseSpec]) -> str:
    if noise is None:
        return "ideal"
    if isinstance(noise, Mixture):
        return f"mixture:{noise.f!r}"
    return f"trajectory:e1={noise.e1!r},e2={noise.e2!r},idle={noise.e_idle!r},ro={noise.e_ro!r}"


def trajectory_from_profile(profile: DeviceProfile) -> Trajectory:
    """
    Device-wide rates of a profile as a trajectory spec.

    Raises:
        MissingRateError: If the profile has no device-wide value for a rate.
    """
    d = profile.defaults
    rates = {"e1": d.e1, "e2": profile.e2, "e_idle": d.e_idle, "e_ro": d.e_ro}
    for quantity, value in rates.items():
        if value is None:
            raise MissingRateError(quantity, f"profile {profile.name!r} (device-wide default)")
    return Trajectory(**rates)
