"""
Quantum Runtime

Wall-clock time the processor needs to draw samples, and the accounting of a sampling campaign
that interleaves probe circuits with the main circuit.

Classes:
    CampaignRuntime: Main, probe and total sampling time

Functions:
    estimate_quantum_runtime: N * sampling interval
    campaign_runtime: Main shots plus interleaved probe blocks
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import math
from typing     import Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import frozen

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.errors    import ValidationError
from ..device.profile   import DeviceProfile, Durations

__all__ = [
    "PROBE_EVERY",
    "PROBE_SHOTS",
    "OBSERVED_CAMPAIGN_HOURS",
    "CampaignRuntime",
    "estimate_quantum_runtime",
    "campaign_runtime",
]

PROBE_EVERY = 10_000_000
"""Main-circuit shots between probe blocks."""

PROBE_SHOTS = 500_000
"""Shots per probe block."""

OBSERVED_CAMPAIGN_HOURS = 91.0
"""Wall clock of the 410-million-shot full-circuit campaign."""


def _interval(profile: Optional[DeviceProfile]) -> float:
    return (profile.durations if profile is not None else Durations()).sampling_interval


def _check_shots(name: str, shots: int) -> int:
    if int(shots) != shots or shots < 1:
        raise ValidationError(f"{name} must be a positive integer, got {shots!r}")
    return int(shots)


def estimate_quantum_runtime(shots: int, profile: Optional[DeviceProfile] = None) -> float:
    """
    Seconds to draw `shots` samples: shots * sampling interval (400 us by default).

    Raises:
        ValidationError: If shots < 1.
    """
    return _check_shots("shots", shots) * _interval(profile)


@frozen
class CampaignRuntime:
    """
    Attributes:
        main_shots: Main-circuit samples
        probe_blocks: Probe blocks, one before and one after every stretch of main shots
        probe_shots: Total probe samples
        main_seconds: Main-circuit sampling time
        probe_seconds: Probe sampling time
    """

    main_shots:     int
    probe_blocks:   int
    probe_shots:    int
    main_seconds:   float
    probe_seconds:  float

    @property
    def total_seconds(self) -> float:
        return self.main_seconds + self.probe_seconds

    @property
    def total_hours(self) -> float:
        return self.total_seconds / 3600.0

    def note(self) -> str:
        return (f"pure sampling accounts for {self.total_hours:.1f} h; the observed "
                f"{OBSERVED_CAMPAIGN_HOURS:g} h campaign also includes time spent outside sampling")


def campaign_runtime(total_shots:   int,
                     profile:       Optional[DeviceProfile] = None,
                     probe_every:   int = PROBE_EVERY,
                     probe_shots:   int = PROBE_SHOTS) -> CampaignRuntime:
    """
    Sampling time of a campaign with probe circuits interleaved.

    The main shots are split into ceil(total / probe_every) stretches with a probe block before
    the first and after every stretch.
    """
    total_shots = _check_shots("total_shots", total_shots)
    probe_every = _check_shots("probe_every", probe_every)
    probe_shots = _check_shots("probe_shots", probe_shots)
    interval    = _interval(profile)
    blocks      = math.ceil(total_shots / probe_every) + 1
    return CampaignRuntime(
        main_shots      = total_shots,
        probe_blocks    = blocks,
        probe_shots     = blocks * probe_shots,
        main_seconds    = total_shots * interval,
        probe_seconds   = blocks * probe_shots * interval,
    )
