"""
Unit tests for the runtime module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest
from attrs import evolve

# Module Under Test
from rcskit.common.errors import ValidationError
from rcskit.device import Durations
from rcskit.errormodel import PROBE_SHOTS, campaign_runtime, estimate_quantum_runtime

# Test Constants
runtimes = [
    (1,             400e-6),
    (1_000,         0.4),
    (1_000_000,     400.0),
    (410_000_000,   164_000.0),
]


# Test Cases
@pytest.mark.parametrize("shots, seconds", runtimes)
def test_quantum_runtime(shots, seconds):
    assert estimate_quantum_runtime(shots) == pytest.approx(seconds)


def test_runtime_follows_the_profile(profile):
    assert estimate_quantum_runtime(10**6, profile) == pytest.approx(400.0)
    faster = evolve(profile, durations=Durations(sampling_interval=100e-6))
    assert estimate_quantum_runtime(10**6, faster) == pytest.approx(100.0)


@pytest.mark.parametrize("shots", [0, -1, 2.5])
def test_invalid_shots(shots):
    with pytest.raises(ValidationError):
        estimate_quantum_runtime(shots)


def test_campaign_runtime():
    campaign = campaign_runtime(410_000_000)
    assert campaign.probe_blocks == 42
    assert campaign.probe_shots == 42 * PROBE_SHOTS
    assert campaign.main_seconds == pytest.approx(164_000.0)
    assert campaign.probe_seconds == pytest.approx(8_400.0)
    assert campaign.total_hours == pytest.approx(172_400.0 / 3600.0)
    assert "47.9 h" in campaign.note()
    assert "91 h" in campaign.note()


def test_campaign_with_custom_probes():
    campaign = campaign_runtime(25, probe_every=10, probe_shots=2)
    assert campaign.probe_blocks == 4
    assert campaign.total_seconds == pytest.approx(33 * 400e-6)
    with pytest.raises(ValidationError):
        campaign_runtime(25, probe_every=0)
