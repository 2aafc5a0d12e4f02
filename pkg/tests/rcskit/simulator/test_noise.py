"""
Unit tests for the noise module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest

# Module Under Test
from rcskit.common.errors import MissingRateError, UsageError, ValidationError
from rcskit.device import DeviceProfile, QubitRates
from rcskit.simulator import Mixture, Trajectory, noise_text, parse_noise

# Test Constants
parsed = [
    (None,                              None),
    ("",                                None),
    ("ideal",                           None),
    (" None ",                          None),
    ("mixture:0.5",                     Mixture(0.5)),
    ("mixture:1",                       Mixture(1.0)),
    ("trajectory",                      Trajectory()),
    ("trajectory:e2=0.01",              Trajectory(e2=0.01)),
    ("trajectory:e2=0.01,ro=5e-3",      Trajectory(e2=0.01, e_ro=0.005)),
    ("trajectory:idle=1e-4,e1=0.001",   Trajectory(e1=0.001, e_idle=1e-4)),
]

unrecognized = [
    "mixture",
    "mixture:",
    "depolarizing:0.1",
    "trajectory:e3=0.1",
    "trajectory:e2=0.1,e2=0.2",
    "trajectory:e2=0.1;ro=0.1",
]

out_of_range = ["mixture:1.5", "trajectory:e2=1", "trajectory:ro=2.0"]


# Test Cases
@pytest.mark.parametrize("text, expected", parsed)
def test_parse_noise(text, expected):
    assert parse_noise(text) == expected


@pytest.mark.parametrize("text", unrecognized)
def test_unrecognized_noise(text):
    with pytest.raises(UsageError):
        parse_noise(text)


@pytest.mark.parametrize("text", out_of_range)
def test_noise_out_of_range(text):
    with pytest.raises(ValidationError):
        parse_noise(text)


@pytest.mark.parametrize("noise", [None, Mixture(0.25), Trajectory(0.001, 0.0037, 1e-05, 0.0087)])
def test_noise_text_parses_back(noise):
    assert parse_noise(noise_text(noise)) == noise


def test_trajectory_from_profile(profile):
    noise = parse_noise("trajectory:profile", profile)
    assert noise.e1 == pytest.approx(0.00097)
    assert noise.e2 == pytest.approx(0.00375)
    assert noise.e_idle == pytest.approx(0.00097)
    assert noise.e_ro == pytest.approx(0.00867)


def test_trajectory_from_profile_needs_a_profile():
    with pytest.raises(UsageError):
        parse_noise("trajectory:profile")


def test_trajectory_from_incomplete_profile():
    with pytest.raises(MissingRateError):
        parse_noise("trajectory:profile", DeviceProfile("bare", QubitRates(e1=0.001)))
