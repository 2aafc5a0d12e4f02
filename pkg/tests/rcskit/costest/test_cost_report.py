"""
Unit tests for the cost report module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest

# External Libraries
from attrs import evolve

# Module Under Test
from rcskit.circuits import generate
from rcskit.common.errors import ParseError, ValidationError
from rcskit.configurator.settings import configure_settings
from rcskit.costest import (
    SAMPLING_MODEL,
    MachineModel,
    build_network,
    convert_runtime,
    format_duration,
    optimize_order,
    parse_memory,
    report_cost,
    report_document,
    )

# Test Constants
durations = [
    (0.31,                  "0.3 s"),
    (1.543,                 "1.5 s"),
    (90.0,                  "1.5 min"),
    (7200.0,                "2.0 h"),
    (3 * 86400.0,           "3.0 d"),
    (2 * 365 * 86400.0,     "2.0 yr"),
    (6.4e9 * 365 * 86400.0, "6.4e+09 yr"),
]

memories = [
    ("9.2PB",       9.2e15),
    ("762.2 PB",    762.2e15),
    ("64MiB",       64 * 2 ** 20),
    ("64 mib",      64 * 2 ** 20),
    ("1 GiB",       2 ** 30),
    ("2KB",         2000.0),
    ("512B",        512.0),
    ("1e9",         1e9),
]


@pytest.fixture
def plan(topology, profile, rect6):
    return optimize_order(build_network(generate(topology, rect6, 3, 0, profile)), 0)


# Test Cases
@pytest.mark.parametrize("seconds, text", durations)
def test_format_duration(seconds, text):
    assert format_duration(seconds) == text


@pytest.mark.parametrize("text, value", memories)
def test_parse_memory(text, value):
    assert parse_memory(text) == pytest.approx(value)


@pytest.mark.parametrize("text", ["", "lots", "5 XB", "PB", "-1GB"])
def test_parse_memory_rejects(text):
    with pytest.raises(ParseError):
        parse_memory(text)


def test_machine_model():
    machine = MachineModel()
    assert machine.runtime(6.5e16) == pytest.approx(1.543, abs=1e-3)
    assert convert_runtime(6.5e16) == pytest.approx(machine.runtime(6.5e16))
    assert MachineModel(efficiency=1.0).runtime(1.685e18) == pytest.approx(8.0)


@pytest.mark.parametrize("kwargs", [{"efficiency": 0.0}, {"efficiency": 1.5}, {"peak_flops": -1.0}])
def test_invalid_machine(kwargs):
    with pytest.raises(ValidationError):
        MachineModel(**kwargs)


def test_machine_from_settings(tmp_path):
    config = tmp_path / "machine.yaml"
    config.write_text("costest:\n  efficiency: 0.5\n")
    configure_settings(config)
    assert MachineModel.from_settings().efficiency == 0.5
    assert MachineModel.from_settings(efficiency=0.1).efficiency == 0.1


def test_report(plan):
    report = report_cost(plan, shots=1000, fidelity=0.002)
    assert report.complex_flops == plan.complex_flops
    assert report.max_intermediate_bytes == plan.max_intermediate_bytes
    assert report.sample_complex_flops == pytest.approx(2.0 * plan.complex_flops)
    assert report.machine_flops == pytest.approx(8.0 * plan.complex_flops)
    assert "1000 noisy samples at f=0.002" in report.summary()


def test_memory_follows_the_plan_precision(plan):
    double = evolve(plan, bytes_per_entry=16)
    report = report_cost(double, MachineModel(), shots=1, fidelity=1.0)
    assert report.max_intermediate_bytes == 16 * plan.max_entries
    assert report_document(report)["max_intermediate_bytes"] == 2 * plan.max_intermediate_bytes


def test_batch_amortization(plan):
    report = report_cost(plan, MachineModel(batch_amortization=4.0), shots=1000, fidelity=1.0)
    assert report.sample_complex_flops == pytest.approx(250.0 * plan.complex_flops)


@pytest.mark.parametrize("shots, fidelity", [(0, 0.5), (10, 0.0), (10, 1.5)])
def test_invalid_report(plan, shots, fidelity):
    with pytest.raises(ValidationError):
        report_cost(plan, shots=shots, fidelity=fidelity)


def test_report_document(plan):
    document = report_document(report_cost(plan), circuit_id="abc")
    assert document["kind"] == "cost_report"
    assert document["circuit_id"] == "abc"
    assert document["sampling"]["model"] == SAMPLING_MODEL
    assert document["sampling"]["shots"] == 1_000_000
    assert document["machine"]["efficiency"] == 0.2
