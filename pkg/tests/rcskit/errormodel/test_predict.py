"""
Unit tests for the predict and report modules.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import math
import pytest
from attrs import evolve

# Module Under Test
from rcskit.circuits import apply_patch, gate_counts, generate, grid_patches
from rcskit.common.errors import MissingRateError, ValidationError
from rcskit.device import CouplerRates, DeviceProfile, QubitRates, resolve_subset
from rcskit.errormodel import budget_document, budget_table, patch_ratio, predict_fidelity

# Test Constants
E1, E2, E_IDLE, E_RO = 0.00097, 0.00375, 0.00097, 0.00867


# Test Cases
def test_prediction_is_a_product_of_rates(topology, profile, rect12):
    circuit     = generate(topology, rect12, 6, 2, profile)
    counts      = gate_counts(circuit)
    estimate, _ = predict_fidelity(circuit, profile)
    expected    = ((1 - E1) ** counts.n_1q * (1 - E2) ** counts.n_2q
                   * (1 - E_IDLE) ** counts.n_idle * (1 - E_RO) ** counts.n_measured)
    assert estimate.value == pytest.approx(expected, rel=1e-12)
    assert estimate.method == "error_model"


def test_budget_terms(topology, profile, rect12):
    circuit   = generate(topology, rect12, 6, 2, profile)
    counts    = gate_counts(circuit)
    _, budget = predict_fidelity(circuit, profile)
    assert [term.kind for term in budget.terms] == ["1q", "2q", "idle", "readout"]
    assert budget.term("2q").count == counts.n_2q
    assert budget.term("2q").mean_rate == pytest.approx(E2)
    assert budget.term("readout").count == 12
    assert math.prod(term.fidelity for term in budget.terms) == pytest.approx(budget.fidelity)
    with pytest.raises(KeyError):
        budget.term("3q")


def test_large_circuit_prediction(topology, profile):
    circuit     = generate(topology, resolve_subset("subset83", topology), 32, 0, profile)
    estimate, _ = predict_fidelity(circuit, profile)
    assert estimate.value == pytest.approx(3.3e-4, rel=0.02)
    assert 2.5e-4 / 3 < estimate.value < 2.5e-4 * 3


def test_state_resolved_readout(topology, profile, rect6):
    circuit     = generate(topology, rect6, 3, 0, profile)
    average, _  = predict_fidelity(circuit, profile)
    resolved, _ = predict_fidelity(circuit, profile, "state_resolved")
    # the mean profile's average readout error is the mean of the two state errors
    assert resolved.value == pytest.approx(average.value, rel=1e-9)


def test_prep_factor(topology, profile, rect6):
    circuit       = generate(topology, rect6, 3, 0, profile)
    plain, _      = predict_fidelity(circuit, profile)
    scaled, budget = predict_fidelity(circuit, profile, prep_factor=0.98)
    assert scaled.value == pytest.approx(0.98 * plain.value)
    assert "prep" in budget_table(budget)


@pytest.mark.parametrize("readout, prep_factor", [("best", 1.0), ("average", 0.0), ("average", -1.0)])
def test_invalid_arguments(topology, profile, rect6, readout, prep_factor):
    with pytest.raises(ValidationError):
        predict_fidelity(generate(topology, rect6, 1, 0, profile), profile, readout, prep_factor)


def test_missing_rates(topology, profile, rect6):
    circuit = generate(topology, rect6, 1, 0, profile)
    with pytest.raises(MissingRateError):
        predict_fidelity(circuit, DeviceProfile("partial", QubitRates(e1=0.001, e_ro=0.01, e_idle=0.001)))


def test_coupler_overrides_are_used(topology, profile, rect6):
    circuit    = generate(topology, rect6, 1, 0, profile)
    layer      = circuit.layers[1]
    coupler    = layer.gates[0].coupler
    worse      = evolve(profile, couplers={coupler: CouplerRates(e2=0.1)})
    base, _    = predict_fidelity(circuit, profile)
    changed, _ = predict_fidelity(circuit, worse)
    assert changed.value == pytest.approx(base.value * 0.9 / (1 - E2))


def test_patch_ratio(topology, profile, rect16):
    circuit = generate(topology, rect16, 8, 1, profile)
    spec    = grid_patches(topology, rect16, 4)
    removed = gate_counts(circuit).n_2q - gate_counts(apply_patch(circuit, spec)).n_2q
    assert removed > 0
    assert patch_ratio(circuit, spec, profile) == pytest.approx((1 - E2) ** -removed)
    assert patch_ratio(circuit, spec, profile, topology=topology) == patch_ratio(circuit, spec, profile)


def test_budget_report(topology, profile, rect6):
    estimate, budget = predict_fidelity(generate(topology, rect6, 2, 0, profile), profile)
    document = budget_document(estimate, budget, circuit_id="abc")
    assert document["kind"] == "budget"
    assert document["circuit_id"] == "abc"
    assert [term["kind"] for term in document["terms"]] == ["1q", "2q", "idle", "readout"]
    lines = budget_table(budget).splitlines()
    assert lines[0].split() == ["kind", "count", "mean", "rate", "fidelity"]
    assert lines[-1].split() == ["total", f"{budget.fidelity:.4e}"]
    assert len(lines) == 6
