"""
Unit tests for the estimators module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import math
import pytest
from hypothesis import given, strategies as st

# External Libraries
import numpy as np

# Module Under Test
from rcskit.circuits import generate
from rcskit.common.errors import ParseError, ValidationError
from rcskit.device import block_subset
from rcskit.simulator import SampleSet, simulate
from rcskit.xeb import (
    FidelityEstimate,
    estimate_document,
    ideal_xeb,
    linear_xeb,
    linear_xeb_from_probabilities,
    load_estimate,
    porter_thomas_test,
    speckle_purity,
    )

# Test Constants
D = 1 << 16


@pytest.fixture(scope="module")
def porter_thomas():
    """Exponentially distributed probabilities over sixteen qubits."""
    weights = np.random.default_rng(11).exponential(size=D)
    return weights / weights.sum()


@pytest.fixture(scope="module")
def uniform():
    return np.full(D, 1.0 / D)


# Test Cases
def test_linear_xeb_from_probabilities():
    estimate = linear_xeb_from_probabilities(np.full(400, 2.0 / 64), 6)
    assert estimate.value == pytest.approx(1.0)
    assert estimate.stderr == pytest.approx(0.05)
    assert estimate.shots == 400
    assert estimate.method == "linear_xeb"


@pytest.mark.parametrize("probabilities", [[], [0.5, 1.5], [-0.1], [[0.1, 0.2]]])
def test_linear_xeb_rejects(probabilities):
    with pytest.raises(ValidationError):
        linear_xeb_from_probabilities(np.array(probabilities), 4)


@given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=64),
       st.floats(min_value=0.01, max_value=1.0))
def test_linear_xeb_is_affine_in_the_probabilities(probabilities, c):
    p    = np.array(probabilities)
    base = linear_xeb_from_probabilities(p, 5).value
    assert linear_xeb_from_probabilities(c * p, 5).value == pytest.approx(c * (base + 1.0) - 1.0, rel=1e-9, abs=1e-9)


def test_linear_xeb_of_samples():
    samples = SampleSet(2, np.array([0, 3], dtype=np.uint64), np.array([0.5, 0.25]))
    assert linear_xeb(samples).value == pytest.approx(0.5)
    with pytest.raises(ValidationError):
        linear_xeb(samples, n=3)
    with pytest.raises(ValidationError):
        linear_xeb(SampleSet(2, np.array([0, 3], dtype=np.uint64)))


def test_ideal_xeb(porter_thomas, uniform):
    assert ideal_xeb(uniform) == pytest.approx(0.0, abs=1e-9)
    assert ideal_xeb(porter_thomas) == pytest.approx(1.0, abs=0.05)
    assert ideal_xeb(np.eye(8)[3]) == pytest.approx(7.0)


def test_porter_thomas(porter_thomas, uniform):
    assert porter_thomas_test(porter_thomas) < 0.01
    assert porter_thomas_test(uniform) == pytest.approx(1.0 - math.exp(-1.0))


def test_random_circuits_reach_porter_thomas(topology, profile, rect16):
    deep    = simulate(generate(topology, rect16, 14, 3, profile)).probabilities()
    shallow = simulate(generate(topology, rect16, 1, 3, profile)).probabilities()
    assert porter_thomas_test(deep) < 0.02
    assert porter_thomas_test(shallow) > 0.1


@pytest.mark.slow
def test_porter_thomas_onset_at_fourteen_qubits(topology, profile):
    subset  = block_subset(topology, 14)
    deep    = [porter_thomas_test(simulate(generate(topology, subset, 14, seed, profile)).probabilities())
               for seed in range(7)]
    shallow = [porter_thomas_test(simulate(generate(topology, subset, 1, seed, profile)).probabilities())
               for seed in range(7)]
    # KS noise alone is about 0.007 per circuit at D = 2**14
    assert np.median(deep) < 0.01
    assert min(shallow) > 0.05


@pytest.mark.parametrize("f", [1.0, 0.6, 0.2])
def test_speckle_purity_recovers_fidelity(porter_thomas, f):
    mixed    = f * porter_thomas + (1.0 - f) / D
    estimate = speckle_purity(mixed)
    assert estimate.value == pytest.approx(f, abs=0.02)
    assert estimate.method == "speckle_purity"
    assert estimate.shots == D


def test_speckle_purity_ignores_order(porter_thomas):
    mixed    = 0.4 * porter_thomas + 0.6 / D
    shuffled = np.random.default_rng(5).permutation(mixed)
    assert speckle_purity(shuffled).value == pytest.approx(speckle_purity(mixed).value, rel=1e-9)


def test_speckle_purity_of_uniform(uniform):
    assert speckle_purity(uniform).value == pytest.approx(0.0, abs=1e-6)


@pytest.mark.parametrize("probabilities", [np.full(8, 0.1), np.array([])])
def test_distributions_must_be_normalized(probabilities):
    with pytest.raises(ValidationError):
        porter_thomas_test(probabilities)
    with pytest.raises(ValidationError):
        speckle_purity(probabilities)


def test_estimate_fields():
    assert str(FidelityEstimate(0.0021, 0.0001, 10**6)) == "0.0021 +/- 0.0001 (linear_xeb, N=1000000)"
    with pytest.raises(ValidationError):
        FidelityEstimate(0.1, -0.01, 10)
    with pytest.raises(ValidationError):
        FidelityEstimate(0.1, 0.01, 0)


def test_estimate_documents():
    estimate = FidelityEstimate(0.0022, 0.0003, 5000)
    document = estimate_document(estimate, circuit_id="0123456789abcdef", seed=4)
    assert document["circuit_id"] == "0123456789abcdef"
    assert load_estimate(document) == estimate


@pytest.mark.parametrize("field, value, location", [
    ("stderr",  -1.0,       "stderr"),
    ("method",  "guess",    "method"),
    ("shots",   0,          "shots"),
    ("kind",    "samples",  "kind"),
])
def test_invalid_estimate_documents(field, value, location):
    document = estimate_document(FidelityEstimate(0.5, 0.01, 100))
    document[field] = value
    with pytest.raises(ParseError) as caught:
        load_estimate(document)
    assert caught.value.location == location
