"""
Unit tests for the gates module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import math
import pytest

# External Libraries
import numpy as np

# Module Under Test
from rcskit.circuits.gates import PAULI_W, PAULI_X, PAULI_Y, Gate1Q, Gate2Q, GateKind
from rcskit.device import GateParameters

# Test Constants
generators = [
    (GateKind.SX,   PAULI_X),
    (GateKind.SY,   PAULI_Y),
    (GateKind.SW,   PAULI_W),
]

angles = [
    (math.pi / 2,   0.0,            0.0,    0.0,    0.0),
    (math.pi / 2,   math.pi / 6,    0.0,    0.0,    0.0),
    (1.3,           0.4,            0.2,    -0.7,   0.05),
]


# Test Cases
@pytest.mark.parametrize("kind, generator", generators)
def test_single_qubit_gate_is_a_square_root(kind, generator):
    matrix = Gate1Q(kind).matrix
    assert np.allclose(matrix.conj().T @ matrix, np.eye(2))
    assert np.allclose(matrix @ matrix, -1j * generator)


def test_single_qubit_kind_from_text():
    assert Gate1Q("SW").kind is GateKind.SW
    with pytest.raises(ValueError):
        Gate1Q("SZ")


@pytest.mark.parametrize("theta, phi, dp, dm, doff", angles)
def test_two_qubit_gate_is_unitary(theta, phi, dp, dm, doff):
    matrix = Gate2Q(theta, phi, dp, dm, doff).matrix
    assert np.allclose(matrix.conj().T @ matrix, np.eye(4))


def test_iswap_limit():
    matrix = Gate2Q.from_parameters(GateParameters.ideal_iswap()).matrix
    state_01 = np.array([0, 1, 0, 0], dtype=complex)
    assert np.allclose(matrix @ state_01, [0, 0, -1j, 0])
    assert matrix[0, 0] == 1 and matrix[3, 3] == 1


def test_conditional_phase():
    matrix = Gate2Q(math.pi / 2, math.pi / 6).matrix
    assert np.isclose(matrix[3, 3], np.exp(-1j * math.pi / 6))


def test_tensor_layout():
    gate = Gate2Q(1.1, 0.3, 0.1, 0.2, 0.3)
    tensor = gate.tensor
    assert tensor.shape == (2, 2, 2, 2)
    # out_a, out_b, in_a, in_b
    assert tensor[1, 0, 0, 1] == gate.matrix[2, 1]


def test_parameters_round_trip():
    params = GateParameters(1.0, 0.5, 0.1, 0.2, 0.3)
    assert Gate2Q.from_parameters(params).parameters() == params


def test_matrices_are_read_only():
    with pytest.raises(ValueError):
        Gate1Q(GateKind.SX).matrix[0, 0] = 0
