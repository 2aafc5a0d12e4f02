"""
Unit tests for the topology module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest
from hypothesis import given, strategies as st

# Module Under Test
from rcskit.common.errors import ParseError, ValidationError
from rcskit.device.topology import (
    LABELS,
    DeviceTopology,
    build_topology,
    load_topology,
    topology_document,
    )

# Test Constants
zcz3_label_counts = [
    ("A", 49),
    ("B", 42),
    ("C", 42),
    ("D", 49),
]


# Test Cases
def test_bundled_lattice_shape(topology):
    assert (topology.rows, topology.cols, topology.n_qubits) == (15, 7, 105)
    assert len(topology.couplers) == 182
    assert topology.name == "zcz3"


@pytest.mark.parametrize("label, count", zcz3_label_counts)
def test_pattern_classes(topology, label, count):
    assert len(topology.couplers_with(label)) == count


def test_patterns_partition_the_couplers(topology):
    union = [c for label in LABELS for c in topology.couplers_with(label)]
    assert sorted(union) == list(topology.couplers)


@given(rows=st.integers(1, 9), cols=st.integers(1, 9))
def test_each_pattern_is_a_matching(rows, cols):
    lattice = build_topology(rows, cols)
    assert len(lattice.couplers) == (rows - 1) * (2 * cols - 1)
    for label in LABELS:
        qubits = [q for coupler in lattice.couplers_with(label) for q in coupler]
        assert len(qubits) == len(set(qubits))


def test_coupler_rule(topology):
    # Even rows couple down (A) and down-left (C); odd rows down (D) and down-right (B)
    assert topology.label_of[(0, 7)] == "A"
    assert topology.label_of[(1, 7)] == "C"
    assert topology.label_of[(7, 14)] == "D"
    assert topology.label_of[(7, 15)] == "B"
    assert (0, 8) not in topology.label_of


def test_degree_at_most_four(topology):
    assert max(len(neighbors) for neighbors in topology.adjacency.values()) == 4


def test_qubit_coordinates(topology):
    qubit = topology.qubit(52)
    assert (qubit.row, qubit.col) == (7, 3)
    assert topology.qubit_at(7, 3) == qubit
    assert str(qubit) == "Q052(r7,c3)"
    with pytest.raises(ValidationError):
        topology.qubit(105)
    with pytest.raises(ValidationError):
        topology.qubit_at(0, 7)


def test_explicit_document_round_trip(topology):
    document = topology_document(topology, explicit=True)
    assert len(document["couplers"]) == 182
    assert load_topology(document) == topology


def test_explicit_couplers_must_form_matchings():
    document = {"schema_version": 1, "kind": "topology", "rows": 2, "cols": 2,
                "couplers": [[0, 2, "A"], [0, 3, "A"]]}
    with pytest.raises(ValidationError, match="matching"):
        load_topology(document)


def test_unknown_label_is_a_parse_error():
    document = {"schema_version": 1, "kind": "topology", "rows": 2, "cols": 2, "couplers": [[0, 2, "E"]]}
    with pytest.raises(ParseError) as caught:
        load_topology(document)
    assert caught.value.location.startswith("couplers.0")


@pytest.mark.parametrize("rows, cols", [(0, 3), (3, 0)])
def test_empty_lattice(rows, cols):
    with pytest.raises(ValidationError):
        build_topology(rows, cols)


def test_coupler_outside_lattice():
    with pytest.raises(ValidationError):
        DeviceTopology(2, 2, ((0, 4),), ("A",))
