"""
Circuits Module

Random circuit generation on a qubit subset, patch cuts, gate counting and circuit documents.

Classes:
    GateKind: SX, SY, SW
    Gate1Q: Square-root single-qubit gate
    Gate2Q: iSWAP-like two-qubit gate
    Circuit: Layered circuit
    PatchSpec: Partition of a subset into regions
    GateCounts: (n_1q, n_2q, n_idle, n_measured)

Functions:
    generate: Random circuit
    apply_patch: Remove gates crossing patch regions
    patch_spec: Bundled or grid patch layout
    gate_counts: Gate tallies
    serialize: Circuit document
    deserialize: Circuit from a document
"""

from .gates     import GateKind, Gate1Q, Gate2Q, PAULI_X, PAULI_Y, PAULI_Z
from .circuit   import (DEFAULT_SEQUENCE, OneQubitLayer, TwoQubitOp, TwoQubitLayer, Layer, PatchSpec, GateCounts,
                        Circuit, two_qubit_layer, gate_counts)
from .generator import generate, check_sequence
from .patch     import validate_patch, grid_patches, patch_spec, apply_patch, local_regions, patch_circuits
from .serialize import serialize, deserialize, circuit_id, save_circuit, load_circuit

__all__ = [
    "GateKind", "Gate1Q", "Gate2Q", "PAULI_X", "PAULI_Y", "PAULI_Z",
    "DEFAULT_SEQUENCE", "OneQubitLayer", "TwoQubitOp", "TwoQubitLayer", "Layer", "PatchSpec", "GateCounts",
    "Circuit", "two_qubit_layer", "gate_counts",
    "generate", "check_sequence",
    "validate_patch", "grid_patches", "patch_spec", "apply_patch", "local_regions", "patch_circuits",
    "serialize", "deserialize", "circuit_id", "save_circuit", "load_circuit",
]
