"""
Random Circuit Generator

Cycle t applies a random square-root gate to every active qubit, then the two-qubit gates of
pattern `sequence[t mod len(sequence)]` restricted to the subset. A trailing single-qubit layer
precedes measurement.

Single-qubit choices come from counter streams keyed by (seed, cycle, linear qubit id), so a
circuit is a pure function of its inputs.
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from typing import Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import regex

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.errors    import ValidationError
from ..common.rng       import Stream, check_seed, stream
from ..device.profile   import DeviceProfile
from ..device.subset    import QubitSubset, pattern_layer, validate_subset
from ..device.topology  import DeviceTopology
from ..logger           import debug, info
from .circuit           import (DEFAULT_SEQUENCE, Circuit, Layer, OneQubitLayer, TwoQubitOp, gate_counts,
                                two_qubit_layer)
from .gates             import Gate1Q, Gate2Q, GateKind

__all__ = ["generate", "check_sequence"]

_KINDS      = tuple(GateKind)
_SEQUENCE   = regex.compile(r"[ABCD]+")


def check_sequence(sequence: str) -> str:
    """
    Normalize a pattern sequence ("ABCD-CDAB" and "abcdcdab" are accepted).

    Raises:
        ValidationError: If the sequence is empty or uses other labels.
    """
    cleaned = regex.sub(r"[\s\-]", "", sequence).upper()
    if not _SEQUENCE.fullmatch(cleaned):
        raise ValidationError(f"pattern sequence {sequence!r} must be a non-empty string over A, B, C, D")
    return cleaned


def _choose(seed: int, cycle: int, qubit: int, previous: Optional[GateKind], no_repeat: bool) -> GateKind:
    rng = stream(seed, Stream.CIRCUIT, cycle, qubit)
    if no_repeat and previous is not None:
        others = tuple(k for k in _KINDS if k is not previous)
        return others[int(rng.integers(2))]
    return _KINDS[int(rng.integers(3))]


def generate(topology:  DeviceTopology,
             subset:    QubitSubset,
             cycles:    int,
             seed:      int,
             profile:   DeviceProfile,
             sequence:  str  = DEFAULT_SEQUENCE,
             no_repeat: bool = True) -> Circuit:
    """
    Generate a random circuit.

    Args:
        topology: Device lattice
        subset: Active qubits
        cycles: Cycle count m >= 1
        seed: Seed in [0, 2**64)
        profile: Supplies two-qubit gate parameters per coupler
        sequence: Repeating pattern labels
        no_repeat: Forbid the same single-qubit gate on a qubit in consecutive layers

    Returns:
        The circuit.

    Raises:
        ValidationError: Empty or disconnected subset, m < 1, bad sequence or seed.
        MissingRateError: Profile lacks gate parameters for a used coupler.
    """
    if cycles < 1:
        raise ValidationError(f"cycles must be at least 1, got {cycles}")
    seed     = check_seed(seed)
    sequence = check_sequence(sequence)
    validate_subset(topology, subset)

    local    = subset.local_index()
    matching = {label: pattern_layer(topology, subset, label) for label in set(sequence)}
    previous: list[Optional[GateKind]] = [None] * subset.n
    layers:   list[Layer] = []

    for cycle in range(cycles + 1):
        kinds = [_choose(seed, cycle, q, previous[i], no_repeat) for i, q in enumerate(subset.active)]
        layers.append(OneQubitLayer(cycle, tuple((i, Gate1Q(k)) for i, k in enumerate(kinds))))
        previous = kinds
        if cycle == cycles:
            break

        label = sequence[cycle % len(sequence)]
        ops   = tuple(
            TwoQubitOp((local[a], local[b]), (a, b), Gate2Q.from_parameters(profile.gate_of((a, b))))
            for a, b in matching[label]
        )
        layers.append(two_qubit_layer(subset.n, cycle, label, ops))

    circuit = Circuit(subset, cycles, tuple(layers), sequence, seed, no_repeat,
                      profile=profile.name, topology=topology.name)
    counts  = gate_counts(circuit)
    debug(f"gate counts {counts}")
    info(f"generated {subset.n}-qubit, {cycles}-cycle circuit on {subset.name!r} (seed {seed}, {counts.n_2q} two-qubit gates)")
    return circuit
