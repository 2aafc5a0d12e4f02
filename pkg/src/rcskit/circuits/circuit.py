"""
Circuit Types

Immutable layered circuits over a qubit subset.

Qubits inside a circuit are local indices into `subset.active`; local qubit 0 is the most
significant bit of every bitstring. Idle markers of a two-qubit layer are fixed when the layer is
built and are not changed by patching.

Classes:
    OneQubitLayer: Single-qubit gates of one cycle
    TwoQubitOp: One two-qubit gate
    TwoQubitLayer: Two-qubit gates of one pattern, plus idle markers
    PatchSpec: Partition of a subset into regions
    GateCounts: Gate tallies feeding the error model
    Circuit: Subset, generation metadata and layers

Functions:
    two_qubit_layer: Build a layer marking every uncovered qubit idle
    gate_counts: Count 1q gates, 2q gates, idle slots and measured qubits
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from typing     import NamedTuple, Optional, Union

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import frozen, field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.errors    import ValidationError
from ..device.subset    import QubitSubset
from ..device.topology  import Coupler
from .gates             import Gate1Q, Gate2Q

__all__ = [
    "DEFAULT_SEQUENCE",
    "OneQubitLayer",
    "TwoQubitOp",
    "TwoQubitLayer",
    "Layer",
    "PatchSpec",
    "GateCounts",
    "Circuit",
    "two_qubit_layer",
    "gate_counts",
]

DEFAULT_SEQUENCE = "ABCDCDAB"


@frozen
class OneQubitLayer:
    """(local qubit, gate) pairs in ascending qubit order."""

    cycle:  int
    gates:  tuple[tuple[int, Gate1Q], ...] = field(converter=tuple)


@frozen
class TwoQubitOp:
    """
    Attributes:
        qubits: Local (a, b); a is the high bit of the gate's basis
        coupler: Sorted linear ids of the coupler
        gate: The gate
    """

    qubits:     tuple[int, int]
    coupler:    Coupler
    gate:       Gate2Q


@frozen
class TwoQubitLayer:
    cycle:  int
    label:  str
    gates:  tuple[TwoQubitOp, ...]  = field(converter=tuple)
    idle:   tuple[int, ...]         = field(converter=tuple)


Layer = Union[OneQubitLayer, TwoQubitLayer]


def two_qubit_layer(n: int, cycle: int, label: str, gates: tuple[TwoQubitOp, ...]) -> TwoQubitLayer:
    """Layer whose idle markers are every local qubit no gate touches."""
    busy = {q for op in gates for q in op.qubits}
    return TwoQubitLayer(cycle, label, tuple(gates), tuple(q for q in range(n) if q not in busy))


@frozen
class PatchSpec:
    """
    Partition of a subset into k regions of linear qubit ids.

    Regions are kept sorted internally and in the given region order.
    """

    regions: tuple[tuple[int, ...], ...] = field(converter=lambda rs: tuple(tuple(sorted(r)) for r in rs))

    @property
    def k(self) -> int:
        return len(self.regions)

    def region_of(self) -> dict[int, int]:
        """Linear id -> region index."""
        return {q: i for i, region in enumerate(self.regions) for q in region}

    def check_partition(self, subset: QubitSubset) -> None:
        """
        Raises:
            ValidationError: Unless the regions are non-empty, disjoint and cover the subset.
        """
        active = set(subset.active)
        seen: set[int] = set()
        for i, region in enumerate(self.regions):
            if not region:
                raise ValidationError(f"patch region {i} is empty")
            for q in region:
                if q not in active:
                    raise ValidationError(f"patch region {i} contains qubit {q}, which is not in subset {subset.name!r}")
                if q in seen:
                    raise ValidationError(f"qubit {q} belongs to more than one patch region")
                seen.add(q)
        missing = active - seen
        if missing:
            raise ValidationError(f"patch regions do not cover qubit {min(missing)}")


@frozen
class Circuit:
    """
    A layered circuit.

    A generated circuit has, per cycle, one single-qubit layer followed by one two-qubit layer,
    and a trailing single-qubit layer before measurement. A circuit without layers is the empty
    circuit. Every qubit of the subset is measured.

    Attributes:
        subset: Active qubits
        cycles: Cycle count m
        layers: Layers in execution order
        pattern_sequence: Repeating pattern labels, one per cycle
        seed: Generation seed
        no_repeat: Whether the same single-qubit gate was forbidden in consecutive cycles
        patch: Patch boundaries, when two-qubit gates between regions were removed
        profile: Name of the profile that supplied gate parameters
        topology: Name of the topology
    """

    subset:             QubitSubset
    cycles:             int
    layers:             tuple[Layer, ...]   = field(converter=tuple)
    pattern_sequence:   str                 = DEFAULT_SEQUENCE
    seed:               int                 = 0
    no_repeat:          bool                = True
    patch:              Optional[PatchSpec] = None
    profile:            str                 = ""
    topology:           str                 = ""

    def __attrs_post_init__(self):
        n = self.subset.n
        for index, layer in enumerate(self.layers):
            if isinstance(layer, OneQubitLayer):
                touched = [q for q, _ in layer.gates]
            else:
                # Idle markers count as occupying their qubit
                touched = [q for op in layer.gates for q in op.qubits] + list(layer.idle)
            if any(not 0 <= q < n for q in touched):
                raise ValidationError(f"layer {index}: qubit out of range for {n} qubits")
            if len(set(touched)) != len(touched):
                raise ValidationError(f"layer {index}: a qubit is used twice")
            if isinstance(layer, TwoQubitLayer):
                for op in layer.gates:
                    a, b = op.qubits
                    if tuple(sorted((self.subset.active[a], self.subset.active[b]))) != tuple(op.coupler):
                        raise ValidationError(f"layer {index}: gate on {op.qubits} does not match coupler {op.coupler}")

    @property
    def n(self) -> int:
        return self.subset.n

    @property
    def is_empty(self) -> bool:
        return not self.layers


class GateCounts(NamedTuple):
    n_1q:       int
    n_2q:       int
    n_idle:     int
    n_measured: int


def gate_counts(circuit: Circuit) -> GateCounts:
    """
    Exact gate tallies.

    n_idle is the number of idle markers over all two-qubit layers.
    """
    n_1q = n_2q = n_idle = 0
    for layer in circuit.layers:
        if isinstance(layer, OneQubitLayer):
            n_1q += len(layer.gates)
        else:
            n_2q   += len(layer.gates)
            n_idle += len(layer.idle)
    return GateCounts(n_1q, n_2q, n_idle, circuit.n)
