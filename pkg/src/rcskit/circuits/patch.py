"""
Patch Circuits

Cutting a circuit into independent regions by deleting every two-qubit gate that crosses a
region boundary.

Functions:
    validate_patch: Partition and per-region connectivity checks
    grid_patches: Balanced row/column split of a subset into 1, 2 or 4 regions
    patch_spec: Bundled layout of a subset if it ships one, else the grid split
    apply_patch: Remove crossing gates and record the boundaries
    local_regions: Regions as sorted local qubit indices
    patch_circuits: One independent sub-circuit per region
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from typing import Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs import evolve

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.errors    import ValidationError
from ..device.bundled   import DEFAULT_TOPOLOGY, resolve_topology
from ..device.subset    import QubitSubset
from ..device.topology  import DeviceTopology, connected_component
from ..logger           import debug, info
from .circuit           import Circuit, OneQubitLayer, PatchSpec, TwoQubitLayer

__all__ = [
    "validate_patch",
    "grid_patches",
    "patch_spec",
    "apply_patch",
    "local_regions",
    "patch_circuits",
]


def validate_patch(topology: DeviceTopology, subset: QubitSubset, spec: PatchSpec) -> None:
    """
    Raises:
        ValidationError: Unless the regions partition the subset and each region is connected.
    """
    spec.check_partition(subset)
    for i, region in enumerate(spec.regions):
        reached = connected_component(region[0], region, topology.adjacency)
        if len(reached) != len(region):
            stranded = min(set(region) - reached)
            raise ValidationError(f"patch region {i} is disconnected at qubit {topology.qubit(stranded)}")


def _split(qubits: list[tuple[int, int, int]], axis: int) -> tuple[list, list]:
    """Split (row, col, id) triples at the axis value that best balances the two halves."""
    values = sorted({q[axis] for q in qubits})
    if len(values) < 2:
        raise ValidationError("region spans a single row/column and cannot be split further")
    half = len(qubits) / 2
    best = min(values[1:], key=lambda v: (abs(sum(1 for q in qubits if q[axis] < v) - half), v))
    return [q for q in qubits if q[axis] < best], [q for q in qubits if q[axis] >= best]


def grid_patches(topology: DeviceTopology, subset: QubitSubset, k: int) -> PatchSpec:
    """
    Balanced grid split.

    k = 2 splits the rows in two bands of as equal qubit count as possible; k = 4 additionally
    splits each band by column.

    Raises:
        ValidationError: For other k, or when a region comes out disconnected.
    """
    if k not in (1, 2, 4):
        raise ValidationError(f"grid patches support k in {{1, 2, 4}}, got {k}")
    cells = [(topology.qubit(q).row, topology.qubit(q).col, q) for q in subset.active]
    if k == 1:
        regions = [cells]
    else:
        top, bottom = _split(cells, axis=0)
        regions = [top, bottom] if k == 2 else [*_split(top, axis=1), *_split(bottom, axis=1)]
    spec = PatchSpec(tuple(tuple(q for _, _, q in region) for region in regions))
    validate_patch(topology, subset, spec)
    return spec


def patch_spec(topology: DeviceTopology, subset: QubitSubset, k: int) -> PatchSpec:
    """The subset's bundled k-patch layout when present, else `grid_patches`."""
    bundled = subset.bundled_patches(k)
    if bundled is not None:
        spec = PatchSpec(bundled)
        validate_patch(topology, subset, spec)
        debug(f"using bundled {k}-patch layout of {subset.name!r}")
        return spec
    return grid_patches(topology, subset, k)


def apply_patch(circuit: Circuit, spec: PatchSpec, topology: Optional[DeviceTopology] = None) -> Circuit:
    """
    Delete every two-qubit gate whose endpoints lie in different regions.

    Single-qubit layers and idle markers are unchanged.

    Args:
        circuit: Full circuit
        spec: Regions to cut along
        topology: Lattice the circuit runs on; resolved from `circuit.topology` when omitted

    Raises:
        ValidationError: If the regions do not partition the circuit's qubits, a region is
            disconnected, or the circuit is already patched.
    """
    if circuit.patch is not None:
        raise ValidationError("circuit is already patched; patch the full circuit instead")
    if topology is None:
        topology = resolve_topology(circuit.topology or DEFAULT_TOPOLOGY)
    validate_patch(topology, circuit.subset, spec)
    region = spec.region_of()

    removed = 0
    layers  = []
    for layer in circuit.layers:
        if isinstance(layer, TwoQubitLayer):
            kept = tuple(op for op in layer.gates if region[op.coupler[0]] == region[op.coupler[1]])
            removed += len(layer.gates) - len(kept)
            layer = evolve(layer, gates=kept)
        layers.append(layer)

    info(f"{spec.k}-patch removed {removed} two-qubit gates")
    return evolve(circuit, layers=tuple(layers), patch=spec)


def local_regions(circuit: Circuit) -> tuple[tuple[int, ...], ...]:
    """Patch regions of a patched circuit as sorted local qubit indices."""
    if circuit.patch is None:
        raise ValidationError("circuit is not patched")
    local = circuit.subset.local_index()
    return tuple(tuple(sorted(local[q] for q in region)) for region in circuit.patch.regions)


def patch_circuits(circuit: Circuit) -> list[Circuit]:
    """
    Independent sub-circuits of a patched circuit, one per region.

    Region qubits keep their relative order, so the bits of a patch bitstring are the bits of the
    global bitstring at the region's local positions.
    """
    regions = local_regions(circuit)
    pieces  = []
    for k, region in enumerate(regions):
        remap  = {q: i for i, q in enumerate(region)}
        subset = QubitSubset(tuple(circuit.subset.active[q] for q in region), f"{circuit.subset.name}.p{k}",
                             circuit.subset.approximate)
        layers = []
        for layer in circuit.layers:
            if isinstance(layer, TwoQubitLayer):
                ops = []
                for op in layer.gates:
                    a, b = op.qubits
                    if a in remap and b in remap:
                        ops.append(evolve(op, qubits=(remap[a], remap[b])))
                    elif a in remap or b in remap:
                        raise ValidationError(f"two-qubit gate on {op.coupler} crosses patch region {k}")
                idle  = tuple(remap[q] for q in layer.idle if q in remap)
                layer = TwoQubitLayer(layer.cycle, layer.label, tuple(ops), idle)
            else:
                layer = OneQubitLayer(layer.cycle, tuple((remap[q], g) for q, g in layer.gates if q in remap))
            layers.append(layer)
        pieces.append(evolve(circuit, subset=subset, layers=tuple(layers), patch=None))
    return pieces
