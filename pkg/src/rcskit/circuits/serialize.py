"""
Circuit Documents

JSON form of a circuit: layer skeleton plus a flat gate list of records
{layer, kind | params, qubits}, with qubits as local indices and angles in radians.

Functions:
    serialize: Circuit -> document
    deserialize: Document -> circuit, with located parse errors
    circuit_id: Short content digest of a circuit
    save_circuit: Write a circuit document
    load_circuit: Read a circuit document
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from pathlib    import Path
from typing     import Any, Literal, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from pydantic   import BaseModel, ConfigDict, Field, model_validator

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents import (SCHEMA_VERSION, dumps_canonical, read_document, sha256_bytes, validate_model,
                                write_document)
from ..common.errors    import ParseError, ValidationError
from ..device.subset    import QubitSubset, load_subset, subset_document
from .circuit           import Circuit, Layer, OneQubitLayer, PatchSpec, TwoQubitLayer, TwoQubitOp
from .gates             import Gate1Q, Gate2Q

__all__ = [
    "serialize",
    "deserialize",
    "circuit_id",
    "save_circuit",
    "load_circuit",
]


class _ParamsModel(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    theta:              float
    phi:                float
    delta_plus:         float = 0.0
    delta_minus:        float = 0.0
    delta_minus_off:    float = 0.0


class _GateModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    layer:  int = Field(ge=0)
    kind:   Optional[Literal["SX", "SY", "SW"]] = None
    params: Optional[_ParamsModel] = None
    qubits: list[int] = Field(min_length=1, max_length=2)

    @model_validator(mode="after")
    def _one_form(self) -> "_GateModel":
        if (self.kind is None) == (self.params is None):
            raise ValueError("a gate needs exactly one of 'kind' (single-qubit) or 'params' (two-qubit)")
        if len(self.qubits) != (1 if self.kind is not None else 2):
            raise ValueError("single-qubit gates take one qubit, two-qubit gates take two")
        return self


class _LayerModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type:   Literal["1q", "2q"]
    cycle:  int = Field(ge=0)
    label:  Optional[str] = None
    idle:   Optional[list[int]] = None


class _PatchModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    regions: list[list[int]]


class _CircuitModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version:     Literal[1]
    kind:               Literal["circuit"]
    subset:             dict[str, Any]
    cycles:             int = Field(ge=0)
    pattern_sequence:   str = "ABCDCDAB"
    seed:               int = Field(0, ge=0, lt=2**64)
    no_repeat:          bool = True
    profile:            str = ""
    topology:           str = ""
    layers:             list[_LayerModel] = []
    gates:              list[_GateModel] = []
    patch:              Optional[_PatchModel] = None
    manifest_digest:    Optional[str] = None


def serialize(circuit: Circuit, manifest_digest: Optional[str] = None) -> dict[str, Any]:
    """
    Document form of a circuit.

    Args:
        circuit: Circuit to serialize
        manifest_digest: Digest of the run that produced it, when written by a command
    """
    layers: list[dict[str, Any]] = []
    gates:  list[dict[str, Any]] = []
    for index, layer in enumerate(circuit.layers):
        if isinstance(layer, OneQubitLayer):
            layers.append({"type": "1q", "cycle": layer.cycle})
            gates.extend({"layer": index, "kind": g.kind.value, "qubits": [q]} for q, g in layer.gates)
        else:
            layers.append({"type": "2q", "cycle": layer.cycle, "label": layer.label, "idle": list(layer.idle)})
            gates.extend(
                {
                    "layer":  index,
                    "params": {
                        "theta": op.gate.theta, "phi": op.gate.phi, "delta_plus": op.gate.delta_plus,
                        "delta_minus": op.gate.delta_minus, "delta_minus_off": op.gate.delta_minus_off,
                    },
                    "qubits": list(op.qubits),
                }
                for op in layer.gates
            )

    document: dict[str, Any] = {
        "schema_version":   SCHEMA_VERSION,
        "kind":             "circuit",
        "subset":           subset_document(circuit.subset, circuit.topology),
        "cycles":           circuit.cycles,
        "pattern_sequence": circuit.pattern_sequence,
        "seed":             circuit.seed,
        "no_repeat":        circuit.no_repeat,
        "profile":          circuit.profile,
        "topology":         circuit.topology,
        "layers":           layers,
        "gates":            gates,
        "patch":            None if circuit.patch is None else {"regions": [list(r) for r in circuit.patch.regions]},
    }
    if manifest_digest is not None:
        document["manifest_digest"] = manifest_digest
    return document


def deserialize(document: dict[str, Any], source: Optional[str] = None) -> Circuit:
    """
    Circuit from a document.

    A two-qubit layer without "idle" marks every qubit its gates do not touch as idle.

    Raises:
        ParseError: Unknown gate kind, malformed or overlapping layer, with the offending location.
    """
    model  = validate_model(_CircuitModel, document, source)
    subset = load_subset(model.subset, source)
    n      = subset.n

    per_layer: list[list[tuple[int, _GateModel]]] = [[] for _ in model.layers]
    for i, gate in enumerate(model.gates):
        if gate.layer >= len(model.layers):
            raise ParseError(f"layer {gate.layer} does not exist", location=f"gates.{i}.layer")
        if any(not 0 <= q < n for q in gate.qubits):
            raise ParseError(f"qubit out of range for {n} qubits", location=f"gates.{i}.qubits")
        per_layer[gate.layer].append((i, gate))

    layers: list[Layer] = []
    for index, (layer_model, entries) in enumerate(zip(model.layers, per_layer)):
        used: set[int] = set()
        for i, gate in entries:
            expected_1q = layer_model.type == "1q"
            if (gate.kind is not None) != expected_1q:
                raise ParseError(f"gate does not belong in a {layer_model.type} layer", location=f"gates.{i}")
            if used.intersection(gate.qubits) or len(set(gate.qubits)) != len(gate.qubits):
                raise ParseError(f"gates overlap on a qubit in layer {index}", location=f"gates.{i}.qubits")
            used.update(gate.qubits)

        if layer_model.type == "1q":
            ordered = sorted(entries, key=lambda e: e[1].qubits[0])
            layers.append(OneQubitLayer(layer_model.cycle, tuple((g.qubits[0], Gate1Q(g.kind)) for _, g in ordered)))
            continue

        if layer_model.label is None:
            raise ParseError("two-qubit layer needs a pattern label", location=f"layers.{index}.label")
        ops = tuple(
            TwoQubitOp(
                (g.qubits[0], g.qubits[1]),
                tuple(sorted((subset.active[g.qubits[0]], subset.active[g.qubits[1]]))),
                Gate2Q(**g.params.model_dump()),
            )
            for _, g in entries
        )
        idle = layer_model.idle if layer_model.idle is not None else [q for q in range(n) if q not in used]
        if any(not 0 <= q < n or q in used for q in idle):
            raise ParseError("idle marker on a busy or out-of-range qubit", location=f"layers.{index}.idle")
        layers.append(TwoQubitLayer(layer_model.cycle, layer_model.label, ops, tuple(idle)))

    try:
        patch = None if model.patch is None else PatchSpec(model.patch.regions)
        if patch is not None:
            patch.check_partition(subset)
        return Circuit(subset, model.cycles, tuple(layers), model.pattern_sequence, model.seed, model.no_repeat,
                       patch, model.profile, model.topology)
    except ValidationError as e:
        raise ParseError(str(e), location=source)


def circuit_id(circuit: Circuit) -> str:
    """First 16 hex digits of the SHA-256 of the canonical document."""
    return sha256_bytes(dumps_canonical(serialize(circuit)).encode("utf-8"))[:16]


def save_circuit(circuit: Circuit, path: str | Path, manifest_digest: Optional[str] = None) -> Path:
    return write_document(path, serialize(circuit, manifest_digest))


def load_circuit(path: str | Path) -> Circuit:
    return deserialize(read_document(path, "circuit"), str(path))
