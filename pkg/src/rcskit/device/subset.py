"""
Qubit Subsets

Active-qubit selections, their validation, and the pattern matchings restricted to them.

Classes:
    QubitSubset: Ordered active qubits plus optional bundled patch layouts

Functions:
    validate_subset: Reject unknown, duplicate or disconnected qubits
    pattern_layer: Couplers of one pattern with both endpoints active
    full_subset: Every qubit of a topology
    rect_subset: Rectangular block of the lattice
    block_subset: Breadth-first block of n qubits
    load_subset: Subset from a document
    subset_document: Document form of a subset
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from collections    import deque
from typing         import Any, Literal, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs          import frozen, field
from pydantic       import BaseModel, ConfigDict

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents import SCHEMA_VERSION, validate_model
from ..common.errors    import ValidationError
from .topology          import DeviceTopology, Coupler, LABELS, connected_component

__all__ = [
    "QubitSubset",
    "validate_subset",
    "pattern_layer",
    "full_subset",
    "rect_subset",
    "block_subset",
    "load_subset",
    "subset_document",
]


def _freeze_patches(value: Optional[dict]) -> tuple[tuple[int, tuple[tuple[int, ...], ...]], ...]:
    if not value:
        return ()
    if isinstance(value, tuple):
        return value
    return tuple(sorted((int(k), tuple(tuple(region) for region in regions)) for k, regions in value.items()))


@frozen
class QubitSubset:
    """
    Active qubits of an experiment.

    Local index i of a circuit on this subset is `active[i]`; local qubit 0 is the most significant
    bit of every bitstring.

    Attributes:
        active: Linear ids, in local order
        name: Subset name
        approximate: Membership reconstructed from a drawing rather than a published list
        patches: Bundled layouts as ((k, regions), ...), regions as tuples of linear ids
    """

    active:         tuple[int, ...] = field(converter=tuple)
    name:           str             = ""
    approximate:    bool            = False
    patches:        tuple[tuple[int, tuple[tuple[int, ...], ...]], ...] = field(default=(), converter=_freeze_patches)

    @property
    def n(self) -> int:
        return len(self.active)

    def local_index(self) -> dict[int, int]:
        """Linear id -> local position."""
        return {q: i for i, q in enumerate(self.active)}

    def bundled_patches(self, k: int) -> Optional[tuple[tuple[int, ...], ...]]:
        """The bundled k-patch layout, if the subset ships one."""
        return dict(self.patches).get(k)


def validate_subset(topology: DeviceTopology, subset: QubitSubset) -> None:
    """
    Check that a subset is a non-empty, duplicate-free, connected set of lattice qubits.

    Raises:
        ValidationError: Naming the offending qubit.
    """
    if subset.n == 0:
        raise ValidationError(f"subset {subset.name!r} is empty")
    seen: set[int] = set()
    for q in subset.active:
        topology.qubit(q)
        if q in seen:
            raise ValidationError(f"qubit {topology.qubit(q)} appears twice in subset {subset.name!r}")
        seen.add(q)

    reached = connected_component(subset.active[0], seen, topology.adjacency)
    if len(reached) != len(seen):
        stranded = min(seen - reached)
        raise ValidationError(
            f"subset {subset.name!r} is disconnected: qubit {topology.qubit(stranded)} "
            f"is not reachable from {topology.qubit(subset.active[0])}"
        )

    for k, regions in subset.patches:
        members = sorted(q for region in regions for q in region)
        if len(regions) != k or members != sorted(seen):
            raise ValidationError(f"bundled {k}-patch layout of {subset.name!r} does not partition the subset")


def pattern_layer(topology: DeviceTopology, subset: QubitSubset, label: str) -> tuple[Coupler, ...]:
    """
    Couplers of one pattern class with both endpoints in the subset.

    Returns:
        Sorted couplers; a matching by construction of the topology.
    """
    if label not in LABELS:
        raise ValidationError(f"unknown pattern label {label!r}")
    active = set(subset.active)
    return tuple(c for c in topology.couplers_with(label) if c[0] in active and c[1] in active)


def full_subset(topology: DeviceTopology, name: str = "full") -> QubitSubset:
    """All qubits, in linear order."""
    return QubitSubset(tuple(range(topology.n_qubits)), name)


def rect_subset(topology: DeviceTopology, row0: int, n_rows: int, col0: int, n_cols: int,
                name: Optional[str] = None) -> QubitSubset:
    """
    Rectangular block of rows [row0, row0+n_rows) and columns [col0, col0+n_cols).

    Rectangles are connected because every column carries vertical couplers.
    """
    if n_rows < 1 or n_cols < 1:
        raise ValidationError("rectangle needs at least one row and one column")
    active = tuple(
        topology.qubit_at(r, c).linear
        for r in range(row0, row0 + n_rows)
        for c in range(col0, col0 + n_cols)
    )
    return QubitSubset(active, name or f"rect{n_rows}x{n_cols}@{row0},{col0}")


def block_subset(topology: DeviceTopology, n: int, start: int = 0, name: Optional[str] = None) -> QubitSubset:
    """
    Connected block of n qubits grown breadth-first from `start`.

    Ties are broken by linear id, so the block is deterministic. Returned in linear order.
    """
    if not 1 <= n <= topology.n_qubits:
        raise ValidationError(f"cannot take {n} qubits from a {topology.n_qubits}-qubit lattice")
    topology.qubit(start)
    taken   = {start}
    order   = deque([start])
    while order and len(taken) < n:
        q = order.popleft()
        for nb in topology.adjacency[q]:
            if nb not in taken and len(taken) < n:
                taken.add(nb)
                order.append(nb)
    if len(taken) < n:
        raise ValidationError(f"component of qubit {start} has fewer than {n} qubits")
    return QubitSubset(tuple(sorted(taken)), name or f"block{n}@{start}")


# -----------------------------------------------------------------------------
# Documents
# -----------------------------------------------------------------------------
class _SubsetModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1]
    kind:           Literal["subset"]
    name:           str
    description:    str = ""
    topology:       str = ""
    approximate:    bool = False
    active:         list[int]
    patches:        dict[int, list[list[int]]] = {}


def load_subset(document: dict[str, Any], source: Optional[str] = None) -> QubitSubset:
    """
    Subset from a parsed document (validation against a topology is separate).

    Raises:
        ParseError: On a malformed document.
    """
    model = validate_model(_SubsetModel, document, source)
    return QubitSubset(tuple(model.active), model.name, model.approximate, model.patches)


def subset_document(subset: QubitSubset, topology_name: str = "") -> dict[str, Any]:
    """Document form of a subset."""
    document: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind":           "subset",
        "name":           subset.name,
        "topology":       topology_name,
        "approximate":    subset.approximate,
        "active":         list(subset.active),
    }
    if subset.patches:
        document["patches"] = {str(k): [list(r) for r in regions] for k, regions in subset.patches}
    return document
