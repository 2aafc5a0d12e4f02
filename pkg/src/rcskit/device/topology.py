"""
Device Topology

The diagonal-coupled rectangular lattice and its four two-qubit gate patterns.

Qubit (r, c) has linear id r*cols + c. It couples to (r+1, c) and to (r+1, c-1) when r is even or
(r+1, c+1) when r is odd, clipped at the lattice edge. Every pair of adjacent rows therefore
contributes 2*cols - 1 couplers.

Patterns: each coupler is either the "left" or the "right" one of its upper qubit, and the upper
row is even or odd. The four combinations are the classes A..D, each of which is a matching.

    | upper row | right coupler | left coupler |
    |-----------|---------------|--------------|
    | even      | A             | C            |
    | odd       | B             | D            |

Classes:
    QubitId: Row/column/linear coordinates of one qubit
    DeviceTopology: Lattice shape, couplers and their pattern labels

Functions:
    build_topology: Build the lattice topology
    load_topology: Topology from a document (generated or explicit couplers)
    topology_document: Document form of a topology
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from collections    import defaultdict
from functools      import cached_property
from typing         import Any, Iterable, Literal, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs          import frozen, field
from pydantic       import BaseModel, ConfigDict, Field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents import SCHEMA_VERSION, validate_model
from ..common.errors    import ValidationError
from ..logger           import debug

__all__ = [
    "LABELS",
    "Coupler",
    "QubitId",
    "DeviceTopology",
    "build_topology",
    "load_topology",
    "topology_document",
    "connected_component",
]

LABELS: tuple[str, ...] = ("A", "B", "C", "D")

Coupler = tuple[int, int]
"""Coupler as a sorted pair of linear qubit ids."""


@frozen
class QubitId:
    """
    One lattice site.

    Attributes:
        row:    Row index in [0, rows)
        col:    Column index in [0, cols)
        linear: row * cols + col
    """

    row:    int
    col:    int
    linear: int

    def __str__(self) -> str:
        return f"Q{self.linear:03d}(r{self.row},c{self.col})"


def _lattice_couplers(rows: int, cols: int) -> list[tuple[Coupler, str]]:
    couplers: list[tuple[Coupler, str]] = []
    for r in range(rows - 1):
        even = r % 2 == 0
        for c in range(cols):
            here = r * cols + c
            # Vertical partner first, then the diagonal one
            if even:
                partners = ((c, "A"), (c - 1, "C"))
            else:
                partners = ((c, "D"), (c + 1, "B"))
            for col, label in partners:
                if 0 <= col < cols:
                    couplers.append(((here, (r + 1) * cols + col), label))
    return couplers


@frozen
class DeviceTopology:
    """
    Processor lattice.

    Attributes:
        rows: Lattice rows
        cols: Lattice columns
        couplers: Sorted linear-id pairs, in ascending order
        labels: Pattern label of each coupler, aligned with `couplers`
        name: Optional document name
    """

    rows:       int
    cols:       int
    couplers:   tuple[Coupler, ...]
    labels:     tuple[str, ...]
    name:       str = field(default="", eq=False)

    def __attrs_post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValidationError(f"lattice must have at least one row and column, got {self.rows}x{self.cols}")
        if len(self.couplers) != len(self.labels):
            raise ValidationError("every coupler needs exactly one pattern label")

        seen: set[Coupler] = set()
        used: dict[str, set[int]] = defaultdict(set)
        for (a, b), label in zip(self.couplers, self.labels):
            if not (0 <= a < b < self.n_qubits):
                raise ValidationError(f"coupler ({a}, {b}) is not a sorted pair of qubits on the lattice")
            if (a, b) in seen:
                raise ValidationError(f"coupler ({a}, {b}) listed twice")
            if label not in LABELS:
                raise ValidationError(f"coupler ({a}, {b}) has unknown pattern label {label!r}")
            if a in used[label] or b in used[label]:
                raise ValidationError(f"pattern {label} is not a matching: coupler ({a}, {b}) reuses a qubit")
            seen.add((a, b))
            used[label].update((a, b))

    @property
    def n_qubits(self) -> int:
        return self.rows * self.cols

    def qubit(self, linear: int) -> QubitId:
        """Coordinates of a linear id."""
        if not 0 <= linear < self.n_qubits:
            raise ValidationError(f"qubit {linear} is outside the {self.rows}x{self.cols} lattice")
        return QubitId(linear // self.cols, linear % self.cols, linear)

    def qubit_at(self, row: int, col: int) -> QubitId:
        """Coordinates of (row, col)."""
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise ValidationError(f"({row}, {col}) is outside the {self.rows}x{self.cols} lattice")
        return QubitId(row, col, row * self.cols + col)

    @cached_property
    def label_of(self) -> dict[Coupler, str]:
        """Coupler -> pattern label."""
        return dict(zip(self.couplers, self.labels))

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        """Linear id -> sorted neighbor ids."""
        neighbors: dict[int, list[int]] = defaultdict(list)
        for a, b in self.couplers:
            neighbors[a].append(b)
            neighbors[b].append(a)
        return {q: tuple(sorted(neighbors.get(q, ()))) for q in range(self.n_qubits)}

    def couplers_with(self, label: str) -> tuple[Coupler, ...]:
        """All couplers of one pattern class."""
        if label not in LABELS:
            raise ValidationError(f"unknown pattern label {label!r}")
        return tuple(c for c, l in zip(self.couplers, self.labels) if l == label)


def build_topology(rows: int, cols: int, name: str = "") -> DeviceTopology:
    """
    Build the diagonal-coupled lattice.

    Args:
        rows: Number of rows (>= 1)
        cols: Number of columns (>= 1)
        name: Optional name carried into documents

    Returns:
        Topology with (rows - 1) * (2 * cols - 1) couplers
    """
    if rows < 1 or cols < 1:
        raise ValidationError(f"lattice must have at least one row and column, got {rows}x{cols}")
    pairs = sorted(_lattice_couplers(rows, cols))
    topology = DeviceTopology(rows, cols, tuple(p for p, _ in pairs), tuple(l for _, l in pairs), name)
    debug(f"built {rows}x{cols} topology with {len(pairs)} couplers")
    return topology


# -----------------------------------------------------------------------------
# Documents
# -----------------------------------------------------------------------------
class _TopologyModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1]
    kind:           Literal["topology"]
    name:           str = ""
    description:    str = ""
    rows:           int = Field(ge=1)
    cols:           int = Field(ge=1)
    # Omitted: generated by the lattice rule. Present: [low, high, label] replaces it entirely.
    couplers:       Optional[list[tuple[int, int, Literal["A", "B", "C", "D"]]]] = None


def load_topology(document: dict[str, Any], source: Optional[str] = None) -> DeviceTopology:
    """
    Topology from a parsed document.

    Raises:
        ParseError: On a malformed document.
        ValidationError: If explicit couplers break the matching/partition rules.
    """
    model = validate_model(_TopologyModel, document, source)
    if model.couplers is None:
        return build_topology(model.rows, model.cols, model.name)

    entries = sorted((min(a, b), max(a, b), label) for a, b, label in model.couplers)
    return DeviceTopology(
        model.rows, model.cols,
        tuple((a, b) for a, b, _ in entries),
        tuple(label for _, _, label in entries),
        model.name,
    )


def topology_document(topology: DeviceTopology, explicit: bool = True) -> dict[str, Any]:
    """
    Document form of a topology.

    Args:
        topology: Topology to serialize
        explicit: List every coupler (otherwise only the lattice shape)
    """
    document: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind":           "topology",
        "name":           topology.name,
        "rows":           topology.rows,
        "cols":           topology.cols,
    }
    if explicit:
        document["couplers"] = [[a, b, label] for (a, b), label in zip(topology.couplers, topology.labels)]
    return document


def connected_component(start: int, members: Iterable[int], adjacency: dict[int, tuple[int, ...]]) -> set[int]:
    """Members reachable from `start` through couplers whose both ends are members."""
    members = set(members)
    reached = {start}
    frontier = [start]
    while frontier:
        q = frontier.pop()
        for nb in adjacency[q]:
            if nb in members and nb not in reached:
                reached.add(nb)
                frontier.append(nb)
    return reached
