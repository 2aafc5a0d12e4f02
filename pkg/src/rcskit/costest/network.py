"""
Tensor Networks

Tensor-network form of a circuit: one tensor per gate, a basis vector per input wire and, when an
output bitstring is fixed, a projector per output wire. Every index has bond dimension 2.

Index conventions:
    input vector    (i,)
    1q gate         (out, in)
    2q gate         (out_a, out_b, in_a, in_b) with a the high bit of the gate's basis
    projector       (i,)

Idle slots carry no tensor. Each index sits on exactly two tensors, or on one when it is an open
output.

Classes:
    NetworkTensor: Data and index labels
    TensorNetwork: Tensors, open outputs and boundary bits

Functions:
    build_network: Network of a circuit
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from collections    import Counter
from functools      import cached_property
from typing         import Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import numpy as np
from attrs          import frozen, field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..circuits.circuit         import Circuit, OneQubitLayer
from ..common.errors            import ValidationError
from ..logger                   import debug
from ..simulator.statevector    import check_bitstring

__all__ = [
    "NetworkTensor",
    "TensorNetwork",
    "build_network",
]

_BASIS = (np.array([1, 0], dtype=np.complex128), np.array([0, 1], dtype=np.complex128))


@frozen(eq=False)
class NetworkTensor:
    indices:    tuple[int, ...] = field(converter=tuple)
    data:       np.ndarray
    label:      str = ""

    def __attrs_post_init__(self):
        if self.data.shape != (2,) * len(self.indices):
            raise ValidationError(f"tensor {self.label!r}: shape {self.data.shape} does not match {len(self.indices)} indices")
        if len(set(self.indices)) != len(self.indices):
            raise ValidationError(f"tensor {self.label!r}: repeated index")

    @property
    def entries(self) -> int:
        return 1 << len(self.indices)


@frozen(eq=False)
class TensorNetwork:
    """
    Attributes:
        n: Qubit count of the source circuit
        tensors: Tensors in construction order
        open_indices: Output indices left open, in qubit order (empty when an output is fixed)
        output: Fixed output bitstring, or None
        initial: Input basis state
    """

    n:              int
    tensors:        tuple[NetworkTensor, ...]   = field(converter=tuple)
    open_indices:   tuple[int, ...]             = field(default=(), converter=tuple)
    output:         Optional[int]               = None
    initial:        int                         = 0

    def __attrs_post_init__(self):
        open_set = set(self.open_indices)
        for index, count in self.degree.items():
            if count > 2:
                raise ValidationError(f"index {index} sits on {count} tensors")
            if count == 1 and index not in open_set:
                raise ValidationError(f"index {index} dangles but is not an open output")
            if count == 2 and index in open_set:
                raise ValidationError(f"open output {index} is shared by two tensors")
        if not open_set <= self.degree.keys():
            raise ValidationError("an open output is on no tensor")

    @cached_property
    def degree(self) -> Counter:
        return Counter(index for tensor in self.tensors for index in tensor.indices)

    @property
    def n_indices(self) -> int:
        return len(self.degree)

    @property
    def max_tensor_entries(self) -> int:
        return max(tensor.entries for tensor in self.tensors)

    def masks(self) -> list[int]:
        """Index set of each tensor as a bitmask."""
        return [sum(1 << index for index in tensor.indices) for tensor in self.tensors]

    def closed_mask(self) -> int:
        """Bitmask of the indices shared by two tensors."""
        return sum(1 << index for index, count in self.degree.items() if count == 2)


def build_network(circuit: Circuit, output: Optional[int] = 0, initial: int = 0) -> TensorNetwork:
    """
    Build the network of <output| U |initial>.

    Args:
        circuit: Any circuit, patched or not
        output: Output bitstring to project on, or None to leave outputs open
        initial: Input basis state

    Returns:
        The network; with outputs fixed it contracts to the amplitude.
    """
    n = circuit.n
    check_bitstring(initial, n)
    if output is not None:
        check_bitstring(output, n)

    tensors: list[NetworkTensor] = []
    wire    = list(range(n))
    fresh   = n

    for q in range(n):
        tensors.append(NetworkTensor((wire[q],), _BASIS[(initial >> (n - 1 - q)) & 1], f"in{q}"))

    for layer in circuit.layers:
        if isinstance(layer, OneQubitLayer):
            for q, gate in layer.gates:
                tensors.append(NetworkTensor((fresh, wire[q]), gate.matrix, f"{gate.kind.value}@{layer.cycle}:{q}"))
                wire[q], fresh = fresh, fresh + 1
        else:
            for op in layer.gates:
                a, b = op.qubits
                indices = (fresh, fresh + 1, wire[a], wire[b])
                tensors.append(NetworkTensor(indices, op.gate.tensor, f"{layer.label}@{layer.cycle}:{a},{b}"))
                wire[a], wire[b], fresh = fresh, fresh + 1, fresh + 2

    if output is None:
        open_indices = tuple(wire)
    else:
        open_indices = ()
        for q in range(n):
            tensors.append(NetworkTensor((wire[q],), _BASIS[(output >> (n - 1 - q)) & 1], f"out{q}"))

    network = TensorNetwork(n, tuple(tensors), open_indices, output, initial)
    debug(f"network: {len(tensors)} tensors, {network.n_indices} indices, {len(open_indices)} open")
    return network
