"""
Statevector Simulation

Double-precision statevector evolution with einsum kernels.

Local qubit 0 is the most significant bit: the amplitude of bitstring x sits at index x, and
qubit q is axis q of the state reshaped to (2,) * n. Gates in a layer are applied in ascending
qubit order so floating-point results are reproducible.

Classes:
    StateVector: Amplitudes of an n-qubit state

Functions:
    simulate: Final state of a circuit
    amplitude: <x|U|0...0>
    probabilities: |<x|U|0...0>|^2 for every x
    apply_layer: Apply one layer in place of a state array
    check_capacity: Raise CapacityError above the configured qubit limit
    check_bitstring: Raise ValidationError for out-of-range bitstrings
    save_state: Write amplitudes to .npy
    load_state: Read amplitudes from .npy
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from pathlib    import Path
from typing     import Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import numpy as np
from attrs      import frozen, field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..circuits.circuit         import Circuit, Layer, OneQubitLayer
from ..common.errors            import CapacityError, ParseError, ValidationError
from ..configurator.settings    import get_settings
from ..logger                   import debug

__all__ = [
    "StateVector",
    "check_capacity",
    "check_bitstring",
    "initial_state",
    "apply_1q",
    "apply_2q",
    "apply_layer",
    "evolve",
    "simulate",
    "amplitude",
    "probabilities",
    "save_state",
    "load_state",
]


def _readonly(array: np.ndarray) -> np.ndarray:
    array = np.asarray(array, dtype=np.complex128)
    array.setflags(write=False)
    return array


@frozen(eq=False)
class StateVector:
    """
    Attributes:
        n: Qubit count
        amplitudes: 2**n complex128 values, read-only
    """

    n:          int
    amplitudes: np.ndarray = field(converter=_readonly)

    def __attrs_post_init__(self):
        if self.amplitudes.shape != (1 << self.n,):
            raise ValidationError(f"expected {1 << self.n} amplitudes for {self.n} qubits, got {self.amplitudes.shape}")

    @property
    def dimension(self) -> int:
        return 1 << self.n

    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def check_capacity(n: int, max_qubits: Optional[int] = None) -> None:
    limit = get_settings().simulator.max_qubits if max_qubits is None else max_qubits
    if n > limit:
        raise CapacityError(f"{n} qubits exceeds the statevector capacity of {limit} qubits")


def check_bitstring(bitstring: int, n: int) -> int:
    if not 0 <= int(bitstring) < (1 << n):
        raise ValidationError(f"bitstring {bitstring} is out of range for {n} qubits")
    return int(bitstring)


def initial_state(n: int, bitstring: int = 0) -> np.ndarray:
    """Writable basis state |bitstring>."""
    psi = np.zeros(1 << n, dtype=np.complex128)
    psi[check_bitstring(bitstring, n)] = 1.0
    return psi


def apply_1q(psi: np.ndarray, n: int, q: int, matrix: np.ndarray) -> np.ndarray:
    view = psi.reshape(1 << q, 2, 1 << (n - q - 1))
    return np.einsum("ij,ajb->aib", matrix, view).reshape(-1)


def apply_2q(psi: np.ndarray, n: int, qa: int, qb: int, matrix: np.ndarray) -> np.ndarray:
    """Apply a 4x4 matrix whose high basis bit is qubit qa."""
    tensor = matrix.reshape(2, 2, 2, 2)
    if qa > qb:
        qa, qb = qb, qa
        tensor = tensor.transpose(1, 0, 3, 2)
    view = psi.reshape(1 << qa, 2, 1 << (qb - qa - 1), 2, 1 << (n - qb - 1))
    return np.einsum("ijkl,akblc->aibjc", tensor, view).reshape(-1)


def apply_layer(psi: np.ndarray, n: int, layer: Layer) -> np.ndarray:
    if isinstance(layer, OneQubitLayer):
        for q, gate in layer.gates:
            psi = apply_1q(psi, n, q, gate.matrix)
    else:
        for op in sorted(layer.gates, key=lambda op: min(op.qubits)):
            psi = apply_2q(psi, n, op.qubits[0], op.qubits[1], op.gate.matrix)
    return psi


def evolve(psi: np.ndarray, circuit: Circuit, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """Apply layers [start, stop) to a state array."""
    stop = len(circuit.layers) if stop is None else stop
    for layer in circuit.layers[start:stop]:
        psi = apply_layer(psi, circuit.n, layer)
    return psi


def simulate(circuit: Circuit, initial: int = 0, max_qubits: Optional[int] = None) -> StateVector:
    """
    Final state U|initial>.

    Args:
        circuit: Circuit (patch boundaries are ignored; removed gates are simply absent)
        initial: Basis state to start from, 0 for |0...0>
        max_qubits: Capacity override; settings value when None

    Raises:
        CapacityError: If the circuit has more qubits than the capacity.
    """
    check_capacity(circuit.n, max_qubits)
    psi = evolve(initial_state(circuit.n, initial), circuit)
    debug(f"simulated {circuit.n} qubits through {len(circuit.layers)} layers")
    return StateVector(circuit.n, psi)


def amplitude(circuit: Circuit, bitstring: int, max_qubits: Optional[int] = None) -> complex:
    """<bitstring|U|0...0>."""
    check_bitstring(bitstring, circuit.n)
    return complex(simulate(circuit, max_qubits=max_qubits).amplitudes[bitstring])


def probabilities(circuit: Circuit, max_qubits: Optional[int] = None) -> np.ndarray:
    """Ideal output distribution, indexed by bitstring."""
    return simulate(circuit, max_qubits=max_qubits).probabilities()


def save_state(path: str | Path, state: StateVector) -> Path:
    """Write amplitudes as a .npy array."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.save(path, np.asarray(state.amplitudes), allow_pickle=False)
    return path


def load_state(path: str | Path) -> StateVector:
    """
    Raises:
        ParseError: Unless the file holds a 1-D complex array of power-of-two length.
    """
    try:
        amplitudes = np.load(path, allow_pickle=False)
    except (OSError, ValueError) as e:
        raise ParseError(f"{path}: not a statevector file: {e}")
    size = amplitudes.shape[0] if amplitudes.ndim == 1 else 0
    if size < 1 or size & (size - 1) or not np.iscomplexobj(amplitudes):
        raise ParseError(f"{path}: expected a 1-D complex array of power-of-two length")
    return StateVector(size.bit_length() - 1, amplitudes)
