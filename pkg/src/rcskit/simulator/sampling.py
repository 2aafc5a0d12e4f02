"""
Sampling

Ideal, mixture and trajectory sampling of circuits, and factorized simulation of patched circuits.

Every shot s owns two random sources: row s of one bulk uniform stream (a branch uniform followed by
one outcome uniform per patch) and, for trajectories, its own fault stream keyed by s. Outcomes are
drawn by inverse CDF from the outcome uniform, so a shot that sees no noise returns exactly the
ideal sample of the same seed. Results never depend on the thread count.

Classes:
    SampleSet: Measured bitstrings with attached ideal probabilities

Functions:
    simulate_patched: One statevector per patch region
    restrict: Bits of a global bitstring at a region's positions
    sample: Draw N shots under an optional noise spec
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import math
from concurrent.futures import ThreadPoolExecutor
from typing             import Any, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import numpy as np
from attrs              import frozen, field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..circuits.circuit         import Circuit, OneQubitLayer
from ..circuits.gates           import PAULI_X, PAULI_Y, PAULI_Z
from ..circuits.patch           import local_regions, patch_circuits
from ..circuits.serialize       import circuit_id
from ..common.errors            import ValidationError
from ..common.rng               import Stream, check_seed, stream
from ..configurator.settings    import get_settings
from ..logger                   import debug, info
from .noise                     import Mixture, NoiseSpec, Trajectory, noise_text
from .statevector               import (StateVector, apply_1q, apply_layer, check_capacity, initial_state,
                                        simulate)

__all__ = [
    "bit_dtype",
    "SampleSet",
    "simulate_patched",
    "restrict",
    "sample",
]

_PAULIS = (None, PAULI_X, PAULI_Y, PAULI_Z)


def bit_dtype(n: int):
    """uint64 up to 64 qubits, Python ints beyond."""
    return np.uint64 if n <= 64 else object


@frozen(eq=False)
class SampleSet:
    """
    Attributes:
        n: Qubit count
        bitstrings: One value per shot (uint64, or Python ints above 64 qubits)
        probabilities: Ideal probability of each measured bitstring, or None
        metadata: circuit_id, seed, noise, shots, patches
    """

    n:              int
    bitstrings:     np.ndarray
    probabilities:  Optional[np.ndarray]    = None
    metadata:       dict[str, Any]          = field(factory=dict)

    def __attrs_post_init__(self):
        if self.probabilities is not None and len(self.probabilities) != len(self.bitstrings):
            raise ValidationError("one probability per bitstring is required")

    @property
    def shots(self) -> int:
        return len(self.bitstrings)

    @property
    def dimension(self) -> int:
        return 1 << self.n


# -----------------------------------------------------------------------------
# Patched circuits
# -----------------------------------------------------------------------------
def simulate_patched(circuit: Circuit, max_qubits: Optional[int] = None) -> list[StateVector]:
    """
    One statevector per patch; the global amplitude of x is the product of the patch amplitudes
    of x restricted to each region.

    Raises:
        ValidationError: If the circuit carries no patch boundaries.
        CapacityError: If a single patch exceeds the capacity.
    """
    pieces = patch_circuits(circuit)
    return [simulate(piece, max_qubits=max_qubits) for piece in pieces]


def restrict(bitstring: int, n: int, region: tuple[int, ...]) -> int:
    """Bits of `bitstring` at local positions `region`, first position most significant."""
    value = 0
    for position in region:
        value = (value << 1) | ((bitstring >> (n - 1 - position)) & 1)
    return value


def _assemble(n: int, regions: tuple[tuple[int, ...], ...], outcomes: list[np.ndarray]) -> np.ndarray:
    """Global bitstrings from per-patch outcomes."""
    dtype  = bit_dtype(n)
    result = np.zeros(len(outcomes[0]), dtype=dtype)
    for region, values in zip(regions, outcomes):
        width = len(region)
        for j, position in enumerate(region):
            bit = (values >> (width - 1 - j)) & 1
            if dtype is object:
                result |= bit.astype(object) << (n - 1 - position)
            else:
                result |= bit.astype(np.uint64) << np.uint64(n - 1 - position)
    return result


# -----------------------------------------------------------------------------
# Drawing
# -----------------------------------------------------------------------------
def _inverse_cdf(cdf: np.ndarray, u: np.ndarray) -> np.ndarray:
    index = np.searchsorted(cdf, u * cdf[-1], side="right")
    return np.minimum(index, len(cdf) - 1).astype(np.int64)


def _branch(u_mix: np.ndarray, u_out: np.ndarray, cdf: np.ndarray, noise: Optional[NoiseSpec]) -> np.ndarray:
    ideal = _inverse_cdf(cdf, u_out)
    if not isinstance(noise, Mixture):
        return ideal
    uniform = np.minimum((u_out * len(cdf)).astype(np.int64), len(cdf) - 1)
    return np.where(u_mix < noise.f, ideal, uniform)


class _TrajectoryRunner:
    """Resimulates faulty shots from cached ideal prefix states."""

    def __init__(self, circuit: Circuit, noise: Trajectory, seed: int, budget_mb: float):
        self.circuit = circuit
        self.noise   = noise
        self.seed    = seed
        self.n       = circuit.n

        slots: list[tuple[int, tuple[int, ...], float]] = []
        for index, layer in enumerate(circuit.layers):
            if isinstance(layer, OneQubitLayer):
                slots.extend((index, (q,), noise.e1) for q, _ in layer.gates)
            else:
                slots.extend((index, op.qubits, noise.e2) for op in layer.gates)
                slots.extend((index, (q,), noise.e_idle) for q in layer.idle)
        self.slots    = slots
        self.rates    = np.array([rate for _, _, rate in slots], dtype=np.float64)
        self.n_layers = len(circuit.layers)

        # Checkpoint j holds the state after the first j * stride layers
        state_bytes  = 16 * (1 << self.n)
        capacity     = max(1, int(budget_mb * (1 << 20)) // state_bytes)
        self.stride  = self.n_layers + 1 if capacity == 1 else max(1, math.ceil(self.n_layers / (capacity - 1)))
        psi          = initial_state(self.n)
        self.checkpoints = [psi.copy()]
        for index, layer in enumerate(circuit.layers):
            psi = apply_layer(psi, self.n, layer)
            if (index + 1) % self.stride == 0:
                self.checkpoints.append(psi.copy())
        self.final_probabilities = np.abs(psi) ** 2
        self.final_cdf           = np.cumsum(self.final_probabilities)
        debug(f"trajectory: {len(slots)} fault slots, {len(self.checkpoints)} checkpoints every {self.stride} layers")

    def _fault(self, psi: np.ndarray, qubits: tuple[int, ...], pauli: int) -> np.ndarray:
        if len(qubits) == 1:
            return apply_1q(psi, self.n, qubits[0], _PAULIS[pauli])
        high, low = divmod(pauli, 4)
        for q, p in ((qubits[0], high), (qubits[1], low)):
            if p:
                psi = apply_1q(psi, self.n, q, _PAULIS[p])
        return psi

    def shot(self, index: int, u_out: float) -> int:
        rng     = stream(self.seed, Stream.FAULTS, index)
        hits    = np.flatnonzero(rng.random(len(self.rates)) < self.rates)
        paulis  = [int(rng.integers(1, 4 if len(self.slots[h][1]) == 1 else 16)) for h in hits]
        flips   = rng.random(self.n) < self.noise.e_ro

        if len(hits) == 0:
            outcome = int(_inverse_cdf(self.final_cdf, np.array([u_out]))[0])
        else:
            faults: dict[int, list[tuple[tuple[int, ...], int]]] = {}
            for h, p in zip(hits, paulis):
                layer, qubits, _ = self.slots[h]
                faults.setdefault(layer, []).append((qubits, p))
            first = min(faults)
            j     = min(first // self.stride, len(self.checkpoints) - 1)
            psi   = self.checkpoints[j]
            for index_l in range(j * self.stride, self.n_layers):
                psi = apply_layer(psi, self.n, self.circuit.layers[index_l])
                for qubits, p in faults.get(index_l, ()):
                    psi = self._fault(psi, qubits, p)
            cdf     = np.cumsum(np.abs(psi) ** 2)
            outcome = int(_inverse_cdf(cdf, np.array([u_out]))[0])

        for q in np.flatnonzero(flips):
            outcome ^= 1 << (self.n - 1 - int(q))
        return outcome


def _chunks(count: int, parts: int) -> list[range]:
    size = math.ceil(count / parts) if count else 0
    return [range(start, min(start + size, count)) for start in range(0, count, size)] if size else []


def sample(circuit:              Circuit,
           shots:                int,
           seed:                 int,
           noise:                Optional[NoiseSpec] = None,
           threads:              Optional[int] = None,
           max_qubits:           Optional[int] = None,
           checkpoint_budget_mb: Optional[float] = None) -> SampleSet:
    """
    Draw measured bitstrings.

    Ideal and mixture sampling of a patched circuit draws each patch from its own statevector, so
    only each patch has to fit the capacity. Trajectory sampling simulates the circuit whole.

    Args:
        circuit: Circuit to sample
        shots: N >= 1
        seed: Seed in [0, 2**64)
        noise: None (ideal), Mixture or Trajectory
        threads: Worker threads for trajectories (settings value when None)
        max_qubits: Capacity override
        checkpoint_budget_mb: Trajectory checkpoint memory override

    Returns:
        SampleSet with the ideal probability of each measured bitstring attached.
    """
    if shots < 1:
        raise ValidationError(f"shots must be at least 1, got {shots}")
    seed     = check_seed(seed)
    settings = get_settings().simulator
    threads  = settings.threads if threads is None else max(1, threads)
    patched  = circuit.patch is not None and not isinstance(noise, Trajectory)
    n_parts  = circuit.patch.k if patched else 1

    uniforms = stream(seed, Stream.SHOTS).random((shots, 1 + n_parts))
    u_mix    = uniforms[:, 0]

    if patched:
        regions  = local_regions(circuit)
        states   = simulate_patched(circuit, max_qubits)
        outcomes, probs = [], np.ones(shots)
        for k, state in enumerate(states):
            p      = state.probabilities()
            values = _branch(u_mix, uniforms[:, 1 + k], np.cumsum(p), noise)
            outcomes.append(values)
            probs *= p[values]
        bitstrings = _assemble(circuit.n, regions, outcomes)
    elif isinstance(noise, Trajectory):
        check_capacity(circuit.n, max_qubits)
        budget = settings.checkpoint_budget_mb if checkpoint_budget_mb is None else checkpoint_budget_mb
        runner = _TrajectoryRunner(circuit, noise, seed, budget)
        values = np.empty(shots, dtype=np.int64)

        def run(block: range) -> None:
            for s in block:
                values[s] = runner.shot(s, uniforms[s, 1])

        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run, _chunks(shots, threads)))
        bitstrings = values.astype(np.uint64)
        probs      = runner.final_probabilities[values]
    else:
        p          = simulate(circuit, max_qubits=max_qubits).probabilities()
        values     = _branch(u_mix, uniforms[:, 1], np.cumsum(p), noise)
        bitstrings = values.astype(np.uint64)
        probs      = p[values]

    metadata = {
        "circuit_id": circuit_id(circuit),
        "seed":       seed,
        "noise":      noise_text(noise),
        "shots":      shots,
        "patches":    n_parts,
    }
    info(f"drew {shots} samples of {circuit.n} qubits ({metadata['noise']}, {n_parts} patch(es))")
    return SampleSet(circuit.n, bitstrings, np.asarray(probs, dtype=np.float64), metadata)
