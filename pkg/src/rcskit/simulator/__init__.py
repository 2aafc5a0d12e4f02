"""
Simulator Module

Statevector simulation, patched simulation and noisy sampling.

Classes:
    StateVector: Amplitudes of an n-qubit state
    Mixture: Global depolarizing noise
    Trajectory: Pauli-fault noise
    SampleSet: Sampled bitstrings

Functions:
    simulate: Final state of a circuit
    simulate_patched: One state per patch
    sample: Draw shots
    write_samples / read_samples: Sample files
"""

from .statevector   import (StateVector, check_capacity, check_bitstring, simulate, amplitude, probabilities,
                            save_state, load_state)
from .noise         import Mixture, Trajectory, NoiseSpec, parse_noise, noise_text, trajectory_from_profile
from .sampling      import SampleSet, bit_dtype, simulate_patched, restrict, sample
from .samples       import write_samples, read_samples

__all__ = [
    "StateVector", "check_capacity", "check_bitstring", "simulate", "amplitude", "probabilities",
    "save_state", "load_state",
    "Mixture", "Trajectory", "NoiseSpec", "parse_noise", "noise_text", "trajectory_from_profile",
    "SampleSet", "bit_dtype", "simulate_patched", "restrict", "sample",
    "write_samples", "read_samples",
]
