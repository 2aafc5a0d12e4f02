"""
Gates

Single-qubit square-root gates and the parameterized iSWAP-like two-qubit gate.

Classes:
    GateKind: SX, SY, SW
    Gate1Q: One of the three square-root gates
    Gate2Q: iSWAP-like gate with five angles
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import math
from enum       import Enum
from functools  import cached_property

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import numpy as np
from attrs      import frozen, field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..device.profile import GateParameters

__all__ = [
    "GateKind",
    "Gate1Q",
    "Gate2Q",
    "PAULI_X",
    "PAULI_Y",
    "PAULI_Z",
]

PAULI_I = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI_W = (PAULI_X + PAULI_Y) / math.sqrt(2)


class GateKind(str, Enum):
    SX = "SX"
    SY = "SY"
    SW = "SW"

    @property
    def generator(self) -> np.ndarray:
        """The Pauli-like G with G**2 = I whose square root this kind is."""
        return {GateKind.SX: PAULI_X, GateKind.SY: PAULI_Y, GateKind.SW: PAULI_W}[self]


def _sqrt_gate(generator: np.ndarray) -> np.ndarray:
    matrix = (PAULI_I - 1j * generator) / math.sqrt(2)
    matrix.setflags(write=False)
    return matrix


_SQRT_MATRICES = {kind: _sqrt_gate(kind.generator) for kind in GateKind}


@frozen
class Gate1Q:
    """
    sqrt(G) = (I - iG)/sqrt(2) for G in {X, Y, W}, W = (X + Y)/sqrt(2).

    Squaring gives -iG, i.e. G up to a global phase.
    """

    kind: GateKind = field(converter=GateKind)

    @property
    def matrix(self) -> np.ndarray:
        return _SQRT_MATRICES[self.kind]


@frozen
class Gate2Q:
    """
    iSWAP-like gate on basis |00>, |01>, |10>, |11> (first qubit of the pair is the high bit).

        [[1, 0,                             0,                             0              ],
         [0, e^{i(d+ + d-)} cos t,          -i e^{i(d+ - doff)} sin t,     0              ],
         [0, -i e^{i(d+ + doff)} sin t,     e^{i(d+ - d-)} cos t,          0              ],
         [0, 0,                             0,                             e^{i(2d+ - p)} ]]

    At theta = pi/2 and all other angles zero this is iSWAP up to sign: |01> -> -i|10>.
    """

    theta:              float
    phi:                float
    delta_plus:         float = 0.0
    delta_minus:        float = 0.0
    delta_minus_off:    float = 0.0

    @classmethod
    def from_parameters(cls, params: GateParameters) -> "Gate2Q":
        return cls(*params.as_tuple())

    def parameters(self) -> GateParameters:
        return GateParameters(self.theta, self.phi, self.delta_plus, self.delta_minus, self.delta_minus_off)

    @cached_property
    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.theta), math.sin(self.theta)
        dp, dm, doff = self.delta_plus, self.delta_minus, self.delta_minus_off
        u = np.zeros((4, 4), dtype=np.complex128)
        u[0, 0] = 1.0
        u[1, 1] = np.exp(1j * (dp + dm)) * c
        u[1, 2] = -1j * np.exp(1j * (dp - doff)) * s
        u[2, 1] = -1j * np.exp(1j * (dp + doff)) * s
        u[2, 2] = np.exp(1j * (dp - dm)) * c
        u[3, 3] = np.exp(1j * (2 * dp - self.phi))
        u.setflags(write=False)
        return u

    @cached_property
    def tensor(self) -> np.ndarray:
        """Matrix reshaped to (out_a, out_b, in_a, in_b)."""
        return self.matrix.reshape(2, 2, 2, 2)
