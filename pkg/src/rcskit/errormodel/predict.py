"""
Digital Error Model

Predicts circuit fidelity as the product of (1 - e) over every executed operation:

    F = prep_factor * prod_1q (1 - e1) * prod_2q (1 - e2) * prod_idle (1 - e_idle) * prod_qubits (1 - e_ro)

Rates are Pauli errors taken per element from the profile (per-qubit or per-coupler overrides,
else device-wide defaults). Accumulation is in the log domain.

Classes:
    BudgetTerm: Contribution of one operation kind
    ErrorBudget: All contributions and the prediction

Functions:
    predict_fidelity: Predicted fidelity and its budget
    patch_ratio: F(patched) / F(full)
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import math
from typing     import Literal, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import frozen, field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..circuits.circuit     import Circuit, OneQubitLayer, PatchSpec
from ..circuits.patch       import apply_patch
from ..common.errors        import ValidationError
from ..common.intervals     import POSITIVE, require_in
from ..device.profile       import DeviceProfile
from ..device.topology      import DeviceTopology
from ..logger               import debug
from ..xeb.estimators       import FidelityEstimate

__all__ = [
    "COMPONENTS",
    "Component",
    "Readout",
    "BudgetTerm",
    "ErrorBudget",
    "predict_fidelity",
    "patch_ratio",
]

Component = Literal["1q", "2q", "idle", "readout"]
Readout   = Literal["average", "state_resolved"]

COMPONENTS: tuple[Component, ...] = ("1q", "2q", "idle", "readout")


@frozen
class BudgetTerm:
    """
    Attributes:
        kind: 1q, 2q, idle or readout
        count: Number of operations of this kind
        mean_rate: Effective rate r with count * ln(1 - r) equal to the log term
        log_fidelity: Sum of ln(1 - e) over the operations
    """

    kind:           Component
    count:          int
    mean_rate:      float
    log_fidelity:   float

    @property
    def fidelity(self) -> float:
        return math.exp(self.log_fidelity)


@frozen
class ErrorBudget:
    terms:          tuple[BudgetTerm, ...] = field(converter=tuple)
    prep_factor:    float = 1.0

    @property
    def log_fidelity(self) -> float:
        return math.fsum(term.log_fidelity for term in self.terms) + math.log(self.prep_factor)

    @property
    def fidelity(self) -> float:
        return math.exp(self.log_fidelity)

    def term(self, kind: Component) -> BudgetTerm:
        for term in self.terms:
            if term.kind == kind:
                return term
        raise KeyError(kind)


def _term(kind: Component, rates: list[float]) -> BudgetTerm:
    log_fidelity = math.fsum(math.log1p(-rate) for rate in rates)
    mean_rate    = -math.expm1(log_fidelity / len(rates)) if rates else 0.0
    return BudgetTerm(kind, len(rates), mean_rate, log_fidelity)


def _readout_rate(profile: DeviceProfile, qubit: int, readout: Readout) -> float:
    if readout == "average":
        return profile.e_ro_of(qubit)
    e0, e1 = profile.e_ro_states_of(qubit)
    return 0.5 * (e0 + e1)


def predict_fidelity(circuit:       Circuit,
                     profile:       DeviceProfile,
                     readout:       Readout = "average",
                     prep_factor:   float = 1.0) -> tuple[FidelityEstimate, ErrorBudget]:
    """
    Predict the fidelity of a circuit.

    Args:
        circuit: Circuit, patched or not
        profile: Error rates
        readout: "average" uses e_ro; "state_resolved" uses (e_ro0 + e_ro1) / 2 per qubit
        prep_factor: Optional state-preparation correction, multiplies the prediction

    Returns:
        (estimate with method "error_model", budget)

    Raises:
        MissingRateError: A used element has no rate in the profile.
    """
    if readout not in ("average", "state_resolved"):
        raise ValidationError(f"readout must be 'average' or 'state_resolved', got {readout!r}")
    prep_factor = require_in("prep_factor", prep_factor, POSITIVE)
    active      = circuit.subset.active

    rates: dict[Component, list[float]] = {kind: [] for kind in COMPONENTS}
    for layer in circuit.layers:
        if isinstance(layer, OneQubitLayer):
            rates["1q"].extend(profile.e1_of(active[q]) for q, _ in layer.gates)
        else:
            rates["2q"].extend(profile.e2_of(op.coupler) for op in layer.gates)
            rates["idle"].extend(profile.e_idle_of(active[q]) for q in layer.idle)
    rates["readout"] = [_readout_rate(profile, q, readout) for q in active]

    budget   = ErrorBudget(tuple(_term(kind, rates[kind]) for kind in COMPONENTS), prep_factor)
    estimate = FidelityEstimate(budget.fidelity, 0.0, 1, "error_model")
    debug(f"predicted F = {estimate.value:.4g} for {circuit.n} qubits, {circuit.cycles} cycles ({readout} readout)")
    return estimate, budget


def patch_ratio(circuit:    Circuit,
                patch:      PatchSpec,
                profile:    DeviceProfile,
                readout:    Readout = "average",
                topology:   Optional[DeviceTopology] = None) -> float:
    """
    F(patched) / F(full) under the same profile.

    Args:
        circuit: Full circuit
        patch: Regions to cut along
        profile: Error rates
        topology: Lattice for the region checks; resolved from the circuit when omitted

    Raises:
        ValidationError: Invalid regions, or an already patched circuit.
    """
    patched = apply_patch(circuit, patch, topology)
    _, full = predict_fidelity(circuit, profile, readout)
    _, cut  = predict_fidelity(patched, profile, readout)
    return math.exp(cut.log_fidelity - full.log_fidelity)
