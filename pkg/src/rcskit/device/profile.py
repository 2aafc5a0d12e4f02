"""
Device Profiles

Calibrated error rates, two-qubit gate parameters and durations of a device.

A profile holds device-wide defaults plus optional per-qubit and per-coupler overrides. A lookup
returns the override when present, else the default; when neither exists it raises
`MissingRateError` naming the element, so per-element profiles without defaults are strict.

Classes:
    GateParameters: The five angles of the iSWAP-like gate
    QubitRates: Per-qubit rate overrides
    CouplerRates: Per-coupler rate and parameter overrides
    Durations: Gate, idle and repetition times
    DeviceProfile: Rates, parameters and durations

Functions:
    load_profile: Profile from a document
    profile_document: Document form of a profile
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import math
from typing     import Any, Literal, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import frozen, field
from pydantic   import BaseModel, ConfigDict, Field, field_validator

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents import SCHEMA_VERSION, validate_model
from ..common.errors    import MissingRateError, ValidationError
from ..common.intervals import RATE, POSITIVE, require_in
from .topology          import Coupler

__all__ = [
    "GateParameters",
    "QubitRates",
    "CouplerRates",
    "Durations",
    "DeviceProfile",
    "load_profile",
    "profile_document",
]


def _rate(instance, attribute, value) -> None:
    if value is not None:
        require_in(attribute.name, value, RATE)


def _finite(instance, attribute, value) -> None:
    if not math.isfinite(value):
        raise ValidationError(f"{attribute.name} must be finite, got {value!r}")


def _positive(instance, attribute, value) -> None:
    require_in(attribute.name, value, POSITIVE)


@frozen
class GateParameters:
    """
    iSWAP-like gate angles, in radians.

    Attributes:
        theta: Swap angle
        phi: Conditional phase
        delta_plus: Common single-qubit phase
        delta_minus: Differential single-qubit phase
        delta_minus_off: Off-diagonal differential phase
    """

    theta:              float = field(converter=float, validator=_finite)
    phi:                float = field(converter=float, validator=_finite)
    delta_plus:         float = field(default=0.0, converter=float, validator=_finite)
    delta_minus:        float = field(default=0.0, converter=float, validator=_finite)
    delta_minus_off:    float = field(default=0.0, converter=float, validator=_finite)

    @classmethod
    def ideal_iswap(cls) -> "GateParameters":
        return cls(theta=math.pi / 2, phi=0.0)

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.theta, self.phi, self.delta_plus, self.delta_minus, self.delta_minus_off)


@frozen
class QubitRates:
    e1:     Optional[float] = field(default=None, validator=_rate)
    e_ro:   Optional[float] = field(default=None, validator=_rate)
    e_idle: Optional[float] = field(default=None, validator=_rate)
    e_ro0:  Optional[float] = field(default=None, validator=_rate)
    e_ro1:  Optional[float] = field(default=None, validator=_rate)


@frozen
class CouplerRates:
    e2:     Optional[float]             = field(default=None, validator=_rate)
    gate:   Optional[GateParameters]    = None


@frozen
class Durations:
    """Seconds."""

    t_1q:               float = field(default=28e-9,  validator=_positive)
    t_2q:               float = field(default=45e-9,  validator=_positive)
    t_idle:             float = field(default=45e-9,  validator=_positive)
    sampling_interval:  float = field(default=400e-6, validator=_positive)


@frozen
class DeviceProfile:
    """
    Device error rates and gate parameters.

    Rates are Pauli error probabilities (readout: assignment error), as decimal fractions.

    Attributes:
        name: Profile name
        defaults: Device-wide qubit rates
        e2: Device-wide two-qubit Pauli error
        gate: Device-wide two-qubit gate parameters
        qubits: Per-qubit overrides, keyed by linear id
        couplers: Per-coupler overrides, keyed by sorted linear-id pair
        durations: Gate/idle durations and the shot repetition interval
    """

    name:       str
    defaults:   QubitRates                  = QubitRates()
    e2:         Optional[float]             = field(default=None, validator=_rate)
    gate:       Optional[GateParameters]    = None
    qubits:     dict[int, QubitRates]       = field(factory=dict, eq=False)
    couplers:   dict[Coupler, CouplerRates] = field(factory=dict, eq=False)
    durations:  Durations                   = Durations()

    def _qubit_rate(self, quantity: str, qubit: int) -> float:
        override = self.qubits.get(qubit)
        value    = getattr(override, quantity) if override is not None else None
        if value is None:
            value = getattr(self.defaults, quantity)
        if value is None:
            raise MissingRateError(quantity, f"qubit {qubit}")
        return value

    def e1_of(self, qubit: int) -> float:
        return self._qubit_rate("e1", qubit)

    def e_ro_of(self, qubit: int) -> float:
        return self._qubit_rate("e_ro", qubit)

    def e_idle_of(self, qubit: int) -> float:
        return self._qubit_rate("e_idle", qubit)

    def e_ro_states_of(self, qubit: int) -> tuple[float, float]:
        """State-resolved readout errors (|0>, |1>)."""
        return self._qubit_rate("e_ro0", qubit), self._qubit_rate("e_ro1", qubit)

    def e2_of(self, coupler: Coupler) -> float:
        override = self.couplers.get(tuple(sorted(coupler)))
        value    = override.e2 if override is not None and override.e2 is not None else self.e2
        if value is None:
            raise MissingRateError("e2", f"coupler {tuple(sorted(coupler))}")
        return value

    def gate_of(self, coupler: Coupler) -> GateParameters:
        override = self.couplers.get(tuple(sorted(coupler)))
        value    = override.gate if override is not None and override.gate is not None else self.gate
        if value is None:
            raise MissingRateError("gate parameters", f"coupler {tuple(sorted(coupler))}")
        return value


# -----------------------------------------------------------------------------
# Documents
# -----------------------------------------------------------------------------
_Rate = Optional[float]


class _GateModel(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    theta:              float
    phi:                float
    delta_plus:         float = 0.0
    delta_minus:        float = 0.0
    delta_minus_off:    float = 0.0


class _QubitModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    e1:     _Rate = Field(None, ge=0, lt=1)
    e_ro:   _Rate = Field(None, ge=0, lt=1)
    e_idle: _Rate = Field(None, ge=0, lt=1)
    e_ro0:  _Rate = Field(None, ge=0, lt=1)
    e_ro1:  _Rate = Field(None, ge=0, lt=1)


class _DefaultsModel(_QubitModel):
    e2:     _Rate = Field(None, ge=0, lt=1)
    gate:   Optional[_GateModel] = None


class _CouplerModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    e2:     _Rate = Field(None, ge=0, lt=1)
    gate:   Optional[_GateModel] = None


class _DurationsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    t_1q:               float = Field(28e-9,  gt=0)
    t_2q:               float = Field(45e-9,  gt=0)
    t_idle:             float = Field(45e-9,  gt=0)
    sampling_interval:  float = Field(400e-6, gt=0)


class _ProfileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1]
    kind:           Literal["profile"]
    name:           str
    description:    str = ""
    defaults:       _DefaultsModel = _DefaultsModel()
    qubits:         dict[int, _QubitModel] = {}
    couplers:       dict[str, _CouplerModel] = {}
    durations:      _DurationsModel = _DurationsModel()

    @field_validator("couplers")
    @classmethod
    def _coupler_keys(cls, value: dict[str, _CouplerModel]) -> dict[str, _CouplerModel]:
        for key in value:
            parts = key.split("-")
            if len(parts) != 2 or not all(p.isdigit() for p in parts) or int(parts[0]) == int(parts[1]):
                raise ValueError(f"coupler key {key!r} must look like '12-19'")
        return value


def _gate(model: Optional[_GateModel]) -> Optional[GateParameters]:
    return None if model is None else GateParameters(**model.model_dump())


def _coupler_key(key: str) -> Coupler:
    a, b = (int(p) for p in key.split("-"))
    return (min(a, b), max(a, b))


def load_profile(document: dict[str, Any], source: Optional[str] = None) -> DeviceProfile:
    """
    Profile from a parsed document.

    Raises:
        ParseError: On a malformed document or an out-of-range rate, naming the field path.
    """
    model = validate_model(_ProfileModel, document, source)
    d     = model.defaults
    return DeviceProfile(
        name      = model.name,
        defaults  = QubitRates(d.e1, d.e_ro, d.e_idle, d.e_ro0, d.e_ro1),
        e2        = d.e2,
        gate      = _gate(d.gate),
        qubits    = {q: QubitRates(**m.model_dump()) for q, m in model.qubits.items()},
        couplers  = {_coupler_key(k): CouplerRates(m.e2, _gate(m.gate)) for k, m in model.couplers.items()},
        durations = Durations(**model.durations.model_dump()),
    )


def _gate_dict(gate: Optional[GateParameters]) -> Optional[dict[str, float]]:
    if gate is None:
        return None
    return {
        "theta": gate.theta, "phi": gate.phi, "delta_plus": gate.delta_plus,
        "delta_minus": gate.delta_minus, "delta_minus_off": gate.delta_minus_off,
    }


def _drop_none(mapping: dict[str, Any]) -> dict[str, Any]:
    return {k: v for k, v in mapping.items() if v is not None}


def profile_document(profile: DeviceProfile) -> dict[str, Any]:
    """Document form of a profile."""
    d = profile.defaults
    defaults = _drop_none({
        "e1": d.e1, "e_ro": d.e_ro, "e_idle": d.e_idle, "e_ro0": d.e_ro0, "e_ro1": d.e_ro1,
        "e2": profile.e2, "gate": _gate_dict(profile.gate),
    })
    return {
        "schema_version": SCHEMA_VERSION,
        "kind":           "profile",
        "name":           profile.name,
        "defaults":       defaults,
        "qubits":         {
            str(q): _drop_none({"e1": r.e1, "e_ro": r.e_ro, "e_idle": r.e_idle, "e_ro0": r.e_ro0, "e_ro1": r.e_ro1})
            for q, r in sorted(profile.qubits.items())
        },
        "couplers":       {
            f"{a}-{b}": _drop_none({"e2": r.e2, "gate": _gate_dict(r.gate)})
            for (a, b), r in sorted(profile.couplers.items())
        },
        "durations":      {
            "t_1q": profile.durations.t_1q, "t_2q": profile.durations.t_2q,
            "t_idle": profile.durations.t_idle, "sampling_interval": profile.durations.sampling_interval,
        },
    }
