"""
Cost Reports

Converts a plan's complex FLOP count into machine FLOPs, memory and runtime on a reference
machine, and extrapolates to N noisy samples at fidelity f.

    machine FLOPs   = flops_per_complex * complex FLOPs              (8 by default)
    runtime         = machine FLOPs / (peak * efficiency)           (1.685e18 FLOPS at 20%)
    noisy samples   = f * N * (per-amplitude complex FLOPs) / b     (b = batch amortization)

The noisy-sample model is a parameterized stand-in for frugal-sampling schemes; every report
carries its parameters.

Classes:
    MachineModel: Peak performance, efficiency and conversion factors
    CostReport: Amplitude and sampling costs of a plan

Functions:
    report_cost: Report a plan
    convert_runtime: Seconds for a complex FLOP count
    format_duration: "1.6 s", "62.1 yr", ...
    parse_memory: "64MiB" -> bytes
    report_document: JSON form of a report
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from typing     import Any, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import regex
from attrs      import frozen, field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents         import SCHEMA_VERSION
from ..common.errors            import ParseError, ValidationError
from ..common.intervals         import EFFICIENCY, POSITIVE, require_in
from ..configurator.settings    import get_settings
from .plan                      import ContractionPlan

__all__ = [
    "SAMPLING_MODEL",
    "MachineModel",
    "CostReport",
    "report_cost",
    "convert_runtime",
    "format_duration",
    "parse_memory",
    "report_document",
]

SAMPLING_MODEL = "f * N * amplitude cost / batch_amortization"

_YEAR   = 365.0 * 86400.0
_UNITS  = (("yr", _YEAR), ("d", 86400.0), ("h", 3600.0), ("min", 60.0), ("s", 1.0))


def _positive(instance, attribute, value) -> None:
    require_in(attribute.name, value, POSITIVE)


@frozen
class MachineModel:
    peak_flops:         float = field(default=1.685e18, converter=float, validator=_positive)
    efficiency:         float = field(default=0.20, converter=float,
                                      validator=lambda _, a, v: require_in(a.name, v, EFFICIENCY))
    flops_per_complex:  float = field(default=8.0, converter=float, validator=_positive)
    batch_amortization: float = field(default=1.0, converter=float, validator=_positive)

    @classmethod
    def from_settings(cls, **overrides: Any) -> "MachineModel":
        costest = get_settings().costest
        values  = {
            "peak_flops":           costest.peak_flops,
            "efficiency":           costest.efficiency,
            "flops_per_complex":    costest.machine_flops_per_complex_flop,
            "batch_amortization":   costest.batch_amortization,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    def runtime(self, complex_flops: float) -> float:
        return complex_flops * self.flops_per_complex / (self.peak_flops * self.efficiency)


def convert_runtime(complex_flops: float, machine: Optional[MachineModel] = None) -> float:
    """Seconds to execute `complex_flops` on the machine (settings defaults when None)."""
    machine = MachineModel.from_settings() if machine is None else machine
    return machine.runtime(float(complex_flops))


def format_duration(seconds: float) -> str:
    unit, scale = next(((unit, scale) for unit, scale in _UNITS if seconds >= scale), _UNITS[-1])
    value = seconds / scale
    return f"{value:.1f} {unit}" if value < 1e4 else f"{value:.1e} {unit}"


_MEMORY = regex.compile(r"\s*(?P<value>[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*(?P<unit>[KMGTP]i?B|B)?\s*", regex.IGNORECASE)
_PREFIX = {"": 1, "k": 1e3, "m": 1e6, "g": 1e9, "t": 1e12, "p": 1e15}


def parse_memory(text: str) -> float:
    """
    Bytes for a memory size such as "9.2PB", "64 MiB" or "1e9" (plain bytes).

    Raises:
        ParseError: Unrecognized text.
    """
    match = _MEMORY.fullmatch(text)
    if match is None:
        raise ParseError(f"unrecognized memory size {text!r}; expected e.g. '64MiB' or '9.2PB'")
    unit   = (match["unit"] or "").lower()
    prefix = unit[:1] if unit not in ("", "b") else ""
    scale  = 1024.0 ** " kmgtp".index(prefix) if unit.endswith("ib") else _PREFIX[prefix]
    return float(match["value"]) * scale


@frozen
class CostReport:
    """
    Attributes:
        complex_flops: Per-amplitude complex FLOPs (all slices)
        n_slices: Slice count
        max_intermediate_bytes: Largest tensor under slicing
        memory_limit: Constraint the plan was built for, bytes
        shots: N
        fidelity: f
        machine: Conversion model
    """

    complex_flops:          int
    n_slices:               int
    max_intermediate_bytes: int
    memory_limit:           Optional[float]
    shots:                  int
    fidelity:               float
    machine:                MachineModel

    @property
    def machine_flops(self) -> float:
        return self.machine.flops_per_complex * self.complex_flops

    @property
    def runtime_seconds(self) -> float:
        return self.machine.runtime(self.complex_flops)

    @property
    def sample_complex_flops(self) -> float:
        return self.fidelity * self.shots * float(self.complex_flops) / self.machine.batch_amortization

    @property
    def sample_machine_flops(self) -> float:
        return self.machine.flops_per_complex * self.sample_complex_flops

    @property
    def sample_runtime_seconds(self) -> float:
        return self.machine.runtime(self.sample_complex_flops)

    def summary(self) -> str:
        return (f"1 amplitude: {float(self.complex_flops):.2e} complex FLOP ({format_duration(self.runtime_seconds)}); "
                f"{self.shots} noisy samples at f={self.fidelity:g}: {self.sample_complex_flops:.2e} complex FLOP "
                f"({format_duration(self.sample_runtime_seconds)}); "
                f"max intermediate {self.max_intermediate_bytes} B over {self.n_slices} slices")


def report_cost(plan:       ContractionPlan,
                machine:    Optional[MachineModel] = None,
                shots:      int = 1_000_000,
                fidelity:   float = 1.0) -> CostReport:
    """
    Cost report of a plan.

    Args:
        plan: Contraction plan
        machine: Conversion model (settings defaults when None)
        shots: N >= 1
        fidelity: Target fidelity f in (0, 1]

    Raises:
        ValidationError: N < 1 or f outside (0, 1].
    """
    if shots < 1:
        raise ValidationError(f"shots must be at least 1, got {shots}")
    fidelity = require_in("fidelity", fidelity, EFFICIENCY)
    machine  = MachineModel.from_settings() if machine is None else machine
    return CostReport(
        complex_flops           = plan.complex_flops,
        n_slices                = plan.n_slices,
        max_intermediate_bytes  = plan.max_intermediate_bytes,
        memory_limit            = plan.memory_limit,
        shots                   = shots,
        fidelity                = fidelity,
        machine                 = machine,
    )


def report_document(report: CostReport, **extra: Any) -> dict[str, Any]:
    return {
        **extra,
        "schema_version":           SCHEMA_VERSION,
        "kind":                     "cost_report",
        "complex_flops":            report.complex_flops,
        "machine_flops":            report.machine_flops,
        "runtime_seconds":          report.runtime_seconds,
        "n_slices":                 report.n_slices,
        "max_intermediate_bytes":   report.max_intermediate_bytes,
        "memory_limit":             report.memory_limit,
        "sampling": {
            "model":                SAMPLING_MODEL,
            "shots":                report.shots,
            "fidelity":             report.fidelity,
            "batch_amortization":   report.machine.batch_amortization,
            "complex_flops":        report.sample_complex_flops,
            "machine_flops":        report.sample_machine_flops,
            "runtime_seconds":      report.sample_runtime_seconds,
        },
        "machine": {
            "peak_flops":           report.machine.peak_flops,
            "efficiency":           report.machine.efficiency,
            "flops_per_complex":    report.machine.flops_per_complex,
        },
    }
