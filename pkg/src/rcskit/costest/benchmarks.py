"""
Benchmark Manifest

Reference classical-simulation costs of published random circuit sampling experiments, their
runtime conversion on the reference machine, and optional proxy plans from our own optimizer.

A proxy plan uses a connected block of the bundled lattice with the experiment's qubit and cycle
counts. It is labelled as a proxy: the reference figures come from other circuits and other
optimizers, and matching them is not a goal.

Classes:
    ReferenceCell: One memory constraint of one experiment
    Benchmark: One experiment
    BenchmarkRow: Reference, conversion and proxy for one constraint

Functions:
    parse_runtime: "62.1 yr" -> seconds
    load_benchmarks: Read the manifest and flag disagreeing cells
    benchmark_report: Rows for every experiment and constraint
    benchmark_table: Aligned text table of the rows
    benchmark_document: JSON form of the rows
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from pathlib    import Path
from typing     import Any, Literal, Optional, Sequence

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import casefy
import regex
import yaml
from attrs      import frozen, field
from pydantic   import BaseModel, ConfigDict, Field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..circuits.generator   import generate
from ..common.documents     import SCHEMA_VERSION, validate_model
from ..common.errors        import ParseError
from ..configurator.paths   import DataPaths
from ..device.bundled       import resolve_profile, resolve_topology
from ..device.profile       import DeviceProfile
from ..device.subset        import block_subset
from ..device.topology      import DeviceTopology
from ..logger               import info, warning
from .network               import build_network
from .optimizer             import optimize_order
from .report                import CostReport, MachineModel, format_duration, report_cost, report_document

__all__ = [
    "PETABYTE",
    "ReferenceCell",
    "Benchmark",
    "BenchmarkRow",
    "parse_runtime",
    "load_benchmarks",
    "benchmark_report",
    "benchmark_table",
    "benchmark_document",
]

PETABYTE = 1e15

_SECONDS = {"s": 1.0, "min": 60.0, "h": 3600.0, "d": 86400.0, "yr": 365.0 * 86400.0}
_RUNTIME = regex.compile(r"\s*(?P<value>[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?)\s*(?P<unit>s|min|h|d|yr)\s*")


def parse_runtime(text: str) -> float:
    """
    Raises:
        ParseError: Unless the text is a number followed by s, min, h, d or yr.
    """
    match = _RUNTIME.fullmatch(text)
    if match is None:
        raise ParseError(f"unrecognized runtime {text!r}; expected e.g. '1.6 s' or '6.4e+9 yr'")
    return float(match["value"]) * _SECONDS[match["unit"]]


@frozen
class ReferenceCell:
    memory_pb:          float
    amplitude_flops:    float
    samples_flops:      float
    runtime:            Optional[str] = None

    @property
    def memory_bytes(self) -> float:
        return self.memory_pb * PETABYTE

    @property
    def runtime_seconds(self) -> Optional[float]:
        return None if self.runtime is None else parse_runtime(self.runtime)


@frozen
class Benchmark:
    """
    Attributes:
        name: Experiment label, e.g. "Sycamore-53-20"
        qubits: n
        cycles: m
        fidelity: Experimental fidelity
        summary: Cells with printed runtimes
        extended: Cells over more memory constraints
    """

    name:       str
    qubits:     int
    cycles:     int
    fidelity:   float
    summary:    tuple[ReferenceCell, ...] = field(converter=tuple)
    extended:   tuple[ReferenceCell, ...] = field(converter=tuple)

    @property
    def stem(self) -> str:
        """File-name stem for per-experiment outputs."""
        return casefy.snakecase(self.name)

    def constraints(self) -> list[float]:
        return sorted({cell.memory_pb for cell in self.summary + self.extended})

    def cell(self, memory_pb: float) -> ReferenceCell:
        """The summary cell for a constraint when present, else the extended one."""
        for cell in self.summary + self.extended:
            if cell.memory_pb == memory_pb:
                return cell
        raise KeyError(memory_pb)

    def discrepancies(self) -> list[str]:
        found = []
        extended = {cell.memory_pb: cell for cell in self.extended}
        for cell in self.summary:
            other = extended.get(cell.memory_pb)
            if other is None:
                continue
            for column in ("amplitude_flops", "samples_flops"):
                a, b = getattr(cell, column), getattr(other, column)
                if a != b:
                    found.append(f"{self.name} at {cell.memory_pb:g} PB: {column} {a:.2g} (summary) vs {b:.2g} (extended)")
        return found


# -----------------------------------------------------------------------------
# Manifest
# -----------------------------------------------------------------------------
class _CellModel(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    memory_pb:          float           = Field(gt=0)
    amplitude_flops:    float           = Field(gt=0)
    samples_flops:      float           = Field(gt=0)
    runtime:            Optional[str]   = None


class _ExperimentModel(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    name:       str
    qubits:     int     = Field(ge=1)
    cycles:     int     = Field(ge=1)
    fidelity:   float   = Field(gt=0, le=1)
    summary:    list[_CellModel] = []
    extended:   list[_CellModel] = []


class _ManifestModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1]
    kind:           Literal["benchmarks"]
    experiments:    list[_ExperimentModel]


def load_benchmarks(path: Optional[str | Path] = None) -> list[Benchmark]:
    """
    Read a benchmark manifest (the bundled one when `path` is None) and log a warning for every
    cell where the summary and extended figures disagree.

    Raises:
        ParseError: Malformed YAML or manifest fields.
    """
    path = Path(path) if path is not None else DataPaths().benchmarks()
    try:
        with open(path, encoding="utf-8") as f:
            payload = yaml.safe_load(f)
    except FileNotFoundError:
        raise ParseError(f"file not found: {path}")
    except yaml.YAMLError as e:
        raise ParseError(f"{path}: invalid YAML: {e}")
    model = validate_model(_ManifestModel, payload, str(path))

    benchmarks = []
    for experiment in model.experiments:
        cells = {key: [ReferenceCell(**cell.model_dump()) for cell in getattr(experiment, key)]
                 for key in ("summary", "extended")}
        for cell in cells["summary"] + cells["extended"]:
            if cell.runtime is not None:
                parse_runtime(cell.runtime)
        benchmark = Benchmark(experiment.name, experiment.qubits, experiment.cycles, experiment.fidelity,
                              cells["summary"], cells["extended"])
        for message in benchmark.discrepancies():
            warning(message)
        benchmarks.append(benchmark)
    return benchmarks


# -----------------------------------------------------------------------------
# Report
# -----------------------------------------------------------------------------
@frozen
class BenchmarkRow:
    """
    Attributes:
        benchmark: Experiment
        memory_pb: Constraint
        reference: Reference cell for the constraint
        converted_seconds: Reference noisy-sample FLOPs converted on the machine model
        proxy: Our plan of the proxy circuit, when planned
    """

    benchmark:          Benchmark
    memory_pb:          float
    reference:          ReferenceCell
    converted_seconds:  float
    proxy:              Optional[CostReport] = None

    @property
    def relative_gap(self) -> Optional[float]:
        """converted / printed - 1, when a runtime is printed."""
        printed = self.reference.runtime_seconds
        return None if printed is None else self.converted_seconds / printed - 1.0


def benchmark_report(benchmarks:    Optional[Sequence[Benchmark]] = None,
                     machine:       Optional[MachineModel] = None,
                     plan_up_to:    int = 0,
                     seed:          int = 0,
                     restarts:      Optional[int] = None,
                     topology:      Optional[DeviceTopology] = None,
                     profile:       Optional[DeviceProfile] = None,
                     shots:         int = 1_000_000) -> list[BenchmarkRow]:
    """
    One row per experiment and memory constraint.

    Args:
        benchmarks: Experiments (the bundled manifest when None)
        machine: Conversion model (settings defaults when None)
        plan_up_to: Plan proxy circuits for experiments with at most this many qubits
        seed: Seed of the proxy circuits and their plans
        restarts: Optimizer restarts for proxy plans
        topology: Lattice for proxy circuits (bundled default when None)
        profile: Gate parameters for proxy circuits (bundled default when None)
        shots: N for the proxy sampling extrapolation
    """
    benchmarks = load_benchmarks() if benchmarks is None else benchmarks
    machine    = MachineModel.from_settings() if machine is None else machine

    rows = []
    for benchmark in benchmarks:
        network = None
        if benchmark.qubits <= plan_up_to:
            topology = resolve_topology() if topology is None else topology
            profile  = resolve_profile() if profile is None else profile
            subset   = block_subset(topology, benchmark.qubits, name=f"{benchmark.stem}-proxy")
            circuit  = generate(topology, subset, benchmark.cycles, seed, profile)
            network  = build_network(circuit, output=0)

        for memory_pb in benchmark.constraints():
            reference = benchmark.cell(memory_pb)
            proxy     = None
            if network is not None:
                plan  = optimize_order(network, seed, restarts, memory=memory_pb * PETABYTE)
                proxy = report_cost(plan, machine, shots, benchmark.fidelity)
            rows.append(BenchmarkRow(benchmark, memory_pb, reference, machine.runtime(reference.samples_flops), proxy))
    info(f"benchmark report: {len(rows)} rows, {sum(row.proxy is not None for row in rows)} with proxy plans")
    return rows


def benchmark_table(rows: Sequence[BenchmarkRow]) -> str:
    header = f"{'experiment':<18}{'memory':>10}{'1 amplitude':>13}{'1M samples':>13}{'printed':>13}{'converted':>13}{'proxy':>13}"
    lines  = [header]
    for row in rows:
        printed = row.reference.runtime or "-"
        proxy   = format_duration(row.proxy.sample_runtime_seconds) if row.proxy is not None else "-"
        lines.append(f"{row.benchmark.name:<18}{f'{row.memory_pb:g} PB':>10}"
                     f"{row.reference.amplitude_flops:>13.1e}{row.reference.samples_flops:>13.1e}"
                     f"{printed:>13}{format_duration(row.converted_seconds):>13}{proxy:>13}")
    return "\n".join(lines)


def benchmark_document(rows: Sequence[BenchmarkRow], **extra: Any) -> dict[str, Any]:
    return {
        **extra,
        "schema_version":   SCHEMA_VERSION,
        "kind":             "benchmark_report",
        "rows": [
            {
                "experiment":           row.benchmark.name,
                "stem":                 row.benchmark.stem,
                "memory_pb":            row.memory_pb,
                "reference":            {
                    "amplitude_flops":  row.reference.amplitude_flops,
                    "samples_flops":    row.reference.samples_flops,
                    "runtime":          row.reference.runtime,
                },
                "converted_seconds":    row.converted_seconds,
                "proxy":                None if row.proxy is None else report_document(row.proxy, label="proxy estimate"),
            }
            for row in rows
        ],
    }
