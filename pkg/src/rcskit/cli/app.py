"""
Command Line Application

File-based front end to the pipeline. Every command reads its inputs from files, writes its
primary output to a named file with a manifest beside it, prints a short summary and exits with
the code of the error class that stopped it (2 usage, 3 validation, 4 capacity, 1 anything else).

Commands:
    gen: Random circuit
    patch: Patched copy of a circuit
    simulate: Final statevector(s)
    sample: Measured bitstrings
    xeb: Linear XEB of a sample file
    purity: Speckle purity and Porter-Thomas distance of a circuit
    predict: Error-model fidelity and budget
    cost: Contraction plan and cost report
    benchmarks: Reference experiments with converted runtimes
    monitor: Stability check of a probe series
    runtime: Quantum sampling time
    sweep: Predicted fidelities over cycle counts
    replay: Re-run a manifest and compare outputs
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import functools
import logging
from enum       import Enum
from pathlib    import Path
from typing     import Annotated, Callable, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import regex
import typer

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..circuits                 import (DEFAULT_SEQUENCE, apply_patch, circuit_id, gate_counts, generate, load_circuit,
                                        patch_spec, save_circuit)
from ..common.documents         import SCHEMA_VERSION, read_document, write_document
from ..common.errors            import RcsKitError, UsageError, ValidationError
from ..configurator.settings    import configure_settings, get_settings
from ..costest                  import (MachineModel, benchmark_document, benchmark_report, benchmark_table,
                                        build_network, contract, format_duration, load_benchmarks, optimize_order,
                                        parse_memory, plan_document, report_cost, report_document)
from ..device                   import (DEFAULT_PROFILE, DEFAULT_TOPOLOGY, QubitSubset, DeviceTopology, block_subset,
                                        rect_subset, resolve_profile, resolve_subset, resolve_topology)
from ..errormodel               import (budget_document, budget_table, campaign_runtime, estimate_quantum_runtime,
                                        fidelity_sweep, mean_ratio, predict_fidelity, write_sweep_csv)
from ..logger                   import configure, error, exception, warning
from ..simulator                import (parse_noise, probabilities, read_samples, sample, save_state, simulate,
                                        simulate_patched, write_samples)
from ..xeb                      import (estimate_document, linear_xeb, load_estimate, porter_thomas_test,
                                        read_series_csv, speckle_purity, stability_check, write_band_csv)
from .manifest                  import Run, check_outputs, load_manifest

__all__ = ["app", "main"]

app = typer.Typer(
    name                = "rcskit",
    help                = "Random circuit sampling pipeline.",
    no_args_is_help     = True,
    add_completion      = False,
    pretty_exceptions_enable = False,
)


class ReadoutModel(str, Enum):
    average         = "average"
    state_resolved  = "state_resolved"


# -----------------------------------------------------------------------------
# Shared options
# -----------------------------------------------------------------------------
Seed        = Annotated[int, typer.Option("--seed", help="Seed in [0, 2**64); required for reproducibility")]
Threads     = Annotated[Optional[int], typer.Option("--threads", min=1, help="Worker threads; outputs do not depend on it")]
Output      = Annotated[Path, typer.Option("--output", "-o", help="Primary output file")]
MaybeOutput = Annotated[Optional[Path], typer.Option("--output", "-o", help="Optional output file")]
CircuitIn   = Annotated[Path, typer.Option("--circuit", "-c", help="Circuit document")]
Topology    = Annotated[str, typer.Option("--topology", help="Bundled topology name or document path")]
Profile     = Annotated[str, typer.Option("--profile", help="Bundled profile name or document path")]
Qubits      = Annotated[str, typer.Option("--qubits", "-q",
                                          help="Bundled subset name, subset document, a qubit count (breadth-first "
                                               "block) or ROWSxCOLS[@ROW,COL] (rectangle)")]

_COUNT  = regex.compile(r"\d+")
_RECT   = regex.compile(r"(?P<rows>\d+)x(?P<cols>\d+)(?:@(?P<row0>\d+),(?P<col0>\d+))?")
_RANGE  = regex.compile(r"(?P<lo>\d+)-(?P<hi>\d+)(?::(?P<step>\d+))?")


def _subset(text: str, topology: DeviceTopology) -> QubitSubset:
    if _COUNT.fullmatch(text):
        return block_subset(topology, int(text))
    if match := _RECT.fullmatch(text):
        return rect_subset(topology, int(match["row0"] or 0), int(match["rows"]),
                           int(match["col0"] or 0), int(match["cols"]))
    return resolve_subset(text, topology)


def _int_list(name: str, text: str) -> list[int]:
    """"12-36", "12-36:4" or "12,16,20"."""
    if match := _RANGE.fullmatch(text.strip()):
        lo, hi, step = int(match["lo"]), int(match["hi"]), int(match["step"] or 1)
        if hi < lo or step < 1:
            raise UsageError(f"--{name}: empty range {text!r}")
        return list(range(lo, hi + 1, step))
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"--{name}: expected LO-HI[:STEP] or a comma-separated list, got {text!r}")
    return values


def _circuit_topology(name: str) -> DeviceTopology:
    return resolve_topology(name or DEFAULT_TOPOLOGY)


def _level(name: str) -> int:
    levels = logging.getLevelNamesMapping()
    if name.upper() not in levels:
        raise UsageError(f"unknown log level {name!r}")
    return levels[name.upper()]


def _guarded(func: Callable) -> Callable:
    """Turn rcskit errors into their exit codes and anything unexpected into exit code 1."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (typer.Exit, typer.Abort):
            raise
        except RcsKitError as e:
            error(str(e), include_location=False)
            raise typer.Exit(e.exit_code)
        except Exception as e:
            exception(f"unexpected failure: {e}")
            raise typer.Exit(1)

    return wrapper


def command(name: str) -> Callable[[Callable], Callable]:
    def register(func: Callable) -> Callable:
        return app.command(name)(_guarded(func))
    return register


@app.callback()
@_guarded
def options(config:     Annotated[Optional[Path], typer.Option("--config", help="Settings file (rcskit.yaml)")] = None,
            log_dir:    Annotated[Optional[Path], typer.Option("--log-dir", help="Write a log file here")] = None,
            verbose:    Annotated[bool, typer.Option("--verbose", "-v", help="Debug output on the console")] = False):
    """Random circuit sampling pipeline."""
    settings = configure_settings(config_file=config) if config is not None else get_settings()
    configure(
        log_dir         = log_dir if log_dir is not None else settings.logging.dir,
        console_level   = logging.DEBUG if verbose else _level(settings.logging.console_level),
        file_level      = _level(settings.logging.file_level),
        log_format      = settings.logging.format,
    )


# -----------------------------------------------------------------------------
# Circuits
# -----------------------------------------------------------------------------
@command("gen")
def gen(ctx:        typer.Context,
        qubits:     Qubits,
        cycles:     Annotated[int, typer.Option("--cycles", "-m", min=1, help="Cycle count")],
        seed:       Seed,
        output:     Output,
        topology:   Topology = DEFAULT_TOPOLOGY,
        profile:    Profile = DEFAULT_PROFILE,
        sequence:   Annotated[str, typer.Option("--sequence", help="Repeating pattern labels")] = DEFAULT_SEQUENCE,
        no_repeat:  Annotated[bool, typer.Option("--no-repeat/--allow-repeat",
                                                 help="Forbid repeating a single-qubit gate on a qubit")] = True):
    """Generate a random circuit."""
    run      = Run.start(ctx, seeds=("seed",))
    topo     = resolve_topology(topology)
    circuit  = generate(topo, _subset(qubits, topo), cycles, seed, resolve_profile(profile), sequence, no_repeat)
    save_circuit(circuit, output, run.digest)
    run.finish(output)
    counts = gate_counts(circuit)
    typer.echo(f"circuit {circuit_id(circuit)}: {circuit.n} qubits, {cycles} cycles, {counts.n_1q} single-qubit and "
               f"{counts.n_2q} two-qubit gates -> {output}")


@command("patch")
def patch(ctx:      typer.Context,
          circuit:  CircuitIn,
          patches:  Annotated[int, typer.Option("--patches", "-k", min=2, help="Number of regions")],
          output:   Output):
    """Remove the two-qubit gates that cross patch regions."""
    run      = Run.start(ctx)
    full     = load_circuit(run.input(circuit))
    topology = _circuit_topology(full.topology)
    spec     = patch_spec(topology, full.subset, patches)
    patched  = apply_patch(full, spec, topology)
    save_circuit(patched, output, run.digest)
    run.finish(output)
    removed = gate_counts(full).n_2q - gate_counts(patched).n_2q
    typer.echo(f"{patches}-patch circuit {circuit_id(patched)}: removed {removed} crossing gates, regions of "
               f"{[len(region) for region in spec.regions]} qubits -> {output}")


# -----------------------------------------------------------------------------
# Simulation
# -----------------------------------------------------------------------------
@command("simulate")
def simulate_command(ctx:       typer.Context,
                     circuit:   CircuitIn,
                     output:    Annotated[Path, typer.Option("--output", "-o",
                                                             help="Statevector file (.npy); patched circuits write "
                                                                  "one STEM.pK.npy per patch")]):
    """Compute final statevector(s)."""
    if output.suffix != ".npy":
        raise UsageError(f"--output must name a .npy file, got {output}")
    run     = Run.start(ctx)
    loaded  = load_circuit(run.input(circuit))
    if loaded.patch is None:
        states = [simulate(loaded)]
        paths  = [output]
    else:
        states = simulate_patched(loaded)
        paths  = [output.with_name(f"{output.stem}.p{k}.npy") for k in range(len(states))]
    for path, state in zip(paths, states):
        save_state(path, state)
    run.finish(*paths, at=output)
    for path, state in zip(paths, states):
        typer.echo(f"{state.n} qubits, norm {state.norm():.12f} -> {path}")


@command("sample")
def sample_command(ctx:     typer.Context,
                   circuit: CircuitIn,
                   shots:   Annotated[int, typer.Option("--shots", "-n", min=1, help="Number of samples")],
                   seed:    Seed,
                   output:  Output,
                   noise:   Annotated[str, typer.Option("--noise",
                                                        help="ideal, mixture:F, trajectory:e1=..,e2=..,idle=..,ro=.. "
                                                             "or trajectory:profile")] = "ideal",
                   profile: Profile = DEFAULT_PROFILE,
                   threads: Threads = None):
    """Draw measured bitstrings with their ideal probabilities."""
    run     = Run.start(ctx, seeds=("seed",))
    loaded  = load_circuit(run.input(circuit))
    spec    = parse_noise(noise, resolve_profile(profile) if noise.strip().lower() == "trajectory:profile" else None)
    samples = sample(loaded, shots, seed, spec, threads=threads)
    write_samples(output, samples, run.digest)
    run.finish(output)
    typer.echo(f"{samples.shots} samples of {samples.n} qubits ({samples.metadata['noise']}) -> {output}")


# -----------------------------------------------------------------------------
# Estimators
# -----------------------------------------------------------------------------
@command("xeb")
def xeb(ctx:        typer.Context,
        samples:    Annotated[Path, typer.Option("--samples", "-s", help="Sample file")],
        output:     MaybeOutput = None):
    """Linear XEB fidelity of a sample file."""
    run      = Run.start(ctx)
    drawn    = read_samples(run.input(samples))
    estimate = linear_xeb(drawn)
    if output is not None:
        write_document(output, estimate_document(estimate, circuit_id=drawn.metadata.get("circuit_id"),
                                                 manifest_digest=run.digest))
        run.finish(output)
    typer.echo(str(estimate))


@command("purity")
def purity(ctx:     typer.Context,
           circuit: CircuitIn,
           output:  MaybeOutput = None):
    """Speckle purity and Porter-Thomas distance of a circuit's ideal output distribution."""
    run      = Run.start(ctx)
    loaded   = load_circuit(run.input(circuit))
    p        = probabilities(loaded)
    estimate = speckle_purity(p)
    distance = porter_thomas_test(p)
    if output is not None:
        write_document(output, estimate_document(estimate, circuit_id=circuit_id(loaded), porter_thomas=distance,
                                                 manifest_digest=run.digest))
        run.finish(output)
    typer.echo(f"{estimate}; Porter-Thomas KS distance {distance:.4f}")


@command("predict")
def predict(ctx:            typer.Context,
            circuit:        CircuitIn,
            profile:        Profile = DEFAULT_PROFILE,
            readout:        Annotated[ReadoutModel, typer.Option("--readout")] = ReadoutModel.average,
            prep_factor:    Annotated[float, typer.Option("--prep-factor", min=0.0, max=1.0,
                                                          help="Extra multiplicative state-preparation factor")] = 1.0,
            output:         MaybeOutput = None):
    """Error-model fidelity of a circuit and its error budget."""
    run     = Run.start(ctx)
    loaded  = load_circuit(run.input(circuit))
    estimate, budget = predict_fidelity(loaded, resolve_profile(profile), readout.value, prep_factor)
    if output is not None:
        write_document(output, budget_document(estimate, budget, circuit_id=circuit_id(loaded), profile=profile,
                                               manifest_digest=run.digest))
        run.finish(output)
    typer.echo(budget_table(budget))
    typer.echo(str(estimate))


@command("monitor")
def monitor(ctx:            typer.Context,
            series:         Annotated[Path, typer.Option("--series", help="CSV of timestamp,value")],
            estimate:       Annotated[Optional[float], typer.Option("--estimate", help="Reference fidelity")] = None,
            estimate_file:  Annotated[Optional[Path], typer.Option("--estimate-file",
                                                                   help="Estimate document giving the reference")] = None,
            band:           Annotated[Optional[float], typer.Option("--band", help="Relative band (settings value "
                                                                                   "when omitted)")] = None,
            output:         MaybeOutput = None):
    """Check a probe series against estimate * (1 +/- band)."""
    if (estimate is None) == (estimate_file is None):
        raise UsageError("give exactly one of --estimate and --estimate-file")
    run = Run.start(ctx)
    points = read_series_csv(run.input(series))
    if estimate_file is not None:
        estimate = load_estimate(read_document(run.input(estimate_file), "estimate"), str(estimate_file)).value
    report = stability_check(points, estimate, band)
    if output is not None:
        write_band_csv(output, report, run.digest)
        run.finish(output)
    for point in report.failures:
        warning(f"probe {point.timestamp}: {point.value:g} outside [{report.lower:g}, {report.upper:g}]",
                include_location=False)
    typer.echo(f"{'PASS' if report.passed else 'FAIL'}: {len(report.points) - len(report.failures)} of "
               f"{len(report.points)} points within [{report.lower:.4g}, {report.upper:.4g}]")


# -----------------------------------------------------------------------------
# Runtime and sweeps
# -----------------------------------------------------------------------------
@command("runtime")
def runtime(ctx:            typer.Context,
            shots:          Annotated[int, typer.Option("--shots", "-n", min=1, help="Number of samples")],
            profile:        Profile = DEFAULT_PROFILE,
            campaign:       Annotated[bool, typer.Option("--campaign", help="Add interleaved probe blocks")] = False,
            probe_every:    Annotated[int, typer.Option("--probe-every", min=1)] = 10_000_000,
            probe_shots:    Annotated[int, typer.Option("--probe-shots", min=1)] = 500_000,
            output:         MaybeOutput = None):
    """Quantum sampling time at the profile's sampling interval."""
    run     = Run.start(ctx)
    device  = resolve_profile(profile)
    seconds = estimate_quantum_runtime(shots, device)
    document = {"schema_version": SCHEMA_VERSION, "kind": "runtime", "shots": shots, "seconds": seconds,
                "sampling_interval": device.durations.sampling_interval}
    typer.echo(f"{shots} shots x {device.durations.sampling_interval * 1e6:g} us = {seconds:g} s "
               f"({format_duration(seconds)})")
    if campaign:
        total = campaign_runtime(shots, device, probe_every, probe_shots)
        document["campaign"] = {"probe_blocks": total.probe_blocks, "probe_shots": total.probe_shots,
                                "main_seconds": total.main_seconds, "probe_seconds": total.probe_seconds,
                                "total_seconds": total.total_seconds}
        typer.echo(f"with {total.probe_blocks} probe blocks: {total.total_seconds:g} s "
                   f"({format_duration(total.total_seconds)}); {total.note()}")
    if output is not None:
        write_document(output, {**document, "manifest_digest": run.digest})
        run.finish(output)


@command("sweep")
def sweep(ctx:      typer.Context,
          qubits:   Qubits,
          cycles:   Annotated[str, typer.Option("--cycles", "-m", help="LO-HI[:STEP] or a comma-separated list")],
          seed:     Seed,
          output:   Output,
          patches:  Annotated[str, typer.Option("--patches", "-k", help="Comma-separated patch counts")] = "2,4",
          topology: Topology = DEFAULT_TOPOLOGY,
          profile:  Profile = DEFAULT_PROFILE,
          readout:  Annotated[ReadoutModel, typer.Option("--readout")] = ReadoutModel.average):
    """Predicted full and patched fidelities over a range of cycle counts."""
    run     = Run.start(ctx, seeds=("seed",))
    topo    = resolve_topology(topology)
    ks      = _int_list("patches", patches)
    rows    = fidelity_sweep(topo, _subset(qubits, topo), resolve_profile(profile), _int_list("cycles", cycles), seed,
                             ks, readout=readout.value)
    write_sweep_csv(output, rows, run.digest)
    run.finish(output)
    typer.echo(", ".join(f"mean F({k}-patch)/F(full) = {mean_ratio(rows, k):.4f}" for k in ks) + f" -> {output}")


# -----------------------------------------------------------------------------
# Cost estimation
# -----------------------------------------------------------------------------
@command("cost")
def cost(ctx:       typer.Context,
         circuit:   CircuitIn,
         seed:      Seed,
         memory:    Annotated[Optional[str], typer.Option("--memory", help="Memory constraint, e.g. 64MiB or 9.2PB")] = None,
         restarts:  Annotated[Optional[int], typer.Option("--restarts", min=1)] = None,
         bitstring: Annotated[int, typer.Option("--bitstring", min=0, help="Output bitstring of the amplitude")] = 0,
         shots:     Annotated[int, typer.Option("--shots", "-n", min=1, help="N for the noisy-sample cost")] = 1_000_000,
         fidelity:  Annotated[float, typer.Option("--fidelity", help="f for the noisy-sample cost")] = 1.0,
         execute:   Annotated[bool, typer.Option("--contract", help="Also contract the amplitude")] = False,
         output:    MaybeOutput = None,
         threads:   Threads = None):
    """Plan a single-amplitude contraction and report its cost."""
    run     = Run.start(ctx, seeds=("seed",))
    loaded  = load_circuit(run.input(circuit))
    network = build_network(loaded, output=bitstring)
    plan    = optimize_order(network, seed, restarts, None if memory is None else parse_memory(memory), threads=threads)
    report  = report_cost(plan, MachineModel.from_settings(), shots, fidelity)
    extra   = {"circuit_id": circuit_id(loaded), "bitstring": bitstring, "plan": plan_document(plan)}
    typer.echo(report.summary())
    if execute:
        value = contract(network, plan, threads)
        extra["amplitude"] = [value.real, value.imag]
        typer.echo(f"<{bitstring}|U|0> = {value:.12g}")
    if output is not None:
        write_document(output, report_document(report, **extra, manifest_digest=run.digest))
        run.finish(output)


@command("benchmarks")
def benchmarks(ctx:         typer.Context,
               manifest:    Annotated[Optional[Path], typer.Option("--manifest", help="Benchmark manifest (bundled "
                                                                                       "when omitted)")] = None,
               plan_up_to:  Annotated[int, typer.Option("--plan-up-to", min=0,
                                                        help="Plan proxy circuits up to this many qubits")] = 0,
               seed:        Annotated[Optional[int], typer.Option("--seed", help="Seed of proxy circuits and plans")] = None,
               restarts:    Annotated[Optional[int], typer.Option("--restarts", min=1)] = None,
               output:      MaybeOutput = None):
    """Reference experiments with runtimes converted on the machine model."""
    if plan_up_to > 0 and seed is None:
        raise UsageError("--plan-up-to needs --seed")
    run  = Run.start(ctx, seeds=("seed",))
    rows = benchmark_report(load_benchmarks(None if manifest is None else run.input(manifest)),
                            plan_up_to=plan_up_to, seed=seed or 0, restarts=restarts)
    typer.echo(benchmark_table(rows))
    if output is not None:
        write_document(output, benchmark_document(rows, manifest_digest=run.digest))
        run.finish(output)


# -----------------------------------------------------------------------------
# Replay
# -----------------------------------------------------------------------------
@command("replay")
def replay(manifest: Annotated[Path, typer.Argument(help="Manifest written by an earlier command")]):
    """Re-run the command a manifest recorded and compare output digests."""
    recorded = load_manifest(manifest)
    configure_settings(overrides=recorded.settings)
    try:
        code = app(args=recorded.argv, standalone_mode=False)
    except typer.Exit as e:
        code = e.exit_code
    if code:
        raise ValidationError(f"replayed command {recorded.command!r} exited with code {code}")

    checks = check_outputs(recorded)
    for check in checks:
        typer.echo(str(check))
    failed = [check for check in checks if not check.matched]
    if failed:
        raise ValidationError(f"{len(failed)} of {len(checks)} outputs differ from {manifest}")
    typer.echo(f"all {len(checks)} outputs reproduced")


def main() -> None:
    app()
