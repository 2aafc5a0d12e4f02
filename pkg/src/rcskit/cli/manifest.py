"""
Run Manifests

Every command that writes a primary output also writes `<output>.manifest.json`, recording what
produced it: the command line, parameters, seeds, settings that affect results, input and output
digests, the tool version and the wall-clock time.

The manifest digest covers the command, parameters, seeds, settings, input digests and version.
Output paths, worker threads, output digests and the wall-clock time are recorded but left out,
so reruns with any thread count embed the same digest in byte-identical outputs.

Classes:
    RunManifest: Manifest document
    Run: Manifest under construction for one command
    ReplayCheck: Recorded and replayed digest of one output

Functions:
    command_line: Argument list that reproduces a command invocation
    manifest_path: Manifest location for a primary output
    load_manifest: Read a manifest document
    check_outputs: Compare output files with recorded digests
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from datetime   import datetime, timezone
from enum       import Enum
from pathlib    import Path
from typing     import Any, Literal, Optional, Sequence

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import typer
from attrs      import define, field, frozen
from pydantic   import BaseModel, ConfigDict

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..                         import __version__
from ..common.documents         import (SCHEMA_VERSION, dumps_canonical, read_document, sha256_bytes, sha256_file,
                                        validate_model, write_document)
from ..common.errors            import ParseError
from ..configurator.settings    import get_settings
from ..logger                   import debug, info

__all__ = [
    "UNRECORDED",
    "RunManifest",
    "Run",
    "ReplayCheck",
    "command_line",
    "manifest_path",
    "load_manifest",
    "check_outputs",
]

UNRECORDED = frozenset({"output", "threads"})

# Settings that change results; logging and data locations do not.
_RESULT_SETTINGS = {
    "simulator":    {"max_qubits", "checkpoint_budget_mb"},
    "costest":      True,
    "xeb":          True,
}


class RunManifest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = SCHEMA_VERSION
    kind:           Literal["manifest"] = "manifest"
    command:        str
    argv:           list[str]
    params:         dict[str, Any]
    seeds:          dict[str, int]
    settings:       dict[str, Any]
    inputs:         dict[str, str]
    outputs:        dict[str, str]
    version:        str
    threads:        Optional[int] = None
    wall_clock:     str
    digest:         str


def _text(value: Any) -> str:
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _long(opts: Sequence[str]) -> str:
    return next((opt for opt in opts if opt.startswith("--")), opts[0])


def command_line(ctx: typer.Context) -> list[str]:
    """
    Arguments that reproduce the invocation behind `ctx`, starting with the command name.

    Options are written in their long form in declaration order; options left at None are
    omitted. Parameters are told apart by `param_type_name`, never by class.
    """
    argv = [ctx.info_name or ""]
    for param in ctx.command.params:
        value = ctx.params.get(param.name)
        if value is None:
            continue
        kind = getattr(param, "param_type_name", None)
        if kind == "argument":
            argv.extend(_text(v) for v in (value if isinstance(value, (list, tuple)) else [value]))
        elif kind == "option" and getattr(param, "is_flag", False):
            if param.secondary_opts:
                argv.append(_long(param.opts) if value else _long(param.secondary_opts))
            elif value:
                argv.append(_long(param.opts))
        elif kind == "option":
            for v in (value if param.multiple else [value]):
                argv.extend((_long(param.opts), _text(v)))
    return argv


def manifest_path(output: str | Path) -> Path:
    output = Path(output)
    return output.with_name(output.name + ".manifest.json")


@define
class Run:
    """
    Manifest under construction.

    Inputs are registered before the digest is taken; outputs after they are written.
    """

    command:    str
    argv:       list[str]
    params:     dict[str, Any]
    seeds:      dict[str, int]
    settings:   dict[str, Any]
    threads:    Optional[int] = None
    inputs:     dict[str, str] = field(factory=dict)
    outputs:    dict[str, str] = field(factory=dict)

    @classmethod
    def start(cls, ctx: typer.Context, seeds: Sequence[str] = ()) -> "Run":
        """
        Args:
            ctx: Context of the running command
            seeds: Names of the parameters that are seeds
        """
        params = {name: _jsonable(value) for name, value in ctx.params.items()}
        return cls(
            command     = ctx.info_name or "",
            argv        = command_line(ctx),
            params      = params,
            seeds       = {name: params[name] for name in seeds if params.get(name) is not None},
            settings    = get_settings().model_dump(mode="json", include=_RESULT_SETTINGS),
            threads     = params.get("threads"),
        )

    def input(self, path: str | Path) -> Path:
        path = Path(path)
        if not path.is_file():
            raise ParseError(f"file not found: {path}")
        self.inputs[str(path)] = sha256_file(path)
        return path

    @property
    def digest(self) -> str:
        recorded = {
            "command":  self.command,
            "params":   {k: v for k, v in self.params.items() if k not in UNRECORDED},
            "seeds":    self.seeds,
            "settings": self.settings,
            "inputs":   self.inputs,
            "version":  __version__,
        }
        return sha256_bytes(dumps_canonical(recorded).encode("utf-8"))

    def finish(self, *outputs: str | Path, at: Optional[str | Path] = None) -> Path:
        """Record output digests and write the manifest beside `at` (default: the first output)."""
        for path in outputs:
            self.outputs[str(path)] = sha256_file(path)
        manifest = RunManifest(
            command     = self.command,
            argv        = self.argv,
            params      = self.params,
            seeds       = self.seeds,
            settings    = self.settings,
            inputs      = self.inputs,
            outputs     = self.outputs,
            version     = __version__,
            threads     = self.threads,
            wall_clock  = datetime.now(timezone.utc).isoformat(timespec="seconds"),
            digest      = self.digest,
        )
        path = write_document(manifest_path(at if at is not None else outputs[0]), manifest.model_dump(mode="json"))
        info(f"{self.command}: wrote {len(self.outputs)} output(s), manifest {path}")
        return path


def load_manifest(path: str | Path) -> RunManifest:
    return validate_model(RunManifest, read_document(path, "manifest"), str(path))


@frozen
class ReplayCheck:
    path:       str
    recorded:   str
    replayed:   Optional[str]

    @property
    def matched(self) -> bool:
        return self.recorded == self.replayed

    def __str__(self):
        verdict = "match" if self.matched else ("missing" if self.replayed is None else "MISMATCH")
        return f"{verdict:<9}{self.path}"


def check_outputs(manifest: RunManifest) -> list[ReplayCheck]:
    """Compare the files on disk with the digests a manifest recorded."""
    checks = []
    for path, recorded in manifest.outputs.items():
        replayed = sha256_file(path) if Path(path).is_file() else None
        checks.append(ReplayCheck(path, recorded, replayed))
        debug(f"replay {path}: recorded {recorded[:12]}, now {None if replayed is None else replayed[:12]}")
    return checks
