"""
Configuration Utilities

Functions:
    merge_configs: Overlay one nested settings mapping on another
    find_config_file: First settings file of a name in the usual places
    env_overrides: Nested overrides from RCSKIT_* environment variables
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import os
from pathlib    import Path
from typing     import Any, Iterable, Mapping, Optional

__all__ = ["ENV_VARIABLES", "merge_configs", "find_config_file", "env_overrides"]

# Environment variable -> settings key path
ENV_VARIABLES: dict[str, tuple[str, ...]] = {
    "RCSKIT_DATA_DIR":   ("data", "dir"),
    "RCSKIT_MAX_QUBITS": ("simulator", "max_qubits"),
    "RCSKIT_THREADS":    ("simulator", "threads"),
    "RCSKIT_LOG_DIR":    ("logging", "dir"),
}


def merge_configs(base: Mapping[str, Any], override: Mapping[str, Any]) -> dict[str, Any]:
    """
    `override` laid over `base`. Sections present in both are merged key by key; any other value
    in `override` replaces the one in `base`. Neither input is modified.
    """
    merged = dict(base)
    for key, value in override.items():
        current = merged.get(key)
        if isinstance(current, Mapping) and isinstance(value, Mapping):
            merged[key] = merge_configs(current, value)
        else:
            merged[key] = value
    return merged


def _search_dirs() -> list[Path]:
    return [Path.cwd(), Path.cwd() / "config", Path.home(), Path.home() / ".config"]


def find_config_file(name: str, search_paths: Optional[Iterable[str | Path]] = None) -> Optional[Path]:
    """
    Args:
        name: File name, e.g. `rcskit.yaml`
        search_paths: Directories tried before the working directory, `./config`, the home
            directory and `~/.config`

    Returns:
        The first existing file, or None.
    """
    for directory in [*map(Path, search_paths or ()), *_search_dirs()]:
        candidate = directory / name
        if candidate.is_file():
            return candidate
    return None


def _nest(key_path: tuple[str, ...], value: str) -> dict[str, Any]:
    nested: dict[str, Any] = {key_path[-1]: value}
    for key in reversed(key_path[:-1]):
        nested = {key: nested}
    return nested


def env_overrides(environ: Optional[Mapping[str, str]] = None) -> dict[str, Any]:
    """
    Settings overrides from the RCSKIT_* variables that are set and non-empty. Values stay
    strings; the settings model coerces them.
    """
    environ   = os.environ if environ is None else environ
    overrides: dict[str, Any] = {}
    for variable, key_path in ENV_VARIABLES.items():
        if environ.get(variable):
            overrides = merge_configs(overrides, _nest(key_path, environ[variable]))
    return overrides
