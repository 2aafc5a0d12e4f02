"""
Settings

Typed, validated runtime settings assembled from the bundled defaults, an optional user
`rcskit.yaml`, RCSKIT_* environment variables and explicit overrides (in that order).

Classes:
    SimulatorSettings: Statevector capacity, checkpoint memory, worker threads
    CostSettings: Machine model and contraction-order search knobs
    XebSettings: Stability-monitor band
    DataSettings: Data directory override
    LoggingSettings: Log directory, levels and format
    Settings: All sections

Functions:
    load_settings: Build a Settings object from every source
    get_settings: Cached Settings for the current process
    reset_settings: Drop the cached Settings
    configure_settings: Load and cache settings from explicit sources
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from pathlib    import Path
from typing     import Any, Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from pydantic   import BaseModel, ConfigDict, Field

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents import validate_model
from ..logger           import debug
from .loader            import ConfigLoader
from .utils             import env_overrides, find_config_file, merge_configs

__all__ = [
    "BUNDLED_SETTINGS",
    "SimulatorSettings",
    "CostSettings",
    "XebSettings",
    "DataSettings",
    "LoggingSettings",
    "Settings",
    "load_settings",
    "get_settings",
    "reset_settings",
    "configure_settings",
]

BUNDLED_SETTINGS = Path(__file__).resolve().parent.parent / "config" / "settings.yaml"
USER_SETTINGS    = "rcskit.yaml"


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class SimulatorSettings(_Section):
    max_qubits:             int     = Field(26, ge=1, le=40)
    checkpoint_budget_mb:   float   = Field(256.0, gt=0)
    threads:                int     = Field(1, ge=1)


class CostSettings(_Section):
    peak_flops:                     float   = Field(1.685e18, gt=0)
    efficiency:                     float   = Field(0.20, gt=0, le=1)
    machine_flops_per_complex_flop: float   = Field(8.0, gt=0)
    bytes_per_entry:                int     = Field(8, ge=1)
    batch_amortization:             float   = Field(1.0, gt=0)
    restarts:                       int     = Field(8, ge=1)
    rotation_passes:                int     = Field(4, ge=0)
    temperature:                    float   = Field(0.1, ge=0)


class XebSettings(_Section):
    stability_band: float = Field(0.25, gt=0, lt=1)


class DataSettings(_Section):
    dir: Optional[Path] = None


class LoggingSettings(_Section):
    dir:            Optional[Path]  = None
    console_level:  str             = "INFO"
    file_level:     str             = "DEBUG"
    format:         str             = "%(levelname).1s|%(asctime)s|%(message)s"


class Settings(_Section):
    simulator:  SimulatorSettings   = SimulatorSettings()
    costest:    CostSettings        = CostSettings()
    xeb:        XebSettings         = XebSettings()
    data:       DataSettings        = DataSettings()
    logging:    LoggingSettings     = LoggingSettings()


def load_settings(config_file: Optional[str | Path] = None,
                  overrides:   Optional[dict[str, Any]] = None,
                  use_environment: bool = True) -> Settings:
    """
    Assemble settings from every source.

    Args:
        config_file: Explicit user settings file; when None, `rcskit.yaml` is searched for
        overrides: Nested dictionary applied last
        use_environment: Apply RCSKIT_* environment variables

    Returns:
        Validated settings.

    Raises:
        ParseError: If any source holds an unknown key or an invalid value.
    """
    merged = ConfigLoader(BUNDLED_SETTINGS).config

    user_file = Path(config_file) if config_file is not None else find_config_file(USER_SETTINGS)
    if user_file is not None:
        merged = merge_configs(merged, ConfigLoader(user_file).config)
        debug(f"user settings merged from {user_file}")

    if use_environment:
        merged = merge_configs(merged, env_overrides())
    if overrides:
        merged = merge_configs(merged, overrides)

    return validate_model(Settings, merged, source="settings")


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Settings for this process, loaded on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reset_settings() -> None:
    """Forget cached settings so the next `get_settings()` reloads them."""
    global _settings
    _settings = None


def configure_settings(config_file: Optional[str | Path] = None,
                       overrides:   Optional[dict[str, Any]] = None) -> Settings:
    """Load settings from an explicit file and/or overrides and make them current."""
    global _settings
    _settings = load_settings(config_file, overrides)
    return _settings
