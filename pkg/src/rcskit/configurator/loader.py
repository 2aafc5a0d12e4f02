"""
Configuration Loader

Classes:
    ConfigLoader: One YAML settings file as a mapping
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from pathlib    import Path
from typing     import Any

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import yaml

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.errors    import ParseError
from ..logger           import debug

__all__ = ["DEFAULT_FILE_NAME", "ConfigLoader"]

DEFAULT_FILE_NAME = "rcskit.yaml"


class ConfigLoader:
    """
    A YAML settings file read into a nested dictionary.

    Attributes:
        config_path: File that was read
        config: Its contents; an empty file gives an empty mapping
    """

    def __init__(self, config_path: str | Path, config_file: str = DEFAULT_FILE_NAME):
        """
        Args:
            config_path: Settings file, or a directory holding `config_file`
            config_file: File name looked up inside a directory

        Raises:
            ParseError: If the file is missing, not valid YAML or not a mapping at the top level.
        """
        path = Path(config_path)
        self.config_path: Path = path / config_file if path.is_dir() else path
        if not self.config_path.is_file():
            raise ParseError(f"configuration file not found: {self.config_path}")
        self.config: dict[str, Any] = self._read()
        debug(f"settings read from {self.config_path}")

    def _read(self) -> dict[str, Any]:
        try:
            loaded = yaml.safe_load(self.config_path.read_text(encoding="utf-8"))
        except yaml.YAMLError as e:
            raise ParseError(f"{self.config_path}: invalid YAML: {e}")
        if loaded is None:
            return {}
        if not isinstance(loaded, dict):
            raise ParseError(f"{self.config_path}: top level must be a mapping, got {type(loaded).__name__}")
        return loaded
