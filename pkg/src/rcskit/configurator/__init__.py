"""
Configurator Module

Loading, merging and validating rcskit settings, and locating data documents.

Classes:
    ConfigLoader: Load YAML configuration files
    Settings: Validated settings model
    DataPaths: Data document locations

Functions:
    merge_configs: Merge two configuration dictionaries
    find_config_file: Find a configuration file in common locations
    env_overrides: Overrides from RCSKIT_* environment variables
    load_settings: Build settings from every source
    get_settings: Cached settings
    reset_settings: Clear cached settings
    configure_settings: Load and cache settings from explicit sources
"""

from .loader    import ConfigLoader
from .utils     import merge_configs, find_config_file, env_overrides
from .settings  import Settings, load_settings, get_settings, reset_settings, configure_settings
from .paths     import DataPaths, is_path_like

__all__ = [
    "ConfigLoader",
    "merge_configs",
    "find_config_file",
    "env_overrides",
    "Settings",
    "load_settings",
    "get_settings",
    "reset_settings",
    "configure_settings",
    "DataPaths",
    "is_path_like",
]
