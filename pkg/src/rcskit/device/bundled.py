"""
Bundled Device Documents

Look up topologies, subsets and profiles by name (bundled or in the data directory override)
or by file path.

Functions:
    list_bundled: Names of the available documents of a kind
    resolve_topology: Topology by name or path
    resolve_subset: Subset by name or path, validated against a topology
    resolve_profile: Profile by name or path
"""

from pathlib import Path
from typing import Optional

from ..common.documents     import read_document
from ..configurator.paths   import DataPaths, is_path_like
from ..logger               import debug
from .profile               import DeviceProfile, load_profile
from .subset                import QubitSubset, load_subset, validate_subset
from .topology              import DeviceTopology, load_topology

__all__ = [
    "DEFAULT_TOPOLOGY",
    "DEFAULT_PROFILE",
    "list_bundled",
    "resolve_topology",
    "resolve_subset",
    "resolve_profile",
]

DEFAULT_TOPOLOGY = "zcz3"
DEFAULT_PROFILE  = "zcz3-mean"


def _locate(kind: str, name_or_path: str | Path, paths: Optional[DataPaths]) -> Path:
    if isinstance(name_or_path, Path) or is_path_like(str(name_or_path)):
        return Path(name_or_path)
    return (paths or DataPaths()).device_document(kind, str(name_or_path))


def list_bundled(kind: str, paths: Optional[DataPaths] = None) -> list[str]:
    """Names of every available `topology`, `subset` or `profile` document."""
    return (paths or DataPaths()).list_device_documents(kind)


def resolve_topology(name_or_path: str | Path = DEFAULT_TOPOLOGY, paths: Optional[DataPaths] = None) -> DeviceTopology:
    path = _locate("topology", name_or_path, paths)
    debug(f"loading topology from {path}")
    return load_topology(read_document(path, "topology"), str(path))


def resolve_subset(name_or_path: str | Path, topology: DeviceTopology, paths: Optional[DataPaths] = None) -> QubitSubset:
    path   = _locate("subset", name_or_path, paths)
    subset = load_subset(read_document(path, "subset"), str(path))
    validate_subset(topology, subset)
    return subset


def resolve_profile(name_or_path: str | Path = DEFAULT_PROFILE, paths: Optional[DataPaths] = None) -> DeviceProfile:
    path = _locate("profile", name_or_path, paths)
    return load_profile(read_document(path, "profile"), str(path))
