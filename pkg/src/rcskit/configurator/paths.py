"""
Data Path Management

Locates bundled data documents (topologies, subsets, profiles, the benchmark manifest).

Classes:
    DataPaths: Resolve data documents, honoring a data directory override
"""

import json
import os
from pathlib import Path
from typing import Optional

from ..common.errors    import ParseError
from .settings          import get_settings

__all__ = ["DataPaths", "PACKAGE_ROOT", "is_path_like"]

PACKAGE_ROOT = Path(__file__).resolve().parent.parent


class DataPaths:
    """
    Data document locations.

    Attributes:
        override_dir: User data directory searched before the bundled data (may be None)
        device_dir: Bundled topology/subset/profile documents
        costest_dir: Bundled benchmark manifest
    """

    def __init__(self, override_dir: Optional[str | Path] = None):
        """
        Args:
            override_dir: Data directory override; defaults to settings `data.dir`, which the
                RCSKIT_DATA_DIR environment variable feeds.
        """
        if override_dir is None:
            override_dir = get_settings().data.dir
        self.override_dir = Path(override_dir) if override_dir is not None else None
        self.device_dir   = PACKAGE_ROOT / "device"  / "data"
        self.costest_dir  = PACKAGE_ROOT / "costest" / "data"

    def device_document(self, kind: str, name: str) -> Path:
        """
        Path of a named device document, e.g. ("subset", "subset83") -> subset83.json.

        Raises:
            ParseError: If no document of that kind and name exists.
        """
        for directory in self._search(self.device_dir):
            candidate = directory / f"{name}.json"
            if candidate.is_file() and _kind_of(candidate) == kind:
                return candidate
        raise ParseError(f"no bundled {kind} named {name!r}")

    def list_device_documents(self, kind: str) -> list[str]:
        """Names of every device document of a kind, sorted."""
        names = set()
        for directory in self._search(self.device_dir):
            if directory.is_dir():
                names.update(p.stem for p in directory.glob("*.json") if _kind_of(p) == kind)
        return sorted(names)

    def benchmarks(self) -> Path:
        """Path of the benchmark manifest."""
        for directory in self._search(self.costest_dir):
            candidate = directory / "benchmarks.yaml"
            if candidate.is_file():
                return candidate
        raise ParseError("benchmark manifest benchmarks.yaml not found")

    def _search(self, bundled: Path) -> list[Path]:
        return [self.override_dir, bundled] if self.override_dir is not None else [bundled]

    def __str__(self):
        return f"DataPaths(override='{self.override_dir}', bundled='{PACKAGE_ROOT}')"


def is_path_like(value: str) -> bool:
    """True when a name should be treated as a file path rather than a bundled document name."""
    return value.endswith(".json") or os.sep in value or "/" in value


def _kind_of(path: Path) -> Optional[str]:
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    return document.get("kind") if isinstance(document, dict) else None
