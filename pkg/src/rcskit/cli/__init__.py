"""
Command Line Module

The `rcskit` command and its run manifests.

Classes:
    RunManifest: What produced an output file
    Run: Manifest under construction

Functions:
    main: Entry point of the `rcskit` script
    load_manifest: Read a manifest document
"""

from .manifest  import RunManifest, Run, ReplayCheck, command_line, manifest_path, load_manifest, check_outputs
from .app       import app, main

__all__ = [
    "RunManifest", "Run", "ReplayCheck", "command_line", "manifest_path", "load_manifest", "check_outputs",
    "app", "main",
]
