"""
Document Utilities

Canonical JSON reading/writing and digests for every rcskit file format.

Every document is a JSON object with a `schema_version` and a `kind`. Writing is canonical
(sorted keys, compact separators, trailing newline) so equal values give byte-identical files.

Functions:
    dumps_canonical: Serialize a JSON-compatible value canonically
    write_document: Write a document to disk canonically
    read_document: Read a JSON document and check its kind and schema version
    validate_model: Validate a payload against a pydantic model, raising ParseError
    sha256_bytes: Hex digest of a byte string
    sha256_file: Hex digest of a file
    csv_preamble: Provenance comment line for CSV outputs
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import hashlib
import json
from pathlib    import Path
from typing     import Any, TypeVar

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import pydantic

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from .errors    import ParseError, parse_error_from_pydantic
from ..logger   import debug

__all__ = [
    "SCHEMA_VERSION",
    "dumps_canonical",
    "write_document",
    "read_document",
    "validate_model",
    "sha256_bytes",
    "sha256_file",
    "csv_preamble",
]

SCHEMA_VERSION = 1

_Model = TypeVar("_Model", bound=pydantic.BaseModel)


def dumps_canonical(value: Any) -> str:
    """Serialize to canonical JSON text, with a trailing newline."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False) + "\n"


def write_document(path: str | Path, document: dict[str, Any]) -> Path:
    """
    Write a document canonically.

    Args:
        path:     Output path (parent directories are created)
        document: JSON-compatible mapping including `schema_version` and `kind`

    Returns:
        The path written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_canonical(document), encoding="utf-8")
    debug(f"wrote {document.get('kind', 'document')} to {path}")
    return path


def read_document(path: str | Path, kind: str | None = None) -> dict[str, Any]:
    """
    Read a JSON document.

    Args:
        path: File to read
        kind: Expected `kind` field, or None to accept any

    Returns:
        The parsed mapping.

    Raises:
        ParseError: On invalid JSON, a wrong kind, or an unknown schema version.
    """
    path = Path(path)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ParseError(f"file not found: {path}")
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")

    if not isinstance(document, dict):
        raise ParseError(f"{path}: top level must be an object")
    version = document.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ParseError(f"{path}: unsupported schema_version {version!r}", location="schema_version")
    if kind is not None and document.get("kind") != kind:
        raise ParseError(f"{path}: expected kind {kind!r}, found {document.get('kind')!r}", location="kind")
    return document


def validate_model(model: type[_Model], payload: Any, source: str | None = None) -> _Model:
    """
    Validate a payload against a pydantic model.

    Raises:
        ParseError: With every failing field path.
    """
    try:
        return model.model_validate(payload)
    except pydantic.ValidationError as e:
        raise parse_error_from_pydantic(e, source)


def sha256_bytes(data: bytes) -> str:
    """Hex SHA-256 of a byte string."""
    return hashlib.sha256(data).hexdigest()


def sha256_file(path: str | Path) -> str:
    """Hex SHA-256 of a file's contents."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 20), b""):
            digest.update(block)
    return digest.hexdigest()


def csv_preamble(manifest_digest: str | None) -> str:
    """
    Comment line that opens a CSV output written by a command; empty when there is no manifest.

    CSV readers in rcskit skip lines starting with `#`.
    """
    if manifest_digest is None:
        return ""
    return f"# schema_version={SCHEMA_VERSION} manifest_digest={manifest_digest}\n"
