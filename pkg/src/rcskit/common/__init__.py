"""
Common Module

Errors, numeric ranges, random streams and document helpers shared by every rcskit module.

Modules:
    errors: Exception hierarchy with exit codes
    intervals: Interval constants and range checks
    rng: Counter-based random streams
    documents: Canonical JSON documents and digests
"""

from .errors    import (RcsKitError, UsageError, ParseError, ValidationError, MissingRateError,
                        CapacityError, InfeasibleError, parse_error_from_pydantic)
from .intervals import RATE, FIDELITY, BAND, EFFICIENCY, POSITIVE, format_interval, require_in
from .rng       import SEED_LIMIT, Stream, check_seed, stream
from .documents import (SCHEMA_VERSION, dumps_canonical, write_document, read_document, validate_model,
                        sha256_bytes, sha256_file, csv_preamble)

__all__ = [
    "RcsKitError", "UsageError", "ParseError", "ValidationError", "MissingRateError",
    "CapacityError", "InfeasibleError", "parse_error_from_pydantic",
    "RATE", "FIDELITY", "BAND", "EFFICIENCY", "POSITIVE", "format_interval", "require_in",
    "SEED_LIMIT", "Stream", "check_seed", "stream",
    "SCHEMA_VERSION", "dumps_canonical", "write_document", "read_document", "validate_model",
    "sha256_bytes", "sha256_file", "csv_preamble",
]
