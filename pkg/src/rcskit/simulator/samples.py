"""
Sample Files

A JSON header line with the metadata, then one record per shot: the bitstring as lowercase hex
padded to ceil(n/4) digits and, when attached, its ideal probability.

    {"circuit_id":"...","kind":"samples","n":14,...}
    3f1a,8.127e-05
    0b22,3.3402e-05

Functions:
    write_samples: Write a SampleSet
    read_samples: Read a SampleSet
"""

import json
from pathlib import Path
from typing import Optional

import numpy as np
import regex

from ..common.documents import SCHEMA_VERSION, dumps_canonical
from ..common.errors    import ParseError
from ..logger           import debug
from .sampling          import SampleSet, bit_dtype

__all__ = ["write_samples", "read_samples"]

_RECORD = regex.compile(r"(?P<bits>[0-9a-f]+)(?:,(?P<prob>[-+0-9.eE]+|nan|inf))?")


def write_samples(path: str | Path, samples: SampleSet, manifest_digest: Optional[str] = None) -> Path:
    path  = Path(path)
    width = max(1, -(-samples.n // 4))
    header = {
        "schema_version":     SCHEMA_VERSION,
        "kind":               "samples",
        "n":                  samples.n,
        "has_probabilities":  samples.probabilities is not None,
        **samples.metadata,
    }
    if manifest_digest is not None:
        header["manifest_digest"] = manifest_digest

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps_canonical(header))
        if samples.probabilities is None:
            for x in samples.bitstrings:
                f.write(f"{int(x):0{width}x}\n")
        else:
            for x, p in zip(samples.bitstrings, samples.probabilities):
                f.write(f"{int(x):0{width}x},{float(p)!r}\n")
    debug(f"wrote {samples.shots} samples to {path}")
    return path


def read_samples(path: str | Path) -> SampleSet:
    """
    Raises:
        ParseError: Naming the line of a malformed header or record.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise ParseError(f"file not found: {path}")
    if not lines:
        raise ParseError(f"{path}: empty sample file")

    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: header is not JSON: {e.msg}", location="line 1")
    if not isinstance(header, dict) or header.get("kind") != "samples" or header.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"{path}: not a version {SCHEMA_VERSION} sample file", location="line 1")
    n = header.get("n")
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"{path}: header field n must be a positive integer", location="line 1")

    dtype   = bit_dtype(n)
    limit   = 1 << n
    values: list[int]   = []
    probs:  list[float] = []
    with_p  = bool(header.get("has_probabilities", False))
    for number, line in enumerate(lines[1:], start=2):
        match = _RECORD.fullmatch(line.strip())
        if match is None or (match["prob"] is None) == with_p:
            raise ParseError(f"{path}: malformed record {line!r}", location=f"line {number}")
        x = int(match["bits"], 16)
        if x >= limit:
            raise ParseError(f"{path}: bitstring {match['bits']} has more than {n} bits", location=f"line {number}")
        values.append(x)
        if with_p:
            p = float(match["prob"])
            if not 0.0 <= p <= 1.0:
                raise ParseError(f"{path}: probability {p} outside [0, 1]", location=f"line {number}")
            probs.append(p)

    metadata = {k: v for k, v in header.items() if k not in ("schema_version", "kind", "n", "has_probabilities")}
    return SampleSet(
        n,
        np.array(values, dtype=dtype),
        np.array(probs, dtype=np.float64) if with_p else None,
        metadata,
    )
