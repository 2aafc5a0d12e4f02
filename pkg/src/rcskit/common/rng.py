"""
# rng.py

## rcskit.common.rng

### Summary

Counter-based random streams. Every random number rcskit draws comes from a
`numpy.random.Philox` generator whose key is `(seed, stream tag)` and whose counter encodes the
coordinates of the draw (cycle and qubit, shot index, restart index). A stream is therefore a pure
function of its coordinates: changing generation order or worker count cannot change a result.

Counter layout (256 bits, four 64-bit words): word 0 is left for Philox to advance while drawing,
words 1..3 hold up to three coordinates.
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
from enum   import IntEnum

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
import numpy as np

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from .errors import ValidationError

__all__ = [
    "SEED_LIMIT",
    "Stream",
    "check_seed",
    "stream",
]

SEED_LIMIT = 1 << 64


class Stream(IntEnum):
    """Stream tags; one independent family of streams per purpose."""

    CIRCUIT = 1     # single-qubit gate choice, coordinates (cycle, qubit)
    SHOTS   = 2     # per-shot branch/outcome uniforms, one bulk stream
    FAULTS  = 3     # trajectory faults and readout flips, coordinates (shot,)
    ORDER   = 4     # contraction-order restarts, coordinates (restart,)


def check_seed(seed: int) -> int:
    """
    Validate a seed.

    Args:
        seed: Integer seed

    Returns:
        The seed.

    Raises:
        ValidationError: Unless 0 <= seed < 2**64.
    """
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValidationError(f"seed must be an integer, got {type(seed).__name__}")
    seed = int(seed)
    if not 0 <= seed < SEED_LIMIT:
        raise ValidationError(f"seed {seed} is outside [0, 2**64)")
    return seed


def stream(seed: int, tag: Stream, *coords: int) -> np.random.Generator:
    """
    Open the generator for one point of a counter-based stream family.

    Args:
        seed:   User seed in [0, 2**64)
        tag:    Stream family
        coords: Up to three non-negative coordinates, each below 2**64

    Returns:
        A fresh generator; equal arguments always produce identical draws.
    """
    if len(coords) > 3:
        raise ValueError("at most three stream coordinates are supported")
    key     = (int(tag) << 64) | check_seed(seed)
    counter = 0
    for word, coord in enumerate(coords, start=1):
        if not 0 <= coord < SEED_LIMIT:
            raise ValueError(f"stream coordinate {coord} out of range")
        counter |= int(coord) << (64 * word)
    return np.random.Generator(np.random.Philox(key=key, counter=counter))
