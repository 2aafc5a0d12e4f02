"""
Fidelity Sweep

Predicted full and k-patch fidelities over a range of cycle counts, and their ratios.

Classes:
    SweepRow: One cycle count

Functions:
    fidelity_sweep: Predict every cycle count
    mean_ratio: Mean patch/full ratio over a sweep
    write_sweep_csv: cycles,full,patch_k...,ratio_k...
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import csv
import math
from pathlib    import Path
from typing     import Optional, Sequence

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import frozen

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..circuits.circuit     import DEFAULT_SEQUENCE
from ..circuits.generator   import generate
from ..circuits.patch       import apply_patch, patch_spec
from ..common.documents     import csv_preamble
from ..common.errors        import ValidationError
from ..device.profile       import DeviceProfile
from ..device.subset        import QubitSubset
from ..device.topology      import DeviceTopology
from ..logger               import info
from .predict               import Readout, predict_fidelity

__all__ = [
    "SweepRow",
    "fidelity_sweep",
    "mean_ratio",
    "write_sweep_csv",
]


@frozen
class SweepRow:
    """
    Attributes:
        cycles: Cycle count m
        full: Predicted fidelity of the full circuit
        patched: k -> predicted fidelity of the k-patch circuit
    """

    cycles:     int
    full:       float
    patched:    dict[int, float]

    def ratio(self, k: int) -> float:
        return self.patched[k] / self.full


def fidelity_sweep(topology:    DeviceTopology,
                   subset:      QubitSubset,
                   profile:     DeviceProfile,
                   cycles:      Sequence[int],
                   seed:        int,
                   k_values:    Sequence[int] = (2, 4),
                   sequence:    str = DEFAULT_SEQUENCE,
                   readout:     Readout = "average") -> list[SweepRow]:
    """
    Generate one circuit per cycle count (same seed) and predict it whole and cut into k patches.

    Raises:
        ValidationError: Empty cycle list or an unsupported k.
    """
    if not cycles:
        raise ValidationError("sweep needs at least one cycle count")
    specs = {k: patch_spec(topology, subset, k) for k in k_values}

    rows = []
    for m in cycles:
        circuit  = generate(topology, subset, m, seed, profile, sequence)
        full, _  = predict_fidelity(circuit, profile, readout)
        patched  = {k: predict_fidelity(apply_patch(circuit, spec, topology), profile, readout)[0].value
                    for k, spec in specs.items()}
        rows.append(SweepRow(m, full.value, patched))
    info(f"swept {len(rows)} cycle counts on {subset.n} qubits with k = {list(k_values)}")
    return rows


def mean_ratio(rows: Sequence[SweepRow], k: int) -> float:
    return math.fsum(row.ratio(k) for row in rows) / len(rows)


def write_sweep_csv(path: str | Path, rows: Sequence[SweepRow], manifest_digest: Optional[str] = None) -> Path:
    ks     = sorted(rows[0].patched) if rows else []
    header = ["cycles", "full"] + [f"patch_{k}" for k in ks] + [f"ratio_{k}" for k in ks]
    path   = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(csv_preamble(manifest_digest))
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([row.cycles, repr(row.full)]
                            + [repr(row.patched[k]) for k in ks]
                            + [repr(row.ratio(k)) for k in ks])
    return path
