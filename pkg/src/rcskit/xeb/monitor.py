"""
Stability Monitor

Checks a time series of probe-circuit fidelities against a relative band around an estimate, and
reads and writes the CSV files that carry the series.

    series:  timestamp,value
    band:    timestamp,value,lower,upper,verdict

Timestamps are opaque labels; `probe_schedule` produces ISO 8601 ones.

Classes:
    StabilityPoint: One checked point
    StabilityReport: Band, per-point verdicts and the overall verdict

Functions:
    stability_check: Check a series against estimate * (1 +/- band)
    probe_schedule: Evenly spaced probe timestamps
    read_series_csv: Read (timestamp, value) rows
    write_series_csv: Write (timestamp, value) rows
    write_band_csv: Write a checked series
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import csv
from datetime   import datetime, timedelta
from pathlib    import Path
from typing     import Iterable, Optional, Sequence

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import frozen

# -----------------------------------------------------------------------------
# Local Libraries
# -----------------------------------------------------------------------------
from ..common.documents         import csv_preamble
from ..common.errors            import ParseError, ValidationError
from ..common.intervals         import BAND, POSITIVE, require_in
from ..configurator.settings    import get_settings
from ..logger                   import debug, info

__all__ = [
    "PROBE_SPACING_HOURS",
    "StabilityPoint",
    "StabilityReport",
    "stability_check",
    "probe_schedule",
    "read_series_csv",
    "write_series_csv",
    "write_band_csv",
]

PROBE_SPACING_HOURS = 2.4

_SERIES_HEADER  = ["timestamp", "value"]
_BAND_HEADER    = ["timestamp", "value", "lower", "upper", "verdict"]


@frozen
class StabilityPoint:
    timestamp:  str
    value:      float
    passed:     bool


@frozen
class StabilityReport:
    """
    Attributes:
        estimate: Reference fidelity
        band: Relative half-width of the acceptance band
        points: Checked series, in input order
    """

    estimate:   float
    band:       float
    points:     tuple[StabilityPoint, ...]

    @property
    def lower(self) -> float:
        return self.estimate * (1.0 - self.band)

    @property
    def upper(self) -> float:
        return self.estimate * (1.0 + self.band)

    @property
    def passed(self) -> bool:
        return all(point.passed for point in self.points)

    @property
    def failures(self) -> list[StabilityPoint]:
        return [point for point in self.points if not point.passed]


def _labelled(series: Iterable[tuple[str, float] | float]) -> list[tuple[str, float]]:
    rows = []
    for index, entry in enumerate(series):
        if isinstance(entry, tuple):
            rows.append((str(entry[0]), float(entry[1])))
        else:
            rows.append((str(index), float(entry)))
    return rows


def stability_check(series:     Sequence[tuple[str, float] | float],
                    estimate:   float,
                    band:       Optional[float] = None) -> StabilityReport:
    """
    Check every point against [estimate * (1 - band), estimate * (1 + band)].

    Args:
        series: (timestamp, value) pairs, or bare values labelled by position
        estimate: Reference fidelity, > 0
        band: Relative band in (0, 1); settings value (0.25) when None

    Raises:
        ValidationError: Empty series, nonpositive estimate or band outside (0, 1).
    """
    band     = get_settings().xeb.stability_band if band is None else band
    band     = require_in("band", band, BAND)
    estimate = require_in("estimate", estimate, POSITIVE)
    rows     = _labelled(series)
    if not rows:
        raise ValidationError("stability check needs at least one point")

    lower, upper = estimate * (1.0 - band), estimate * (1.0 + band)
    points = tuple(StabilityPoint(stamp, value, lower <= value <= upper) for stamp, value in rows)
    report = StabilityReport(estimate, band, points)
    info(f"stability: {len(points) - len(report.failures)}/{len(points)} points within "
         f"[{lower:.4g}, {upper:.4g}] -> {'pass' if report.passed else 'fail'}")
    return report


def probe_schedule(start: datetime, count: int, spacing_hours: float = PROBE_SPACING_HOURS) -> list[datetime]:
    """`count` probe times starting at `start`, `spacing_hours` apart."""
    if count < 1:
        raise ValidationError(f"probe count must be at least 1, got {count}")
    require_in("spacing_hours", spacing_hours, POSITIVE)
    step = timedelta(hours=spacing_hours)
    return [start + k * step for k in range(count)]


# -----------------------------------------------------------------------------
# CSV
# -----------------------------------------------------------------------------
def read_series_csv(path: str | Path) -> list[tuple[str, float]]:
    """
    Read a `timestamp,value` file; a header row and `#` comment lines are optional.

    Raises:
        ParseError: Naming the line of a malformed row.
    """
    path = Path(path)
    try:
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
    except FileNotFoundError:
        raise ParseError(f"file not found: {path}")

    series = []
    for number, row in enumerate(rows, start=1):
        if not row or row[0].lstrip().startswith("#") or [cell.strip().lower() for cell in row] == _SERIES_HEADER:
            continue
        if len(row) != 2:
            raise ParseError(f"{path}: expected timestamp,value", location=f"line {number}")
        try:
            series.append((row[0].strip(), float(row[1])))
        except ValueError:
            raise ParseError(f"{path}: value {row[1]!r} is not a number", location=f"line {number}")
    debug(f"read {len(series)} series points from {path}")
    return series


def _write_rows(path: str | Path, header: list[str], rows: Iterable[list[str]], manifest_digest: Optional[str]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(csv_preamble(manifest_digest))
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def write_series_csv(path:              str | Path,
                     series:            Sequence[tuple[str | datetime, float]],
                     manifest_digest:   Optional[str] = None) -> Path:
    rows = []
    for stamp, value in series:
        label = stamp.isoformat() if isinstance(stamp, datetime) else str(stamp)
        rows.append([label, repr(float(value))])
    return _write_rows(path, _SERIES_HEADER, rows, manifest_digest)


def write_band_csv(path: str | Path, report: StabilityReport, manifest_digest: Optional[str] = None) -> Path:
    lower, upper = repr(report.lower), repr(report.upper)
    rows = ([p.timestamp, repr(p.value), lower, upper, "pass" if p.passed else "fail"] for p in report.points)
    return _write_rows(path, _BAND_HEADER, rows, manifest_digest)
