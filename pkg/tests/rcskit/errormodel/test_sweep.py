"""
Unit tests for the sweep module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest

# Module Under Test
from rcskit.common.errors import ValidationError
from rcskit.device import resolve_subset
from rcskit.errormodel import SweepRow, fidelity_sweep, mean_ratio, write_sweep_csv


@pytest.fixture(scope="module")
def subset31(topology):
    return resolve_subset("subset31", topology)


@pytest.fixture(scope="module")
def rows(topology, profile, subset31):
    return fidelity_sweep(topology, subset31, profile, range(12, 37, 4), seed=1, k_values=(2, 4))


# Test Cases
def test_sweep_rows(rows):
    assert [row.cycles for row in rows] == [12, 16, 20, 24, 28, 32, 36]
    for row in rows:
        assert set(row.patched) == {2, 4}
        assert row.ratio(4) >= 1.0
        assert row.ratio(2) >= 1.0
    assert rows[-1].full < rows[0].full


def test_four_patch_ratio_stays_close_to_one(rows):
    assert 1.0 <= mean_ratio(rows, 4) <= 1.2


def test_mean_ratio():
    rows = [SweepRow(1, 0.5, {2: 0.6}), SweepRow(2, 0.25, {2: 0.35})]
    assert mean_ratio(rows, 2) == pytest.approx((1.2 + 1.4) / 2)


def test_sweep_needs_cycles(topology, profile, subset31):
    with pytest.raises(ValidationError):
        fidelity_sweep(topology, subset31, profile, [], seed=1)


def test_sweep_csv(tmp_path, rows):
    lines = write_sweep_csv(tmp_path / "sweep.csv", rows, "d1g3st").read_text().splitlines()
    assert lines[0] == "# schema_version=1 manifest_digest=d1g3st"
    assert lines[1] == "cycles,full,patch_2,patch_4,ratio_2,ratio_4"
    assert len(lines) == 2 + len(rows)
    assert lines[2].startswith("12,")
