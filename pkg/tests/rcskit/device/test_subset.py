"""
Unit tests for the subset and bundled-data modules.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest

# Module Under Test
from rcskit.common.errors import ParseError, ValidationError
from rcskit.device import (
    QubitSubset,
    block_subset,
    full_subset,
    list_bundled,
    load_subset,
    pattern_layer,
    rect_subset,
    resolve_subset,
    subset_document,
    validate_subset,
    )

# Test Constants
bundled_subsets = [
    ("subset31",    31, True),
    ("subset83",    83, True),
]

invalid_subsets = [
    (QubitSubset((),            "empty"),       "empty"),
    (QubitSubset((0, 7, 0),     "twice"),       "twice"),
    (QubitSubset((0, 50),       "apart"),       "disconnected"),
    (QubitSubset((0, 105),      "off"),         "outside"),
]


# Test Cases
@pytest.mark.parametrize("name, size, approximate", bundled_subsets)
def test_bundled_subsets(topology, name, size, approximate):
    subset = resolve_subset(name, topology)
    assert subset.n == size
    assert subset.approximate is approximate
    assert len(set(subset.active)) == size


def test_bundled_listing():
    assert list_bundled("topology") == ["zcz3"]
    assert {"subset31", "subset83"} <= set(list_bundled("subset"))
    assert {"zcz3-mean", "zcz3-median", "zcz3-purity"} <= set(list_bundled("profile"))


def test_subset31_ships_patch_layouts(topology):
    subset = resolve_subset("subset31", topology)
    assert [len(region) for region in subset.bundled_patches(4)] == [9, 9, 6, 7]
    assert len(subset.bundled_patches(2)) == 2
    assert subset.bundled_patches(3) is None


@pytest.mark.parametrize("subset, message", invalid_subsets)
def test_validate_subset_rejects(topology, subset, message):
    with pytest.raises(ValidationError, match=message):
        validate_subset(topology, subset)


def test_unknown_bundled_subset(topology):
    with pytest.raises(ParseError, match="no bundled subset"):
        resolve_subset("subset999", topology)


def test_rect_subset(topology):
    subset = rect_subset(topology, 1, 2, 3, 3)
    assert subset.active == (10, 11, 12, 17, 18, 19)
    assert subset.name == "rect2x3@1,3"
    validate_subset(topology, subset)


def test_block_subset_is_breadth_first(topology):
    subset = block_subset(topology, 6)
    assert subset.active == (0, 1, 7, 8, 14, 15)
    assert subset.name == "block6@0"
    validate_subset(topology, subset)


@pytest.mark.parametrize("n", [0, 106])
def test_block_subset_size_limits(topology, n):
    with pytest.raises(ValidationError):
        block_subset(topology, n)


def test_pattern_layer_stays_inside(topology, rect6):
    inside = set(rect6.active)
    for label in "ABCD":
        for a, b in pattern_layer(topology, rect6, label):
            assert a in inside and b in inside
    assert pattern_layer(topology, rect6, "A") == ((0, 7), (1, 8), (2, 9))
    assert pattern_layer(topology, rect6, "D") == ()


def test_full_subset(topology):
    subset = full_subset(topology)
    assert subset.n == 105
    assert subset.local_index()[104] == 104


def test_subset_document_round_trip(topology):
    subset = resolve_subset("subset31", topology)
    assert load_subset(subset_document(subset, "zcz3")) == subset


def test_subset_path(tmp_path, topology):
    path = tmp_path / "mine.json"
    path.write_text('{"schema_version": 1, "kind": "subset", "name": "mine", "active": [3, 10, 4]}')
    subset = resolve_subset(str(path), topology)
    assert subset.active == (3, 10, 4)
    assert not subset.approximate
