"""
Unit tests for the documents module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest

# Module Under Test
from rcskit.common.documents import (
    csv_preamble,
    dumps_canonical,
    read_document,
    sha256_bytes,
    sha256_file,
    write_document,
    )
from rcskit.common.errors import ParseError


# Test Cases
def test_canonical_text_sorts_keys():
    assert dumps_canonical({"b": 1, "a": [1.5, None]}) == '{"a":[1.5,null],"b":1}\n'


def test_canonical_text_rejects_nan():
    with pytest.raises(ValueError):
        dumps_canonical({"x": float("nan")})


def test_equal_documents_write_identical_bytes(tmp_path):
    first  = write_document(tmp_path / "a.json", {"schema_version": 1, "kind": "x", "v": 1, "w": 2})
    second = write_document(tmp_path / "sub" / "b.json", {"w": 2, "v": 1, "kind": "x", "schema_version": 1})
    assert first.read_bytes() == second.read_bytes()
    assert sha256_file(first) == sha256_bytes(first.read_bytes())


def test_read_document_round_trip(tmp_path):
    path = write_document(tmp_path / "doc.json", {"schema_version": 1, "kind": "estimate", "value": 0.5})
    assert read_document(path, "estimate")["value"] == 0.5


@pytest.mark.parametrize("text, location", [
    ('{"schema_version": 2, "kind": "estimate"}',   "schema_version"),
    ('{"schema_version": 1, "kind": "samples"}',    "kind"),
])
def test_read_document_checks_header(tmp_path, text, location):
    path = tmp_path / "doc.json"
    path.write_text(text)
    with pytest.raises(ParseError) as caught:
        read_document(path, "estimate")
    assert caught.value.location == location


@pytest.mark.parametrize("text", ["{not json", "[1, 2]"])
def test_read_document_rejects_malformed(tmp_path, text):
    path = tmp_path / "doc.json"
    path.write_text(text)
    with pytest.raises(ParseError):
        read_document(path)


def test_read_document_missing_file(tmp_path):
    with pytest.raises(ParseError, match="file not found"):
        read_document(tmp_path / "absent.json")


def test_csv_preamble():
    assert csv_preamble(None) == ""
    assert csv_preamble("ab12") == "# schema_version=1 manifest_digest=ab12\n"
