"""
Unit tests for the benchmarks module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest

# Module Under Test
from rcskit.common.errors import ParseError
from rcskit.costest import (
    Benchmark,
    ReferenceCell,
    benchmark_document,
    benchmark_report,
    benchmark_table,
    load_benchmarks,
    parse_runtime,
    )

# Test Constants
runtimes = [
    ("1.6 s",       1.6),
    ("384.0 s",     384.0),
    ("2 min",       120.0),
    ("1.5h",        5400.0),
    ("1.1 yr",      1.1 * 365 * 86400),
    ("6.4e+9 yr",   6.4e9 * 365 * 86400),
]

MANIFEST = """\
schema_version: 1
kind: benchmarks
experiments:
  - name: Toy-6-4
    qubits: 6
    cycles: 4
    fidelity: 0.5
    summary:
      - {memory_pb: 1.0, amplitude_flops: 1.0e+3, samples_flops: 2.0e+3, runtime: "1 s"}
    extended:
      - {memory_pb: 1.0, amplitude_flops: 1.0e+3, samples_flops: 3.0e+3}
"""


@pytest.fixture(scope="module")
def bundled():
    return load_benchmarks()


@pytest.fixture(scope="module")
def rows(bundled):
    return benchmark_report(bundled)


@pytest.fixture
def toy():
    cell = ReferenceCell(1e-9, 1.0e3, 2.0e3, "1 s")
    return Benchmark("Toy-6-4", 6, 4, 0.5, [cell], [])


# Test Cases
@pytest.mark.parametrize("text, seconds", runtimes)
def test_parse_runtime(text, seconds):
    assert parse_runtime(text) == pytest.approx(seconds)


@pytest.mark.parametrize("text", ["", "fast", "1.6", "3 weeks"])
def test_parse_runtime_rejects(text):
    with pytest.raises(ParseError):
        parse_runtime(text)


def test_bundled_experiments(bundled):
    assert [b.qubits for b in bundled] == [53, 56, 60, 70, 67, 83]
    assert all(b.constraints() == [9.2, 46.2, 762.2] for b in bundled)
    assert all(b.discrepancies() == [] for b in bundled)
    assert bundled[0].cell(9.2).runtime == "1.6 s"
    assert bundled[0].cell(46.2).runtime is None
    with pytest.raises(KeyError):
        bundled[0].cell(1.0)


def test_converted_runtimes_match_printed(rows):
    printed = [row for row in rows if row.relative_gap is not None]
    assert len(printed) == 12
    for row in printed:
        assert abs(row.relative_gap) < 0.05, f"{row.benchmark.name} at {row.memory_pb} PB"
    assert all(row.proxy is None for row in rows)


def test_discrepancies_are_reported(tmp_path):
    path = tmp_path / "toy.yaml"
    path.write_text(MANIFEST)
    (toy,) = load_benchmarks(path)
    assert len(toy.discrepancies()) == 1
    assert "samples_flops" in toy.discrepancies()[0]


@pytest.mark.parametrize("text", [
    "kind: benchmarks\n",
    "schema_version: 1\nkind: benchmarks\nexperiments: [{name: x, qubits: 0, cycles: 1, fidelity: 0.1}]\n",
    "schema_version: 1\nkind: benchmarks\nexperiments:\n  - {name: x, qubits: 5, cycles: 1, fidelity: 0.1, "
    "summary: [{memory_pb: 1, amplitude_flops: 1, samples_flops: 1, runtime: soon}]}\n",
    "schema_version: 1\nkind: [\n",
])
def test_invalid_manifests(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ParseError):
        load_benchmarks(path)


def test_missing_manifest(tmp_path):
    with pytest.raises(ParseError):
        load_benchmarks(tmp_path / "absent.yaml")


def test_proxy_plans(toy):
    (row,) = benchmark_report([toy], plan_up_to=6, seed=3, restarts=2)
    assert row.proxy is not None
    assert row.proxy.fidelity == 0.5
    assert row.proxy.max_intermediate_bytes <= 1e6
    (skipped,) = benchmark_report([toy], plan_up_to=5)
    assert skipped.proxy is None


def test_table_and_document(rows, toy):
    lines = benchmark_table(rows).splitlines()
    assert len(lines) == len(rows) + 1
    assert lines[0].split()[0] == "experiment"
    assert "Sycamore-53-20" in lines[1]

    proxied  = benchmark_report([toy], plan_up_to=6, seed=3, restarts=2)
    document = benchmark_document(proxied, seed=3)
    assert document["kind"] == "benchmark_report"
    assert document["rows"][0]["proxy"]["label"] == "proxy estimate"
    assert document["rows"][0]["reference"]["runtime"] == "1 s"
