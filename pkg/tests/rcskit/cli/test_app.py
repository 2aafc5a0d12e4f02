"""
Unit tests for the command line application.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import json
import pytest

# External Libraries
import numpy as np
from typer.testing import CliRunner

# Module Under Test
from rcskit.circuits import load_circuit
from rcskit.cli import app, load_manifest, manifest_path
from rcskit.simulator import read_samples

# Test Constants
runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, [str(arg) for arg in args])


@pytest.fixture
def circuit(tmp_path):
    path   = tmp_path / "circuit.json"
    result = invoke("gen", "--qubits", "2x3", "--cycles", 6, "--seed", 5, "--output", path)
    assert result.exit_code == 0, result.output
    return path


@pytest.fixture
def square(tmp_path):
    path   = tmp_path / "square.json"
    result = invoke("gen", "-q", "4x4", "-m", 8, "--seed", 1, "-o", path)
    assert result.exit_code == 0, result.output
    return path


# Test Cases
def test_gen(tmp_path, circuit):
    loaded = load_circuit(circuit)
    assert loaded.n == 6
    assert loaded.cycles == 6
    assert manifest_path(circuit).is_file()
    again = tmp_path / "again.json"
    assert invoke("gen", "--qubits", "2x3", "--cycles", 6, "--seed", 5, "--output", again).exit_code == 0
    assert again.read_bytes() == circuit.read_bytes()


@pytest.mark.parametrize("args, code", [
    (["--qubits", "2x3", "--cycles", 0, "--seed", 1],                       2),
    (["--qubits", "2x3", "--cycles", 2, "--seed", 1, "--sequence", "ABCE"], 3),
    (["--qubits", "2x3", "--cycles", 2, "--seed", -1],                      3),
    (["--qubits", "no-such-subset", "--cycles", 2, "--seed", 1],            3),
])
def test_gen_errors(tmp_path, args, code):
    assert invoke("gen", *args, "--output", tmp_path / "c.json").exit_code == code


def test_patch(tmp_path, square):
    output = tmp_path / "patched.json"
    result = invoke("patch", "--circuit", square, "--patches", 4, "--output", output)
    assert result.exit_code == 0, result.output
    assert "4-patch circuit" in result.output
    assert load_circuit(output).patch.k == 4
    assert invoke("patch", "--circuit", output, "--patches", 2, "--output", tmp_path / "twice.json").exit_code == 3


def test_simulate(tmp_path, circuit, square):
    output = tmp_path / "state.npy"
    assert invoke("simulate", "--circuit", circuit, "--output", output).exit_code == 0
    assert np.load(output).shape == (64,)

    patched = tmp_path / "patched.json"
    invoke("patch", "-c", square, "-k", 4, "-o", patched)
    result = invoke("simulate", "-c", patched, "-o", tmp_path / "parts.npy")
    assert result.exit_code == 0, result.output
    assert sorted(p.name for p in tmp_path.glob("parts.p*.npy")) == [f"parts.p{k}.npy" for k in range(4)]

    assert invoke("simulate", "-c", circuit, "-o", tmp_path / "state.txt").exit_code == 2


def test_capacity_errors(tmp_path, circuit):
    config = tmp_path / "small.yaml"
    config.write_text("simulator:\n  max_qubits: 4\n")
    assert invoke("--config", config, "simulate", "-c", circuit, "-o", tmp_path / "s.npy").exit_code == 4


def test_unreadable_circuit(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert invoke("simulate", "-c", broken, "-o", tmp_path / "s.npy").exit_code == 3
    assert invoke("simulate", "-c", tmp_path / "absent.json", "-o", tmp_path / "s.npy").exit_code == 3


def test_sample_and_xeb(tmp_path, circuit):
    samples = tmp_path / "samples.txt"
    result  = invoke("sample", "-c", circuit, "--shots", 500, "--seed", 2, "-o", samples, "--noise", "mixture:0.5")
    assert result.exit_code == 0, result.output
    assert read_samples(samples).shots == 500

    estimate = tmp_path / "xeb.json"
    result   = invoke("xeb", "--samples", samples, "--output", estimate)
    assert result.exit_code == 0, result.output
    assert "linear_xeb, N=500" in result.output
    assert json.loads(estimate.read_text())["kind"] == "estimate"


def test_sampling_output_does_not_depend_on_threads(tmp_path, circuit):
    noise = "trajectory:e2=0.05,ro=0.02"
    invoke("sample", "-c", circuit, "-n", 200, "--seed", 3, "-o", tmp_path / "one.txt", "--noise", noise, "--threads", 1)
    invoke("sample", "-c", circuit, "-n", 200, "--seed", 3, "-o", tmp_path / "two.txt", "--noise", noise, "--threads", 2)
    assert (tmp_path / "one.txt").read_bytes() == (tmp_path / "two.txt").read_bytes()


@pytest.mark.parametrize("noise", ["depolarizing:0.1", "trajectory:e9=0.1"])
def test_unknown_noise(tmp_path, circuit, noise):
    assert invoke("sample", "-c", circuit, "-n", 10, "--seed", 1, "-o", tmp_path / "s.txt", "--noise", noise).exit_code == 2


def test_purity_and_predict(tmp_path, circuit):
    result = invoke("purity", "-c", circuit)
    assert result.exit_code == 0, result.output
    assert "Porter-Thomas" in result.output

    budget = tmp_path / "budget.json"
    result = invoke("predict", "-c", circuit, "--readout", "state_resolved", "-o", budget)
    assert result.exit_code == 0, result.output
    assert "total" in result.output
    assert json.loads(budget.read_text())["kind"] == "budget"


def test_monitor(tmp_path):
    series = tmp_path / "series.csv"
    series.write_text("timestamp,value\nt0,1.0\nt1,1.24\nt2,0.76\n")
    result = invoke("monitor", "--series", series, "--estimate", 1.0, "-o", tmp_path / "band.csv")
    assert result.exit_code == 0, result.output
    assert "PASS: 3 of 3" in result.output

    series.write_text("t0,1.0\nt1,1.30\n")
    assert "FAIL: 1 of 2" in invoke("monitor", "--series", series, "--estimate", 1.0).output

    estimate = tmp_path / "estimate.json"
    estimate.write_text(json.dumps({"schema_version": 1, "kind": "estimate", "value": 1.0, "stderr": 0.1,
                                    "shots": 100, "method": "linear_xeb"}))
    assert invoke("monitor", "--series", series, "--estimate-file", estimate).exit_code == 0
    assert invoke("monitor", "--series", series).exit_code == 2
    assert invoke("monitor", "--series", series, "--estimate", 1.0, "--estimate-file", estimate).exit_code == 2


def test_runtime(tmp_path):
    result = invoke("runtime", "--shots", 1_000_000)
    assert result.exit_code == 0, result.output
    assert "1000000 shots x 400 us = 400 s (6.7 min)" in result.output

    output = tmp_path / "runtime.json"
    result = invoke("runtime", "--shots", 410_000_000, "--campaign", "-o", output)
    assert result.exit_code == 0, result.output
    assert json.loads(output.read_text())["campaign"]["probe_blocks"] == 42


def test_sweep(tmp_path):
    output = tmp_path / "sweep.csv"
    result = invoke("sweep", "-q", "subset31", "-m", "12-20:4", "--seed", 1, "-o", output)
    assert result.exit_code == 0, result.output
    assert "mean F(4-patch)/F(full)" in result.output
    assert output.read_text().splitlines()[1] == "cycles,full,patch_2,patch_4,ratio_2,ratio_4"
    assert invoke("sweep", "-q", "subset31", "-m", "20-12", "--seed", 1, "-o", output).exit_code == 2


def test_cost(tmp_path, circuit):
    report = tmp_path / "cost.json"
    result = invoke("cost", "-c", circuit, "--seed", 0, "--memory", "1KiB", "--contract", "--bitstring", 3,
                    "--fidelity", 0.5, "-o", report)
    assert result.exit_code == 0, result.output
    assert "1 amplitude" in result.output
    document = json.loads(report.read_text())
    assert document["max_intermediate_bytes"] <= 1024
    assert document["bitstring"] == 3
    assert len(document["amplitude"]) == 2

    assert invoke("cost", "-c", circuit, "--seed", 0, "--memory", "100B").exit_code == 4
    assert invoke("cost", "-c", circuit, "--seed", 0, "--memory", "plenty").exit_code == 3


def test_benchmarks(tmp_path):
    output = tmp_path / "benchmarks.json"
    result = invoke("benchmarks", "-o", output)
    assert result.exit_code == 0, result.output
    assert "Zuchongzhi-83-32" in result.output
    assert len(json.loads(output.read_text())["rows"]) == 18
    assert invoke("benchmarks", "--plan-up-to", 10).exit_code == 2


def test_replay(tmp_path, circuit):
    manifest = manifest_path(circuit)
    result   = invoke("replay", manifest)
    assert result.exit_code == 0, result.output
    assert "all 1 outputs reproduced" in result.output

    tampered = load_manifest(manifest).model_dump(mode="json")
    tampered["outputs"] = {str(circuit): "0" * 64}
    edited = tmp_path / "tampered.manifest.json"
    edited.write_text(json.dumps(tampered))
    assert invoke("replay", edited).exit_code == 3


def test_replay_of_sampling(tmp_path, circuit):
    samples = tmp_path / "samples.txt"
    invoke("sample", "-c", circuit, "-n", 100, "--seed", 8, "-o", samples, "--noise", "trajectory:e2=0.02")
    result = invoke("replay", manifest_path(samples))
    assert result.exit_code == 0, result.output
