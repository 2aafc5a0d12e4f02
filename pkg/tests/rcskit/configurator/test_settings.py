"""
Unit tests for the settings module.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest
from pathlib import Path

# Module Under Test
from rcskit.common.errors import ParseError
from rcskit.configurator import ConfigLoader, DataPaths
from rcskit.configurator.settings import configure_settings, get_settings, load_settings, reset_settings
from rcskit.configurator.utils import env_overrides, find_config_file, merge_configs

# Test Constants
bundled_values = [
    ("simulator",   "max_qubits",                       26),
    ("simulator",   "checkpoint_budget_mb",             256.0),
    ("costest",     "peak_flops",                       1.685e18),
    ("costest",     "efficiency",                       0.20),
    ("costest",     "machine_flops_per_complex_flop",   8.0),
    ("costest",     "bytes_per_entry",                  8),
    ("xeb",         "stability_band",                   0.25),
]


# Test Cases
@pytest.mark.parametrize("section, key, value", bundled_values)
def test_bundled_defaults(section, key, value):
    settings = load_settings(use_environment=False)
    assert getattr(getattr(settings, section), key) == value


def test_user_file_overrides_bundled(tmp_path):
    user = tmp_path / "rcskit.yaml"
    user.write_text("simulator:\n  max_qubits: 12\nxeb:\n  stability_band: 0.1\n")
    settings = load_settings(user, use_environment=False)
    assert settings.simulator.max_qubits == 12
    assert settings.xeb.stability_band == 0.1
    assert settings.costest.efficiency == 0.20


def test_environment_then_overrides(monkeypatch):
    monkeypatch.setenv("RCSKIT_MAX_QUBITS", "20")
    monkeypatch.setenv("RCSKIT_THREADS", "3")
    assert load_settings().simulator.max_qubits == 20
    settings = load_settings(overrides={"simulator": {"max_qubits": 18}})
    assert settings.simulator.max_qubits == 18
    assert settings.simulator.threads == 3


@pytest.mark.parametrize("text", [
    "simulator:\n  max_qubit: 12\n",
    "xeb:\n  stability_band: 1.5\n",
    "costest:\n  efficiency: 0\n",
])
def test_invalid_user_settings(tmp_path, text):
    user = tmp_path / "rcskit.yaml"
    user.write_text(text)
    with pytest.raises(ParseError):
        load_settings(user, use_environment=False)


def test_invalid_yaml(tmp_path):
    user = tmp_path / "rcskit.yaml"
    user.write_text("simulator: [unclosed\n")
    with pytest.raises(ParseError, match="invalid YAML"):
        load_settings(user)


def test_example_settings_file_is_valid():
    example  = Path(__file__).parents[3] / "config" / "rcskit.example.yaml"
    settings = load_settings(example, use_environment=False)
    assert settings.simulator.max_qubits == 28
    assert settings.costest.machine_flops_per_complex_flop == 8.0


def test_missing_user_file(tmp_path):
    with pytest.raises(ParseError, match="not found"):
        load_settings(tmp_path / "absent.yaml")


def test_cached_settings_and_reset():
    configured = configure_settings(overrides={"simulator": {"max_qubits": 10}})
    assert get_settings() is configured
    reset_settings()
    assert get_settings().simulator.max_qubits == 26


def test_env_overrides_nesting():
    overrides = env_overrides({"RCSKIT_DATA_DIR": "/data", "RCSKIT_THREADS": "", "OTHER": "1"})
    assert overrides == {"data": {"dir": "/data"}}


def test_merge_configs_is_recursive():
    merged = merge_configs({"a": {"b": 1, "c": 2}, "d": 3}, {"a": {"c": 4}})
    assert merged == {"a": {"b": 1, "c": 4}, "d": 3}


def test_data_directory_override(tmp_path, topology):
    (tmp_path / "tiny.json").write_text(
        '{"schema_version": 1, "kind": "topology", "name": "tiny", "rows": 2, "cols": 2}'
    )
    paths = DataPaths(tmp_path)
    assert "tiny" in paths.list_device_documents("topology")
    assert "zcz3" in paths.list_device_documents("topology")
    assert paths.device_document("topology", "tiny") == tmp_path / "tiny.json"
    with pytest.raises(ParseError):
        paths.device_document("profile", "tiny")


def test_find_config_file(tmp_path):
    assert find_config_file("rcskit-absent.yaml", [tmp_path]) is None
    (tmp_path / "custom.yaml").write_text("xeb:\n  stability_band: 0.3\n")
    assert find_config_file("custom.yaml", [tmp_path]) == tmp_path / "custom.yaml"


def test_loader_reads_a_directory(tmp_path):
    (tmp_path / "rcskit.yaml").write_text("")
    loader = ConfigLoader(tmp_path)
    assert loader.config_path == tmp_path / "rcskit.yaml"
    assert loader.config == {}
    (tmp_path / "list.yaml").write_text("- 1\n- 2\n")
    with pytest.raises(ParseError, match="mapping"):
        ConfigLoader(tmp_path, "list.yaml")
