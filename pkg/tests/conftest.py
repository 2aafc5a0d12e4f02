"""
Shared fixtures for the rcskit test suite.

Copyright 2025 Daniel Robert Jackson
"""

# Test Libraries
import pytest
from hypothesis import HealthCheck, settings

# Module Under Test
from rcskit.configurator.settings import reset_settings
from rcskit.device import rect_subset, resolve_profile, resolve_topology
from rcskit.logger import configure

# The settings reset below is function scoped and harmless to share between examples
settings.register_profile("rcskit", suppress_health_check=[HealthCheck.function_scoped_fixture], deadline=None)
settings.load_profile("rcskit")


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Every test starts from the bundled settings, untouched by the environment."""
    for variable in ("RCSKIT_DATA_DIR", "RCSKIT_MAX_QUBITS", "RCSKIT_THREADS", "RCSKIT_LOG_DIR"):
        monkeypatch.delenv(variable, raising=False)
    reset_settings()
    yield
    reset_settings()
    # CLI runs bind the console handler to a stream that closes with the run
    configure()


@pytest.fixture(scope="session")
def topology():
    return resolve_topology()


@pytest.fixture(scope="session")
def profile():
    return resolve_profile()


@pytest.fixture(scope="session")
def rect6(topology):
    """2 x 3 block at the lattice corner."""
    return rect_subset(topology, 0, 2, 0, 3)


@pytest.fixture(scope="session")
def rect12(topology):
    """4 x 3 block at the lattice corner."""
    return rect_subset(topology, 0, 4, 0, 3)


@pytest.fixture(scope="session")
def rect16(topology):
    """4 x 4 block at the lattice corner."""
    return rect_subset(topology, 0, 4, 0, 4)
