"""Pytest configuration and shared fixtures."""

from typing import Any

import networkx as nx
import pytest

from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.groups.constructors import make_cyclic, make_dicyclic, make_dihedral
from src.powergraph_spectra.powergraph.builders import power_graph, star_graph

# ===== Pytest Markers =====


def pytest_configure(config: Any) -> None:
    """Register custom pytest markers."""
    config.addinivalue_line("markers", "unit: Unit tests (fast, no external dependencies)")
    config.addinivalue_line("markers", "integration: Integration tests (drive the CLI end to end)")
    config.addinivalue_line("markers", "slow: Slow tests (may take several seconds)")


# ===== Settings =====


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch):
    """Isolate every test from TOOL_* variables and the cached settings."""
    for name in ("TOOL_THREADS", "THREADS", "FULL_CHARPOLY_MAX_ORDER", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


# ===== Graph Fixtures =====


@pytest.fixture
def p_z6() -> nx.Graph:
    """P(Z_6)."""
    return power_graph(make_cyclic(6))


@pytest.fixture
def p_z12() -> nx.Graph:
    """P(Z_12)."""
    return power_graph(make_cyclic(12))


@pytest.fixture
def p_d10() -> nx.Graph:
    """P(D_10)."""
    return power_graph(make_dihedral(5))


@pytest.fixture
def p_q2() -> nx.Graph:
    """P(Q_2), the quaternion group of order 8."""
    return power_graph(make_dicyclic(2))


@pytest.fixture
def star3() -> nx.Graph:
    """K_{1,3}."""
    return star_graph(3)
