"""Tests for vertex connectivity."""

import pytest

from src.powergraph_spectra.core.exceptions import DisconnectedGraphError
from src.powergraph_spectra.powergraph.builders import complete_graph, disjoint_union, path_graph
from src.powergraph_spectra.verify.connectivity import vertex_connectivity


class TestVertexConnectivity:
    """Test kappa on small graphs."""

    def test_complete_graph(self):
        """K_n gives n - 1."""
        assert vertex_connectivity(complete_graph(4)) == 3

    def test_star(self, star3):
        """The center is a cut vertex."""
        assert vertex_connectivity(star3) == 1

    def test_path(self):
        """Paths are 1-connected."""
        assert vertex_connectivity(path_graph(4)) == 1

    def test_power_graph_of_z6(self, p_z6):
        """Identity and generators separate 2, 4 from 3."""
        assert vertex_connectivity(p_z6) == 3

    def test_rejects_disconnected(self):
        """Disconnected graphs raise."""
        with pytest.raises(DisconnectedGraphError):
            vertex_connectivity(disjoint_union(complete_graph(2), complete_graph(2)))
