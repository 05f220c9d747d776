"""Tests for twin and diameter-two lemma checks."""

import pytest

from src.powergraph_spectra.core.exceptions import DiameterTooLargeError, DisconnectedGraphError
from src.powergraph_spectra.groups.constructors import build_group
from src.powergraph_spectra.powergraph.builders import (
    complete_graph,
    disjoint_union,
    path_graph,
    power_graph,
)
from src.powergraph_spectra.verify.lemmas import check_diameter2, check_twin_lemmas
from tests.fixtures.graphs import SMALL_GROUPS


class TestTwinLemmas:
    """Twin classes force linear D^L factors."""

    def test_power_graph_of_z6(self, p_z6):
        """Predicted factors divide the oracle polynomial."""
        report = check_twin_lemmas(p_z6)
        assert report.holds
        assert report.predicted.linear_roots() == {6: 2, 7: 1}

    def test_independent_twins(self, star3):
        """Leaves of a star give Tr + 2."""
        report = check_twin_lemmas(star3)
        assert report.holds
        assert report.predicted.linear_roots() == {7: 2}

    @pytest.mark.parametrize("spec", SMALL_GROUPS)
    def test_power_graphs(self, spec):
        """The lemma holds on every small power graph."""
        assert check_twin_lemmas(power_graph(build_group(spec))).holds

    def test_rejects_disconnected(self):
        """D^L is undefined."""
        with pytest.raises(DisconnectedGraphError):
            check_twin_lemmas(disjoint_union(complete_graph(1), complete_graph(1)))


class TestDiameter2:
    """Laplacian to D^L transform on diameter-two graphs."""

    @pytest.mark.parametrize("spec", SMALL_GROUPS)
    def test_power_graphs(self, spec):
        """Power graphs have diameter at most two."""
        report = check_diameter2(power_graph(build_group(spec)))
        assert report.holds
        assert report.diameter <= 2

    def test_complete_graph(self):
        """K_4 has diameter one."""
        report = check_diameter2(complete_graph(4))
        assert report.holds
        assert report.diameter == 1

    def test_rejects_diameter_three(self):
        """P_4 has diameter three."""
        with pytest.raises(DiameterTooLargeError):
            check_diameter2(path_graph(4))
