"""Tests for the theorem catalog."""

import pytest

from src.powergraph_spectra.closedforms.registry import (
    THEOREMS,
    diameter2_partner,
    evaluate,
    get_entry,
    group_source,
)
from src.powergraph_spectra.core.enums import MatrixKind, StructureFamily, TheoremId
from src.powergraph_spectra.models.theorem import TheoremParams, theorem_family

SAMPLE_PARAMS = {
    "ZpZp2": "p=2",
    "ElemAb": "p=3",
    "Z2sdZ4": "",
    "ZrFpq": "r=2,p=7,q=3",
    "Fpqr": "p=7,q=3,r=2",
    "Gi5": "p=5,q=3,r=2",
    "ProperCyclic": "n=6",
    "ProperDicyclic": "n=2",
}


class TestRegistry:
    """Test catalog coverage and lookups."""

    def test_every_theorem_registered(self):
        """Each theorem id has an entry."""
        assert set(THEOREMS) == set(TheoremId)

    @pytest.mark.parametrize("theorem", list(TheoremId))
    def test_kind_matches_prefix(self, theorem):
        """DL- ids use D^L, L- ids use the Laplacian."""
        expected = MatrixKind.DL if theorem.value.startswith("DL-") else MatrixKind.L
        assert get_entry(theorem).kind == expected

    @pytest.mark.parametrize("theorem", list(TheoremId))
    def test_evaluate_sample(self, theorem):
        """Every theorem evaluates at sample parameters."""
        params = TheoremParams.parse(theorem, SAMPLE_PARAMS[theorem_family(theorem)])
        report = evaluate(params)
        assert report.theorem == theorem
        assert report.degree_gap == 0 or report.caveats

    def test_lookup_by_string(self):
        """String ids resolve."""
        assert get_entry("DL-Gi5").structure == StructureFamily.G_I5
        assert get_entry("L-Fpqr-ii").family == "Fpqr"

    def test_group_source(self):
        """Z_r x F_{p,q} maps to a product spec."""
        params = TheoremParams.parse("DL-ZrFpq", "r=2,p=7,q=3")
        assert group_source(params) == ("cyclic:2 x frobenius:7,3", False)

    def test_group_source_proper(self):
        """Proper theorems set the proper flag."""
        params = TheoremParams.parse("L-ProperDicyclic", "n=2")
        assert group_source(params) == ("dicyclic:2", True)

    def test_diameter2_partner(self):
        """Laplacian ids pair with D^L ids."""
        assert diameter2_partner(TheoremId.L_GI5) == TheoremId.DL_GI5
        assert diameter2_partner(TheoremId.L_FPQR_I) == TheoremId.DL_FPQR_I
        assert diameter2_partner(TheoremId.DL_GI5) is None
