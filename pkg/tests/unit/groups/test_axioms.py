"""Tests for group axiom checks."""

import pytest

from src.powergraph_spectra.core.exceptions import GroupAxiomError
from src.powergraph_spectra.groups.axioms import check_axioms
from src.powergraph_spectra.groups.constructors import build_group
from src.powergraph_spectra.models.group import FiniteGroup
from tests.fixtures.graphs import ORDER_CENSUS


class TestCheckAxioms:
    """Test closure, identity, inverses and associativity."""

    @pytest.mark.parametrize("spec", sorted(ORDER_CENSUS) + ["fpqr:7,3,2", "gi5:5,3,2", "zpsdzp2:3"])
    def test_constructed_groups_pass(self, spec):
        """Every constructor yields a group."""
        result = check_axioms(build_group(spec))
        assert result.exhaustive
        assert result.triples_checked == result.order**3

    def test_sampling_above_limit(self):
        """Large groups fall back to seeded sampling."""
        result = check_axioms(build_group("cyclic:30"), exhaustive_limit=10, sample_size=500)
        assert not result.exhaustive
        assert result.triples_checked == 500

    def test_limits_come_from_settings(self, monkeypatch):
        """EXHAUSTIVE_AXIOM_LIMIT and AXIOM_SAMPLE_SIZE apply when no limits are passed."""
        monkeypatch.setenv("EXHAUSTIVE_AXIOM_LIMIT", "10")
        monkeypatch.setenv("AXIOM_SAMPLE_SIZE", "64")
        result = check_axioms(build_group("cyclic:12"))
        assert not result.exhaustive
        assert result.triples_checked == 64

    def test_rejects_non_associative_table(self):
        """A Latin square that is not associative fails."""
        # Loop of order 5 with identity 0 that is not a group
        table = (
            (0, 1, 2, 3, 4),
            (1, 0, 3, 4, 2),
            (2, 4, 0, 1, 3),
            (3, 2, 4, 0, 1),
            (4, 3, 1, 2, 0),
        )
        loop = FiniteGroup(table=table, identity=0, labels=tuple("abcde"), name="loop")
        with pytest.raises(GroupAxiomError, match="associativity"):
            check_axioms(loop)

    def test_rejects_out_of_range_product(self):
        """Products must stay in the element set."""
        bad = FiniteGroup(table=((0, 1), (1, 2)), identity=0, labels=("e", "a"), name="bad")
        with pytest.raises(GroupAxiomError, match="leaves"):
            check_axioms(bad)

    def test_rejects_missing_identity(self):
        """The identity must be two-sided."""
        bad = FiniteGroup(table=((1, 0), (0, 1)), identity=0, labels=("e", "a"), name="bad")
        with pytest.raises(GroupAxiomError, match="identity"):
            check_axioms(bad)
