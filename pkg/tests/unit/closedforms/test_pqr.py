"""Tests for closed forms of groups of order p^3 and pqr."""

import pytest

from src.powergraph_spectra.closedforms import pqr
from src.powergraph_spectra.closedforms.residuals import (
    residual_charpoly,
    zr_fpq_laplacian_matrix_transcribed,
)
from src.powergraph_spectra.core.enums import TheoremId
from src.powergraph_spectra.core.exceptions import InvalidTheoremParamsError
from tests.fixtures.graphs import DL_SPECTRUM_P_Z2SDZ4, L_SPECTRUM_P_ZPZP2_2


class TestOrderPCubed:
    """Test Z_p x Z_p^2, Z_p^3 and Z_2 sd Z_4."""

    def test_z2_semidirect_z4(self):
        """Stated D^L spectrum of P(Z_2 sd Z_4)."""
        report = pqr.dl_z2_semidirect_z4()
        assert report.factorization.linear_roots() == DL_SPECTRUM_P_Z2SDZ4
        assert report.degree_gap == 0
        assert report.caveats == ()

    def test_l_z2_semidirect_z4(self):
        """Laplacian roots 0, 8, 4^2, 1^4."""
        report = pqr.l_z2_semidirect_z4()
        assert report.factorization.linear_roots() == {0: 1, 8: 1, 4: 2, 1: 4}

    def test_l_zp_zp2_at_two(self):
        """Laplacian spectrum of P(Z_2 x Z_4)."""
        report = pqr.l_zp_zp2(2)
        assert report.factorization.linear_roots() == L_SPECTRUM_P_ZPZP2_2
        assert report.theorem == TheoremId.L_ZPZP2

    def test_dl_zp_zp2_degree(self):
        """Multiplicities sum to p^3."""
        for p in (2, 3, 5):
            assert pqr.dl_zp_zp2(p).factorization.product_degree == p**3

    def test_dl_elem_abelian_at_two_drops_empty_factor(self):
        """At p = 2 the exponent n - p^2 - p - 2 is zero."""
        report = pqr.dl_elem_abelian(2)
        assert report.factorization.linear_roots() == {0: 1, 8: 1, 15: 6}

    def test_dl_elem_abelian_at_three(self):
        """Degree 27 with 12 + 13 repeated roots."""
        report = pqr.dl_elem_abelian(3)
        assert report.factorization.linear_roots() == {0: 1, 27: 1, 53: 12, 51: 13}

    def test_rejects_composite(self):
        """p must be prime."""
        with pytest.raises(InvalidTheoremParamsError):
            pqr.dl_zp_zp2(4)


class TestZrFpq:
    """Test Z_r x F_{p,q}."""

    def test_stated_degree_gap_is_flagged(self):
        """The stated multiplicities fall (p-1)(q-2) short."""
        report = pqr.dl_zr_fpq(2, 7, 3)
        assert report.graph_order == 42
        assert report.degree_gap == 6
        assert report.caveats

    def test_candidate_closes_the_gap(self):
        """Exponent p(q-2) restores degree pqr."""
        report = pqr.l_zr_fpq(2, 7, 3)
        candidate = report.candidates[0]
        assert candidate.label == "exponent p(q-2)"
        assert candidate.factorization.product_degree == 42

    def test_surd_pair_is_integral_quadratic(self):
        """The Laplacian surd pair is x^2 - 7x + 8 at (2, 7, 3)."""
        report = pqr.l_zr_fpq(2, 7, 3)
        quadratics = [fp.factor for fp in report.factorization.nonlinear() if fp.factor.degree == 2]
        assert quadratics[0].coeffs == (8, -7, 1)

    def test_cross_checks_are_recorded(self):
        """Structural quotient and quartic expansion are compared, not used."""
        report = pqr.l_zr_fpq(2, 7, 3)
        assert set(report.cross_checks) == {
            "structural quotient matches printed six-class matrix",
            "printed quartic expansion matches six-class residual",
        }
        assert report.cross_checks["structural quotient matches printed six-class matrix"]

    def test_laplacian_residual_comes_from_printed_matrix(self):
        """The quartic is charpoly of the printed 6x6 matrix without 0 and pqr."""
        expected = residual_charpoly(zr_fpq_laplacian_matrix_transcribed(2, 7, 3), 0, 42)
        report = pqr.l_zr_fpq(2, 7, 3)
        assert expected.degree == 4
        assert expected in [fp.factor for fp in report.factorization.factors]

    def test_rejects_prime_ordering(self):
        """p > q > r is required."""
        with pytest.raises(InvalidTheoremParamsError, match="p > q > r"):
            pqr.dl_zr_fpq(3, 7, 2)


class TestFpqr:
    """Test F_{p,qr}."""

    def test_case_i_degree(self):
        """Case i at (7, 3, 2) has full degree and no caveats."""
        report = pqr.dl_f_pqr(7, 3, 2, "i")
        assert report.theorem == TheoremId.DL_FPQR_I
        assert report.factorization.product_degree == 42
        assert report.caveats == ()

    def test_case_mismatch_is_flagged(self):
        """Case ii evaluated where case i applies carries caveats."""
        report = pqr.dl_f_pqr(7, 3, 2, "ii")
        assert report.theorem == TheoremId.DL_FPQR_II
        assert any("case ii" in c for c in report.caveats)
        assert report.degree_gap == 3

    def test_case_ii_in_range_is_three_short(self):
        """Case ii at (11, 5, 2) is the selected case and still falls 3 short."""
        report = pqr.dl_f_pqr(11, 5, 2, "ii")
        assert report.graph_order == 110
        assert report.degree_gap == 3
        assert len(report.caveats) == 1
        assert "3 short of 110" in report.caveats[0]

    def test_laplacian_case_i_carries_cubic(self):
        """The last factor is the cubic h."""
        report = pqr.l_f_pqr(7, 3, 2, "i")
        assert report.factorization.factors[-1].factor.degree == 3


class TestGi5:
    """Test G_{i+5}."""

    def test_dl_roots(self):
        """Stated D^L roots at (5, 3, 2)."""
        report = pqr.dl_g_i5(5, 3, 2)
        assert report.factorization.linear_roots() == {
            0: 1,
            30: 1,
            51: 1,
            59: 15,
            47: 3,
            45: 8,
            49: 1,
        }

    def test_l_roots(self):
        """Stated Laplacian roots at (5, 3, 2)."""
        report = pqr.l_g_i5(5, 3, 2)
        assert report.factorization.linear_roots() == {
            0: 1,
            30: 1,
            9: 1,
            1: 15,
            13: 3,
            15: 8,
            11: 1,
        }

    def test_rejects_bad_congruence(self):
        """q must be 1 mod r."""
        with pytest.raises(InvalidTheoremParamsError):
            pqr.dl_g_i5(7, 5, 3)
