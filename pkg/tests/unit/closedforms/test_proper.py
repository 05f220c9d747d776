"""Tests for proper power graph closed forms."""

import pytest

from src.powergraph_spectra.closedforms.proper import (
    divisor_betas,
    divisor_distance,
    dl_proper_cyclic,
    dl_proper_dicyclic,
    l_proper_dicyclic,
    proper_cyclic_quotient,
)
from src.powergraph_spectra.core.exceptions import InvalidTheoremParamsError
from src.powergraph_spectra.specmat.roots import factor_integer_roots
from tests.fixtures.graphs import DL_SPECTRUM_PROPER_Q2, DL_SPECTRUM_PROPER_Z6


class TestProperCyclic:
    """Test P*(Z_n)."""

    def test_divisor_distance(self):
        """Comparable divisors are adjacent."""
        assert divisor_distance(2, 4) == 1
        assert divisor_distance(2, 3) == 2
        assert divisor_distance(6, 6) == 0

    def test_divisor_betas(self):
        """betas for n = 6 over divisors 2, 3."""
        assert divisor_betas(6) == [4, 2]

    def test_quotient_from_transmissions(self):
        """Written-out quotient for n = 6."""
        assert proper_cyclic_quotient(6).rows == ((3, -1, -2), (-2, 6, -4), (-2, -2, 4))

    def test_spectrum_at_six(self):
        """Integer roots of the closed form at n = 6."""
        report = dl_proper_cyclic(6)
        assert report.factorization.product_degree == 5
        assert factor_integer_roots(report.factorization).linear_roots() == DL_SPECTRUM_PROPER_Z6

    @pytest.mark.parametrize("n", [6, 12, 30])
    def test_cross_check_and_caveat(self, n):
        """Transmission quotient agrees with the structure; the zero count is caveated."""
        report = dl_proper_cyclic(n)
        assert all(report.cross_checks.values())
        assert report.caveats
        assert report.graph_order == n - 1

    @pytest.mark.parametrize("n", [3, 7])
    def test_rejects_small_or_prime(self, n):
        """n must be composite."""
        with pytest.raises(InvalidTheoremParamsError):
            dl_proper_cyclic(n)


class TestProperDicyclic:
    """Test P(Q_n*)."""

    def test_dl_at_two(self):
        """Quaternion group of order 8."""
        report = dl_proper_dicyclic(2)
        assert report.factorization.linear_roots() == DL_SPECTRUM_PROPER_Q2
        assert report.caveats == ()

    def test_l_degree(self):
        """Laplacian form has degree 4n - 1."""
        for n in (2, 4, 8):
            assert l_proper_dicyclic(n).factorization.product_degree == 4 * n - 1

    def test_non_power_of_two_is_caveated(self):
        """n = 3 is outside generalized quaternion groups."""
        report = dl_proper_dicyclic(3)
        assert "not a power of 2" in report.caveats[0]

    def test_rejects_n_below_two(self):
        """n >= 2."""
        with pytest.raises(InvalidTheoremParamsError):
            l_proper_dicyclic(1)
