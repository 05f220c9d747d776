"""Tests for the P(Z_n) integrality scan."""

import pytest

from src.powergraph_spectra.core.enums import NumberClass
from src.powergraph_spectra.core.exceptions import InvalidGroupSpecError
from src.powergraph_spectra.verify.scan import scan_integrality, scan_row


class TestScanRow:
    """Test single rows."""

    def test_prime_power_row(self):
        """P(Z_8) is complete, hence integral."""
        row = scan_row(8)
        assert row.number_class == NumberClass.PRIME_POWER
        assert row.laplacian_integral
        assert row.distance_laplacian_integral
        assert row.witness is None
        assert not row.violates_laplacian_conjecture

    def test_two_primes_row(self):
        """n = 6 is integral."""
        row = scan_row(6)
        assert row.number_class == NumberClass.TWO_PRIMES
        assert row.algebraic_connectivity_integral
        assert row.largest_distance_root_integral
        assert not row.violates_distance_conjecture

    def test_other_row(self):
        """n = 12 has irrational roots and a witness."""
        row = scan_row(12)
        assert row.number_class == NumberClass.OTHER
        assert not row.laplacian_integral
        assert not row.distance_laplacian_integral
        assert row.witness is not None

    def test_payload(self):
        """n is a string, flags are booleans."""
        payload = scan_row(6).to_payload()
        assert payload["n"] == "6"
        assert payload["class"] == "product of two distinct primes"
        assert payload["violation"] is False


class TestScanIntegrality:
    """Test the scan driver."""

    def test_rows_in_order_without_violations(self):
        """No violations up to 12."""
        rows = scan_integrality(12, threads=1)
        assert [r.n for r in rows] == list(range(2, 13))
        assert not any(r.violates_laplacian_conjecture or r.violates_distance_conjecture for r in rows)

    def test_workers_do_not_change_rows(self):
        """Process pool gives the same rows."""
        assert scan_integrality(10, threads=2) == scan_integrality(10, threads=1)

    def test_rejects_small_bound(self):
        """n_max must be at least 2."""
        with pytest.raises(InvalidGroupSpecError):
            scan_integrality(1)

    @pytest.mark.slow
    def test_integral_classes_to_200(self):
        """Prime powers and products of two primes are integral."""
        for row in scan_integrality(200):
            if row.conjectured_integral:
                assert row.laplacian_integral, row.n
                assert row.distance_laplacian_integral, row.n
