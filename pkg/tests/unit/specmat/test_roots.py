"""Tests for integer root extraction and certified isolation."""

from fractions import Fraction

import pytest

from src.powergraph_spectra.core.exceptions import FactorizationError, ToleranceNotReachedError
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization
from src.powergraph_spectra.specmat.roots import (
    RealRoot,
    count_real_roots,
    descending_values,
    factor_integer_roots,
    integer_root_factorization,
    isolate_real_roots,
    real_roots_numeric,
    root_bound,
    sorted_spectrum,
)

X2_MINUS_2 = IntPolynomial((-2, 0, 1))
X2_PLUS_1 = IntPolynomial((1, 0, 1))


class TestIntegerRoots:
    """Test rational root extraction on monic integer polynomials."""

    def test_root_bound_covers_roots(self):
        """Fujiwara bound for x^2 - 2 is 2."""
        assert root_bound(X2_MINUS_2) == 2
        assert root_bound(IntPolynomial.from_roots([9, -3])) >= 9

    def test_root_bound_rounds_inexact_roots_up(self):
        """Non-perfect powers round up: x^3 - 10 gives 2 * ceil(5^(1/3)) = 4."""
        assert root_bound(IntPolynomial((-10, 0, 0, 1))) == 4
        assert root_bound(IntPolynomial((0, -7, 1))) == 14

    def test_splits_integer_roots(self):
        """Integer roots come out with multiplicities; the residual is last."""
        poly = IntPolynomial.from_roots([0, 3, 3, -2]) * X2_MINUS_2
        factorization = integer_root_factorization(poly)
        assert factorization.linear_roots() == {0: 1, 3: 2, -2: 1}
        assert [fp.factor for fp in factorization.nonlinear()] == [X2_MINUS_2]
        assert factorization.expand() == poly

    def test_no_integer_roots(self):
        """x^2 + 1 stays whole."""
        factorization = integer_root_factorization(X2_PLUS_1)
        assert factorization.linear_roots() == {}
        assert factorization.product_degree == 2

    def test_rejects_non_monic(self):
        """2x + 1 has a non-integer rational root."""
        with pytest.raises(FactorizationError):
            integer_root_factorization(IntPolynomial((1, 2)))

    def test_factor_integer_roots_merges(self):
        """Roots hidden in a nonlinear factor merge with linear factors."""
        factorization = SpectrumFactorization.from_pairs(
            [(4, 1), (IntPolynomial.from_roots([4, 7]), 2)]
        )
        result = factor_integer_roots(factorization)
        assert result.linear_roots() == {4: 3, 7: 2}
        assert [fp.root for fp in result.factors] == [4, 7]


class TestRootIsolation:
    """Test Sturm-sequence isolation."""

    def test_sqrt_two(self):
        """Both roots of x^2 - 2 are enclosed within the tolerance."""
        tol = Fraction(1, 10**6)
        roots = isolate_real_roots(X2_MINUS_2, tol=tol)
        assert len(roots) == 2
        for root, sign in zip(roots, (-1, 1)):
            assert not root.is_exact
            assert root.upper - root.lower <= tol
            assert root.lower**2 < 2 < root.upper**2 or root.upper**2 < 2 < root.lower**2
            assert (root.value > 0) == (sign > 0)

    def test_no_real_roots(self):
        """x^2 + 1 has no real roots."""
        assert isolate_real_roots(X2_PLUS_1) == []
        assert count_real_roots(X2_PLUS_1) == 0

    def test_integer_roots_are_exact(self):
        """Integer roots are reported exactly with multiplicity."""
        roots = isolate_real_roots(IntPolynomial.from_roots([2, 2, -1]))
        assert [(r.exact_int(), r.multiplicity) for r in roots] == [(-1, 1), (2, 2)]

    def test_repeated_irrational_roots(self):
        """Squarefree decomposition carries multiplicity."""
        poly = X2_MINUS_2**2 * IntPolynomial.from_roots([1])
        assert count_real_roots(poly) == 5
        roots = isolate_real_roots(poly)
        assert [r.multiplicity for r in roots] == [2, 1, 2]

    def test_numeric_values(self):
        """Floats repeat by multiplicity, ascending."""
        values = real_roots_numeric(IntPolynomial.from_roots([3, 3]) * X2_MINUS_2)
        assert values[0] == pytest.approx(-(2**0.5))
        assert values[1] == pytest.approx(2**0.5)
        assert values[2:] == [3.0, 3.0]

    def test_step_limit(self):
        """Too few halvings raise."""
        with pytest.raises(ToleranceNotReachedError):
            isolate_real_roots(X2_MINUS_2, tol=Fraction(1, 10**9), max_steps=3)


class TestSpectrum:
    """Test spectrum assembly from factorizations."""

    def test_sorted_spectrum_merges_roots(self):
        """Equal integer roots across factors are merged."""
        factorization = SpectrumFactorization.from_pairs(
            [(5, 1), (IntPolynomial.from_roots([0, 5]), 1), (X2_MINUS_2, 1)]
        )
        spectrum = sorted_spectrum(factorization)
        assert [r.exact_int() for r in spectrum] == [None, 0, None, 5]
        assert spectrum[-1].multiplicity == 2

    def test_descending_values(self):
        """Flattened largest first."""
        spectrum = [RealRoot(Fraction(1), Fraction(1), 2), RealRoot(Fraction(4), Fraction(4), 1)]
        assert [r.exact_int() for r in descending_values(spectrum)] == [4, 1, 1]

    def test_real_root_comparisons(self):
        """Interval comparisons are certain only when disjoint."""
        low = RealRoot(Fraction(1), Fraction(2))
        high = RealRoot(Fraction(3), Fraction(3))
        assert high.certainly_gt(low)
        assert not low.certainly_ge(high)
        assert high.certainly_equal(RealRoot(Fraction(3), Fraction(3)))

    def test_json(self):
        """Exact roots serialize by value, intervals by bounds."""
        assert RealRoot(Fraction(3), Fraction(3), 2).to_json_dict() == {"value": "3", "mult": 2}
        payload = RealRoot(Fraction(1), Fraction(2)).to_json_dict()
        assert payload["lower"] == "1"
        assert payload["approx"] == "1.5"
