"""Integer root extraction and certified real root isolation."""

from dataclasses import dataclass
from fractions import Fraction

from sympy import Poly, integer_nthroot

from src.powergraph_spectra.config.constants import (
    DEFAULT_MAX_BISECTION_STEPS,
    DEFAULT_TOLERANCE,
)
from src.powergraph_spectra.core.exceptions import FactorizationError, ToleranceNotReachedError
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization
from src.powergraph_spectra.utils.logger import get_logger

logger = get_logger(__name__)


def _ceil_root(value: int, k: int) -> int:
    root, exact = integer_nthroot(value, k)
    return int(root) if exact else int(root) + 1


def root_bound(poly: IntPolynomial) -> int:
    """Integer upper bound on the modulus of every root of a monic polynomial.

    Fujiwara: 2 * max(|c_{d-1}|, |c_{d-2}|^(1/2), ..., |c_0 / 2|^(1/d)).
    """
    d = poly.degree
    if d < 1:
        return 0
    terms = [_ceil_root(abs(poly.coefficient(d - i)), i) for i in range(1, d)]
    terms.append(_ceil_root(-(-abs(poly.coefficient(0)) // 2), d))
    return 2 * max(terms)


def integer_root_factorization(poly: IntPolynomial) -> SpectrumFactorization:
    """Split off every integer root with its multiplicity.

    Candidates are the divisors of the trailing nonzero coefficient up to
    the Fujiwara bound. The residual factor, if any, has no integer roots
    and comes last.

    Raises:
        FactorizationError: If the polynomial is not monic
    """
    if not poly.is_monic:
        raise FactorizationError(f"Integer root extraction needs a monic polynomial, got {poly}")

    roots: dict[int, int] = {}
    zeros = poly.trailing_zero_order
    residual = IntPolynomial(poly.coeffs[zeros:])
    if zeros:
        roots[0] = zeros

    bound = root_bound(residual)
    candidate = 1
    while candidate <= bound and residual.degree > 0:
        if residual.coeffs[0] % candidate == 0:
            for root in (candidate, -candidate):
                if residual.evaluate(root) != 0:
                    continue
                linear = IntPolynomial.linear(root)
                mult = linear.multiplicity_in(residual)
                residual = residual.exquo(linear**mult)
                roots[root] = mult
        candidate += 1

    factorization = SpectrumFactorization.from_roots(roots)
    if residual.degree > 0:
        factorization = factorization + SpectrumFactorization.from_pairs([(residual, 1)])
    return factorization


def factor_integer_roots(factorization: SpectrumFactorization) -> SpectrumFactorization:
    """Run integer root extraction on every nonlinear factor, then merge."""
    pairs: list[tuple[IntPolynomial, int]] = []
    for fp in factorization.factors:
        if fp.factor.degree == 1:
            pairs.append((fp.factor, fp.multiplicity))
            continue
        for inner in integer_root_factorization(fp.factor).factors:
            pairs.append((inner.factor, inner.multiplicity * fp.multiplicity))
    merged = SpectrumFactorization.from_pairs(pairs).merged()
    linear = sorted(
        (fp for fp in merged.factors if fp.root is not None), key=lambda fp: fp.root
    )
    return SpectrumFactorization(factors=tuple(linear) + tuple(merged.nonlinear()))


@dataclass(frozen=True)
class RealRoot:
    """Real root known exactly (lower == upper) or inside (lower, upper)."""

    lower: Fraction
    upper: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> float:
        return float((self.lower + self.upper) / 2)

    def exact_int(self) -> int | None:
        if self.is_exact and self.lower.denominator == 1:
            return int(self.lower)
        return None

    def certainly_ge(self, other: "RealRoot") -> bool:
        return self.lower >= other.upper

    def certainly_gt(self, other: "RealRoot") -> bool:
        return self.lower > other.upper

    def certainly_equal(self, other: "RealRoot") -> bool:
        return self.is_exact and other.is_exact and self.lower == other.lower

    def to_json_dict(self) -> dict[str, object]:
        if self.is_exact:
            return {"value": str(self.lower), "mult": self.multiplicity}
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "approx": f"{self.value:.12g}",
            "mult": self.multiplicity,
        }


def _fraction_coeffs(poly: Poly) -> list[Fraction]:
    return [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]


def _horner(coeffs: list[Fraction], point: Fraction) -> Fraction:
    result = Fraction(0)
    for c in coeffs:
        result = result * point + c
    return result


def _sign_changes(sequence: list[list[Fraction]], point: Fraction) -> int:
    signs = [v for v in (_horner(c, point) for c in sequence) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def _isolate_squarefree(
    factor: Poly, tol: Fraction, max_steps: int
) -> list[tuple[Fraction, Fraction]]:
    """Intervals (lo, hi] of width <= tol, one per real root of a squarefree factor
    with no rational roots."""
    sequence = [_fraction_coeffs(s) for s in factor.sturm()]
    coeffs = _fraction_coeffs(factor)
    lead = abs(coeffs[0])
    cauchy = 1 + max(abs(c) for c in coeffs[1:]) / lead
    lo, hi = -cauchy, cauchy

    intervals: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, _sign_changes(sequence, lo) - _sign_changes(sequence, hi), 0)]
    while stack:
        a, b, count, depth = stack.pop()
        if count == 0:
            continue
        if count == 1 and b - a <= tol:
            intervals.append((a, b))
            continue
        if depth >= max_steps:
            raise ToleranceNotReachedError(
                f"Root isolation of {factor.as_expr()} did not reach {tol} in {max_steps} steps"
            )
        mid = (a + b) / 2
        changes_mid = _sign_changes(sequence, mid)
        left = _sign_changes(sequence, a) - changes_mid
        stack.append((mid, b, count - left, depth + 1))
        stack.append((a, mid, left, depth + 1))
    return sorted(intervals)


def isolate_real_roots(
    poly: IntPolynomial,
    tol: Fraction = DEFAULT_TOLERANCE,
    max_steps: int = DEFAULT_MAX_BISECTION_STEPS,
) -> list[RealRoot]:
    """Certified real roots of a monic polynomial, ascending, with multiplicities.

    Integer roots are exact; every other real root is enclosed in an open
    interval of width at most tol, found by Sturm-sequence bisection.

    Raises:
        ToleranceNotReachedError: If bisection exceeds max_steps halvings
    """
    factorization = integer_root_factorization(poly)
    found = [
        RealRoot(Fraction(root), Fraction(root), mult)
        for root, mult in factorization.linear_roots().items()
    ]
    for fp in factorization.nonlinear():
        _, parts = fp.factor.to_poly().sqf_list()
        for part, k in parts:
            for lo, hi in _isolate_squarefree(part, tol, max_steps):
                found.append(RealRoot(lo, hi, k * fp.multiplicity))
    return sorted(found, key=lambda r: (r.lower, r.upper))


def real_roots_numeric(
    poly: IntPolynomial,
    tol: Fraction = DEFAULT_TOLERANCE,
    max_steps: int = DEFAULT_MAX_BISECTION_STEPS,
) -> list[float]:
    """Ascending real roots as floats, repeated by multiplicity."""
    values: list[float] = []
    for root in isolate_real_roots(poly, tol, max_steps):
        values.extend([root.value] * root.multiplicity)
    return values


def count_real_roots(poly: IntPolynomial) -> int:
    """Number of real roots counted with multiplicity."""
    return sum(r.multiplicity for r in isolate_real_roots(poly, tol=Fraction(1), max_steps=400))


def sorted_spectrum(
    factorization: SpectrumFactorization,
    tol: Fraction = DEFAULT_TOLERANCE,
    max_steps: int = DEFAULT_MAX_BISECTION_STEPS,
) -> list[RealRoot]:
    """Roots of a factorization, ascending, one entry per distinct root."""
    roots: dict[int, int] = {}
    numeric: list[RealRoot] = []
    for fp in factorization.factors:
        if fp.root is not None:
            roots[fp.root] = roots.get(fp.root, 0) + fp.multiplicity
            continue
        for root in isolate_real_roots(fp.factor, tol, max_steps):
            exact = root.exact_int()
            if exact is not None:
                roots[exact] = roots.get(exact, 0) + root.multiplicity * fp.multiplicity
            else:
                numeric.append(
                    RealRoot(root.lower, root.upper, root.multiplicity * fp.multiplicity)
                )
    exact_roots = [RealRoot(Fraction(v), Fraction(v), m) for v, m in roots.items()]
    return sorted(exact_roots + numeric, key=lambda r: (r.lower, r.upper))


def descending_values(spectrum: list[RealRoot]) -> list[RealRoot]:
    """Flatten to one entry per eigenvalue, largest first (index 0 is the largest)."""
    flat: list[RealRoot] = []
    for root in sorted(spectrum, key=lambda r: (r.lower, r.upper), reverse=True):
        flat.extend([RealRoot(root.lower, root.upper, 1)] * root.multiplicity)
    return flat
