"""Exact integer polynomials and spectrum factorizations."""

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import Poly, Symbol

from src.powergraph_spectra.core.exceptions import FactorizationError

X = Symbol("x")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored ascending (c0, c1, ..., cd) with trailing zeros
    stripped, so the zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        values = [int(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    # ----- construction -----

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Build from coefficients listed highest degree first."""
        return cls(tuple(reversed([int(c) for c in coeffs])))

    @classmethod
    def from_poly(cls, poly: Poly) -> "IntPolynomial":
        """Build from a sympy Poly with integer coefficients."""
        return cls.from_descending(int(c) for c in poly.all_coeffs())

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """The monic factor x - root."""
        return cls((-root, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        result = cls.constant(1)
        for root in roots:
            result = result * cls.linear(root)
        return result

    # ----- properties -----

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def trailing_zero_order(self) -> int:
        """Multiplicity of the root 0."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def coefficient(self, power: int) -> int:
        """Coefficient of x^power (0 outside the stored range)."""
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    # ----- sympy bridge -----

    def to_poly(self) -> Poly:
        return Poly(list(reversed(self.coeffs)) or [0], X, domain="ZZ")

    def as_expr(self):
        return self.to_poly().as_expr()

    # ----- arithmetic -----

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() * other.to_poly())

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise FactorizationError("Negative polynomial exponent")
        return IntPolynomial.from_poly(self.to_poly() ** exponent)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.to_poly() - other.to_poly())

    def div(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder of division by a monic polynomial."""
        if not other.is_monic:
            raise FactorizationError("Division is only exact-integral by monic polynomials")
        q, r = self.to_poly().div(other.to_poly(), auto=False)
        return IntPolynomial.from_poly(q), IntPolynomial.from_poly(r)

    def exquo(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact quotient.

        Raises:
            FactorizationError: If other does not divide self
        """
        q, r = self.div(other)
        if not r.is_zero:
            raise FactorizationError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "IntPolynomial") -> bool:
        """Check whether self divides other."""
        return other.div(self)[1].is_zero

    def multiplicity_in(self, other: "IntPolynomial") -> int:
        """Largest k with self^k dividing other (other nonzero)."""
        if other.is_zero:
            raise FactorizationError("Multiplicity in the zero polynomial is unbounded")
        count = 0
        current = other
        while True:
            q, r = current.div(self)
            if not r.is_zero:
                return count
            count += 1
            current = q

    def evaluate(self, value: int | Fraction) -> int | Fraction:
        """Exact value at an integer or rational point (Horner)."""
        result: int | Fraction = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def reflect(self, center: int) -> "IntPolynomial":
        """Monic polynomial whose roots are center - root for each root of self."""
        d = self.degree
        composed = self.to_poly().compose(Poly(center - X, X, domain="ZZ"))
        return IntPolynomial.from_poly(composed * (-1) ** d)

    def shift(self, offset: int) -> "IntPolynomial":
        """Polynomial whose roots are root + offset."""
        return IntPolynomial.from_poly(self.to_poly().compose(Poly(X - offset, X, domain="ZZ")))

    # ----- rendering -----

    def __str__(self) -> str:
        return str(self.as_expr()) if self.coeffs else "0"

    def to_json_dict(self) -> dict[str, list[str]]:
        return {"coeffs": [str(c) for c in self.coeffs]}


class FactorPower(BaseModel):
    """One factor of a factorization together with its multiplicity."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    factor: IntPolynomial
    multiplicity: int = Field(..., ge=1)

    @field_validator("factor")
    @classmethod
    def validate_factor(cls, v: IntPolynomial) -> IntPolynomial:
        """Factors are monic with degree at least one."""
        if v.degree < 1:
            raise ValueError("Factor must have degree >= 1")
        if not v.is_monic:
            raise ValueError("Factor must be monic")
        return v

    @property
    def root(self) -> int | None:
        """Integer root of a linear factor, otherwise None."""
        if self.factor.degree == 1:
            return -self.factor.coeffs[0]
        return None


class SpectrumFactorization(BaseModel):
    """Ordered multiset of (factor, multiplicity) pairs."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    factors: tuple[FactorPower, ...] = ()

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[IntPolynomial | int, int]]
    ) -> "SpectrumFactorization":
        """Build from (factor, multiplicity) pairs.

        An int factor stands for the linear factor x - root. Pairs with
        multiplicity 0 are dropped.

        Raises:
            FactorizationError: If a multiplicity is negative
        """
        factors = []
        for factor, mult in pairs:
            if mult < 0:
                raise FactorizationError(f"Negative multiplicity {mult} for factor {factor}")
            if mult == 0:
                continue
            poly = IntPolynomial.linear(factor) if isinstance(factor, int) else factor
            factors.append(FactorPower(factor=poly, multiplicity=mult))
        return cls(factors=tuple(factors))

    @classmethod
    def from_roots(cls, roots: dict[int, int]) -> "SpectrumFactorization":
        """Build from {root: multiplicity}, ascending by root."""
        return cls.from_pairs((root, mult) for root, mult in sorted(roots.items()))

    @property
    def product_degree(self) -> int:
        return sum(fp.factor.degree * fp.multiplicity for fp in self.factors)

    def expand(self) -> IntPolynomial:
        """Exact expanded product."""
        result = IntPolynomial.constant(1)
        for fp in self.factors:
            result = result * fp.factor**fp.multiplicity
        return result

    def linear_roots(self) -> dict[int, int]:
        """Integer roots of the linear factors with summed multiplicities."""
        roots: dict[int, int] = {}
        for fp in self.factors:
            if fp.root is not None:
                roots[fp.root] = roots.get(fp.root, 0) + fp.multiplicity
        return roots

    def nonlinear(self) -> list[FactorPower]:
        return [fp for fp in self.factors if fp.factor.degree > 1]

    def merged(self) -> "SpectrumFactorization":
        """Combine equal factors, keeping first-seen order."""
        totals: dict[IntPolynomial, int] = {}
        for fp in self.factors:
            totals[fp.factor] = totals.get(fp.factor, 0) + fp.multiplicity
        return SpectrumFactorization.from_pairs(totals.items())

    def __add__(self, other: "SpectrumFactorization") -> "SpectrumFactorization":
        return SpectrumFactorization(factors=self.factors + other.factors)

    def to_json_dict(self) -> dict[str, list[dict[str, object]]]:
        return {
            "factors": [
                {"coeffs": fp.factor.to_json_dict()["coeffs"], "mult": fp.multiplicity}
                for fp in self.factors
            ]
        }
