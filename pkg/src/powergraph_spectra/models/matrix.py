"""Dense integer and rational matrices."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of arbitrary-precision integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("IntMatrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.rows]

    def is_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.dim) for j in range(i)
        )

    def to_domain_matrix(self) -> DomainMatrix:
        """Convert to a sympy DomainMatrix over ZZ."""
        return DomainMatrix(
            [[ZZ(v) for v in row] for row in self.rows], (self.dim, self.dim), ZZ
        )


@dataclass(frozen=True)
class QuotientMatrix:
    """Block-row-average matrix of a partitioned matrix."""

    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for row in self.entries for v in row)

    def to_int_matrix(self) -> IntMatrix:
        """Integer form of the quotient.

        Raises:
            ValueError: If some entry is not an integer
        """
        if not self.is_integral():
            raise ValueError("Quotient matrix has non-integer entries")
        return IntMatrix.from_rows([[int(v) for v in row] for row in self.entries])
