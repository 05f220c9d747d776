"""Laplacian to distance Laplacian transform for graphs of diameter at most two."""

from src.powergraph_spectra.core.exceptions import FactorizationError
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization


def diameter2_transform(lap: SpectrumFactorization, n: int) -> SpectrumFactorization:
    """Map a Laplacian factorization to the distance Laplacian one.

    One zero root is kept and every other root lambda becomes 2n - lambda,
    multiplicities unchanged. Zero roots inside nonlinear factors are
    split off first.

    Args:
        lap: Laplacian factorization of a connected graph of diameter <= 2
        n: Graph order

    Raises:
        FactorizationError: If the factorization has no zero root
    """
    zeros = 0
    pairs: list[tuple[IntPolynomial | int, int]] = []
    for fp in lap.factors:
        k = fp.factor.trailing_zero_order
        zeros += k * fp.multiplicity
        rest = IntPolynomial(fp.factor.coeffs[k:])
        if rest.degree >= 1:
            pairs.append((rest.reflect(2 * n), fp.multiplicity))
    if zeros == 0:
        raise FactorizationError("Laplacian factorization has no zero root")
    head: list[tuple[IntPolynomial | int, int]] = [(0, 1), (2 * n, zeros - 1)]
    return SpectrumFactorization.from_pairs(head + pairs)
