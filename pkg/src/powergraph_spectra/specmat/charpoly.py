"""Exact characteristic polynomials.

All polynomials are monic det(xI - M). The full path runs sympy's
division-free Berkowitz algorithm over ZZ; the reduced path splits off the
linear factors of a twin partition and expands only the quotient.
"""

from collections.abc import Sequence

import networkx as nx

from src.powergraph_spectra.config.constants import DEFAULT_FULL_CHARPOLY_MAX_ORDER
from src.powergraph_spectra.core.enums import CharpolyMethod, MatrixKind
from src.powergraph_spectra.core.exceptions import NonEquitablePartitionError
from src.powergraph_spectra.models.matrix import IntMatrix
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization
from src.powergraph_spectra.specmat.matrices import graph_matrix
from src.powergraph_spectra.specmat.quotient import (
    quotient_matrix,
    twin_block_eigenvalue,
    twin_classes,
)
from src.powergraph_spectra.utils.logger import get_logger

logger = get_logger(__name__)


def charpoly(matrix: IntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial via Berkowitz over ZZ."""
    if matrix.dim == 0:
        return IntPolynomial.constant(1)
    coeffs = matrix.to_domain_matrix().charpoly()
    return IntPolynomial.from_descending(int(c) for c in coeffs)


def reduced_factorization(
    matrix: IntMatrix, classes: Sequence[Sequence[int]]
) -> SpectrumFactorization:
    """Factorization through an equitable twin partition.

    Every block of size s contributes (x - (a - b))^(s-1); the quotient of
    block row sums contributes its own characteristic polynomial.

    Raises:
        NonEquitablePartitionError: If some block is not a twin block
    """
    pairs: list[tuple[IntPolynomial | int, int]] = []
    for block in classes:
        eigenvalue = twin_block_eigenvalue(matrix, block)
        pairs.append((eigenvalue, len(block) - 1))

    quotient = quotient_matrix(matrix, classes)
    if not quotient.equitable or not quotient.is_integral():
        raise NonEquitablePartitionError("Twin partition produced a non-equitable quotient")
    pairs.append((charpoly(quotient.to_int_matrix()), 1))
    return SpectrumFactorization.from_pairs(pairs)


def reduced_charpoly(matrix: IntMatrix, classes: Sequence[Sequence[int]]) -> IntPolynomial:
    """Characteristic polynomial through an equitable twin partition."""
    return reduced_factorization(matrix, classes).expand()


def graph_charpoly(
    graph: nx.Graph,
    kind: MatrixKind,
    method: CharpolyMethod = CharpolyMethod.AUTO,
    full_max_order: int = DEFAULT_FULL_CHARPOLY_MAX_ORDER,
) -> IntPolynomial:
    """Characteristic polynomial of A, L or D^L of a graph.

    Args:
        graph: Input graph (connected for D^L)
        kind: Matrix kind
        method: FULL, REDUCED, or AUTO (FULL up to full_max_order)
        full_max_order: Largest order handled by the full path in AUTO mode

    Raises:
        DisconnectedGraphError: For D^L of a disconnected graph
    """
    matrix = graph_matrix(graph, kind)
    use_full = method == CharpolyMethod.FULL or (
        method == CharpolyMethod.AUTO and matrix.dim <= full_max_order
    )
    if use_full:
        result = charpoly(matrix)
    else:
        classes = [twin.vertices for twin in twin_classes(graph)]
        result = reduced_charpoly(matrix, classes)
    logger.debug(
        "Computed charpoly",
        kind=kind.value,
        order=matrix.dim,
        method="full" if use_full else "reduced",
    )
    return result


def graph_factorization(graph: nx.Graph, kind: MatrixKind) -> SpectrumFactorization:
    """Twin-reduced factorization of a graph matrix (quotient factor unexpanded)."""
    matrix = graph_matrix(graph, kind)
    classes = [twin.vertices for twin in twin_classes(graph)]
    return reduced_factorization(matrix, classes)
