"""Twin classes, quotient matrices and twin-vertex spectral factors."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from src.powergraph_spectra.core.enums import TwinKind
from src.powergraph_spectra.core.exceptions import NonEquitablePartitionError
from src.powergraph_spectra.models.matrix import IntMatrix, QuotientMatrix
from src.powergraph_spectra.models.polynomial import SpectrumFactorization
from src.powergraph_spectra.powergraph.metrics import transmissions


@dataclass(frozen=True)
class TwinClass:
    """Maximal set of twin vertices (positions in sorted vertex order)."""

    vertices: tuple[int, ...]
    kind: TwinKind

    @property
    def size(self) -> int:
        return len(self.vertices)


def twin_classes(graph: nx.Graph) -> list[TwinClass]:
    """Partition the vertices into maximal twin classes.

    Vertices are first grouped by closed neighborhood (clique twins). The
    vertices left alone are then grouped by open neighborhood (independent
    twins). Remaining singletons are reported as trivial clique classes.
    Classes come out ordered by their smallest vertex.
    """
    nodes = sorted(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    open_nbhd = {index[v]: frozenset(index[w] for w in graph.neighbors(v)) for v in nodes}

    closed: dict[frozenset[int], list[int]] = {}
    for i in range(len(nodes)):
        closed.setdefault(open_nbhd[i] | {i}, []).append(i)

    classes: list[TwinClass] = []
    singles: dict[frozenset[int], list[int]] = {}
    for members in closed.values():
        if len(members) > 1:
            classes.append(TwinClass(tuple(members), TwinKind.CLIQUE))
        else:
            singles.setdefault(open_nbhd[members[0]], []).append(members[0])
    for members in singles.values():
        kind = TwinKind.INDEPENDENT if len(members) > 1 else TwinKind.CLIQUE
        classes.append(TwinClass(tuple(members), kind))
    return sorted(classes, key=lambda c: c.vertices[0])


def quotient_matrix(matrix: IntMatrix, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Block-row-average quotient of a partitioned matrix.

    Args:
        matrix: Square integer matrix
        partition: Blocks of row/column indices covering 0..n-1

    Returns:
        Quotient entries with a flag telling whether every block has
        constant row sums
    """
    covered = sorted(i for block in partition for i in block)
    if covered != list(range(matrix.dim)):
        raise NonEquitablePartitionError("Partition must cover every index exactly once")

    equitable = True
    entries = []
    for rows in partition:
        quotient_row = []
        for cols in partition:
            sums = [sum(matrix[i, j] for j in cols) for i in rows]
            if len(set(sums)) > 1:
                equitable = False
            quotient_row.append(Fraction(sum(sums), len(rows)))
        entries.append(tuple(quotient_row))
    return QuotientMatrix(entries=tuple(entries), equitable=equitable)


def twin_block_eigenvalue(matrix: IntMatrix, block: Sequence[int]) -> int:
    """Eigenvalue a - b carried by a twin block with diagonal a and off-diagonal b.

    Raises:
        NonEquitablePartitionError: If the block is not of the form aI + b(J - I)
            or its vertices are not interchangeable in the rest of the matrix
    """
    first = block[0]
    a = matrix[first, first]
    if len(block) == 1:
        return a
    b = matrix[first, block[1]]
    members = set(block)
    for i in block:
        if matrix[i, i] != a or any(matrix[i, j] != b for j in block if j != i):
            raise NonEquitablePartitionError(f"Block {tuple(block)} is not a twin block")
        for k in range(matrix.dim):
            if k not in members and (matrix[i, k] != matrix[first, k] or matrix[k, i] != matrix[k, first]):
                raise NonEquitablePartitionError(
                    f"Vertices {first} and {i} differ outside block {tuple(block)}"
                )
    return a - b


def predicted_twin_factors(graph: nx.Graph) -> SpectrumFactorization:
    """Linear D^L factors forced by twin classes.

    A clique class of size s with common transmission Tr gives (x - Tr - 1)^(s-1),
    an independent class gives (x - Tr - 2)^(s-1).

    Raises:
        DisconnectedGraphError: On disconnected input
    """
    trans = transmissions(graph)
    pairs: list[tuple[int, int]] = []
    for twin in twin_classes(graph):
        if twin.size < 2:
            continue
        shift = 1 if twin.kind == TwinKind.CLIQUE else 2
        pairs.append((trans[twin.vertices[0]] + shift, twin.size - 1))
    return SpectrumFactorization.from_pairs(pairs).merged()
