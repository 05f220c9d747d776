"""Adjacency, Laplacian and distance Laplacian matrices.

Rows and columns follow the sorted vertex order of the graph.
"""

import networkx as nx

from src.powergraph_spectra.core.enums import MatrixKind
from src.powergraph_spectra.models.matrix import IntMatrix
from src.powergraph_spectra.powergraph.metrics import distance_all_pairs


def adjacency_matrix(graph: nx.Graph) -> IntMatrix:
    """A(G)."""
    nodes = sorted(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    rows = [[0] * len(nodes) for _ in nodes]
    for u, v in graph.edges:
        rows[index[u]][index[v]] = 1
        rows[index[v]][index[u]] = 1
    return IntMatrix.from_rows(rows)


def laplacian_matrix(graph: nx.Graph) -> IntMatrix:
    """L(G) = Deg(G) - A(G); rows sum to zero."""
    adjacency = adjacency_matrix(graph)
    rows = [[-a for a in row] for row in adjacency.rows]
    for i, degree in enumerate(adjacency.row_sums()):
        rows[i][i] = degree
    return IntMatrix.from_rows(rows)


def distance_laplacian_matrix(graph: nx.Graph) -> IntMatrix:
    """D^L(G) = Tr(G) - D(G); rows sum to zero.

    Raises:
        DisconnectedGraphError: On disconnected input
    """
    distances = distance_all_pairs(graph)
    rows = [[-d for d in row] for row in distances.rows]
    for i, transmission in enumerate(distances.row_sums()):
        rows[i][i] = transmission
    return IntMatrix.from_rows(rows)


def graph_matrix(graph: nx.Graph, kind: MatrixKind) -> IntMatrix:
    """Dispatch on the matrix kind."""
    if kind == MatrixKind.A:
        return adjacency_matrix(graph)
    if kind == MatrixKind.L:
        return laplacian_matrix(graph)
    return distance_laplacian_matrix(graph)
