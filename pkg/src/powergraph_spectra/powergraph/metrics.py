"""Distances, connectivity and degree statistics."""

import networkx as nx

from src.powergraph_spectra.core.exceptions import DisconnectedGraphError
from src.powergraph_spectra.models.matrix import IntMatrix


def is_connected(graph: nx.Graph) -> bool:
    """Connectivity; the single-vertex graph is connected."""
    if graph.number_of_nodes() == 0:
        return False
    return nx.is_connected(graph)


def universal_vertices(graph: nx.Graph) -> list[int]:
    """Vertices adjacent to every other vertex."""
    n = graph.number_of_nodes()
    return sorted(v for v in graph.nodes if graph.degree(v) == n - 1)


def degree_sequence(graph: nx.Graph) -> list[int]:
    """Degrees in non-increasing order."""
    return sorted((d for _, d in graph.degree), reverse=True)


def distance_all_pairs(graph: nx.Graph) -> IntMatrix:
    """Shortest-path distance matrix indexed by sorted vertex order.

    Graphs with a universal vertex have diameter at most 2 and are filled
    directly from adjacency; others go through BFS.

    Raises:
        DisconnectedGraphError: If some pair of vertices is unreachable
    """
    nodes = sorted(graph.nodes)
    n = len(nodes)
    index = {v: i for i, v in enumerate(nodes)}

    if n and universal_vertices(graph):
        rows = [[2] * n for _ in range(n)]
        for v in nodes:
            i = index[v]
            rows[i][i] = 0
            for w in graph.neighbors(v):
                rows[i][index[w]] = 1
        return IntMatrix.from_rows(rows)

    rows = [[0] * n for _ in range(n)]
    for source, lengths in nx.all_pairs_shortest_path_length(graph):
        if len(lengths) != n:
            missing = next(v for v in nodes if v not in lengths)
            raise DisconnectedGraphError(
                f"Vertices {source} and {missing} are in different components"
            )
        i = index[source]
        for target, d in lengths.items():
            rows[i][index[target]] = d
    return IntMatrix.from_rows(rows)


def diameter(graph: nx.Graph) -> int:
    """Largest pairwise distance.

    Raises:
        DisconnectedGraphError: On disconnected input
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("Diameter is undefined for a disconnected graph")
    if graph.number_of_nodes() == 1:
        return 0
    return max(max(row) for row in distance_all_pairs(graph).rows)


def transmissions(graph: nx.Graph) -> list[int]:
    """Tr(v) = sum of distances from v, in sorted vertex order.

    Raises:
        DisconnectedGraphError: On disconnected input
    """
    return distance_all_pairs(graph).row_sums()


def wiener_index(graph: nx.Graph) -> int:
    """Sum of distances over unordered vertex pairs."""
    return sum(transmissions(graph)) // 2


def complement_is_connected(graph: nx.Graph) -> bool:
    return is_connected(nx.complement(graph))
