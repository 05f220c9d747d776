"""Vertex connectivity."""

import networkx as nx

from src.powergraph_spectra.core.exceptions import DisconnectedGraphError
from src.powergraph_spectra.powergraph.metrics import is_connected


def vertex_connectivity(graph: nx.Graph) -> int:
    """Smallest vertex cut that disconnects the graph or leaves one vertex.

    Max-flow over non-adjacent pairs; K_n gives n - 1.

    Raises:
        DisconnectedGraphError: On disconnected input
    """
    if not is_connected(graph):
        raise DisconnectedGraphError("Vertex connectivity needs a connected graph")
    n = graph.number_of_nodes()
    if graph.number_of_edges() == n * (n - 1) // 2:
        return n - 1
    return int(nx.node_connectivity(graph))
