"""Power graphs, joined unions and the divisor graph.

Graphs are networkx graphs on the vertices 0..n-1. Every vertex carries a
``label`` (element or part name) and a ``part`` (class label) attribute.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from src.powergraph_spectra.core.exceptions import ArityMismatchError, InvalidGroupSpecError
from src.powergraph_spectra.models.group import FiniteGroup
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.utils.numbers import phi, proper_divisors

logger = get_logger(__name__)


def power_graph(group: FiniteGroup) -> nx.Graph:
    """Power graph P(G): x ~ y iff one of them is a power of the other.

    Vertices are the element indices; ``part`` is the element order.
    """
    graph = nx.Graph(name=f"P({group.name})")
    for a in group.elements:
        graph.add_node(a, label=group.label_of(a), part=f"order {group.element_order(a)}")
    for y in group.elements:
        for x in group.cyclic_subgroup(y):
            if x != y:
                graph.add_edge(x, y)
    logger.debug(
        "Built power graph",
        group=group.name,
        vertices=graph.number_of_nodes(),
        edges=graph.number_of_edges(),
    )
    return graph


def proper_power_graph(group: FiniteGroup) -> nx.Graph:
    """Power graph with the identity vertex removed, relabeled to 0..n-2.

    The result may be disconnected; distance routines reject it then.
    """
    full = power_graph(group)
    full.remove_node(group.identity)
    mapping = {old: new for new, old in enumerate(sorted(full.nodes))}
    graph = nx.relabel_nodes(full, mapping)
    graph.graph["name"] = f"P*({group.name})"
    if graph.number_of_nodes() > 0 and not nx.is_connected(graph):
        logger.info("Proper power graph is disconnected", group=group.name)
    return graph


def complete_graph(k: int) -> nx.Graph:
    """K_k with default labels."""
    return _labeled(nx.complete_graph(k), f"K_{k}")


def empty_graph(k: int) -> nx.Graph:
    """Complement of K_k (k isolated vertices)."""
    return _labeled(nx.empty_graph(k), f"K̄_{k}")


def path_graph(k: int) -> nx.Graph:
    """Path on k vertices."""
    return _labeled(nx.path_graph(k), f"P_{k}")


def star_graph(leaves: int) -> nx.Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return _labeled(nx.star_graph(leaves), f"K_1,{leaves}")


def _labeled(graph: nx.Graph, name: str) -> nx.Graph:
    graph.graph["name"] = name
    for v in graph.nodes:
        graph.nodes[v]["label"] = str(v)
        graph.nodes[v]["part"] = name
    return graph


def joined_union(base: nx.Graph, parts: Sequence[nx.Graph]) -> nx.Graph:
    """Joined union base[G_1, ..., G_t].

    Disjoint union of the parts plus all edges between parts i and j
    whenever i ~ j in the base graph. Vertices are numbered part by part in
    order; ``part`` records the part index.

    Raises:
        ArityMismatchError: If the number of parts differs from the base order
    """
    t = base.number_of_nodes()
    if len(parts) != t:
        raise ArityMismatchError(f"Base graph has {t} vertices but {len(parts)} parts given")
    base_order = sorted(base.nodes)

    graph = nx.Graph()
    blocks: list[list[int]] = []
    offset = 0
    for index, part in enumerate(parts):
        part_nodes = sorted(part.nodes)
        local = {v: offset + k for k, v in enumerate(part_nodes)}
        for v in part_nodes:
            graph.add_node(local[v], label=f"{index}.{part.nodes[v].get('label', v)}", part=index)
        graph.add_edges_from((local[u], local[v]) for u, v in part.edges)
        blocks.append([local[v] for v in part_nodes])
        offset += len(part_nodes)

    position = {v: i for i, v in enumerate(base_order)}
    for u, v in base.edges:
        for x in blocks[position[u]]:
            for y in blocks[position[v]]:
                graph.add_edge(x, y)
    return graph


def join(*graphs: nx.Graph) -> nx.Graph:
    """G_1 v G_2 v ... with every pair of parts joined."""
    return joined_union(nx.complete_graph(len(graphs)), list(graphs))


def disjoint_union(*graphs: nx.Graph) -> nx.Graph:
    """G_1 u G_2 u ... without joins."""
    return joined_union(nx.empty_graph(len(graphs)), list(graphs))


@dataclass(frozen=True)
class DivisorGraph:
    """Divisor graph on the proper divisors of n, adjacency by divisibility."""

    n: int
    graph: nx.Graph
    divisors: tuple[int, ...]
    phis: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.divisors)


def divisor_graph(n: int) -> DivisorGraph:
    """Divisor graph of n: vertices d_1 < ... < d_t, d_i ~ d_j iff d_i | d_j.

    Args:
        n: Integer >= 2 (primes give the empty graph)

    Returns:
        Divisor graph with phi(d_i) per vertex
    """
    if n < 2:
        raise InvalidGroupSpecError(f"divisor_graph requires n >= 2, got {n}")
    divisors = proper_divisors(n)
    graph = nx.Graph(name=f"Delta_{n}")
    for i, d in enumerate(divisors):
        graph.add_node(i, label=str(d), part=f"d={d}", divisor=d, phi=phi(d))
    for i, a in enumerate(divisors):
        for j in range(i + 1, len(divisors)):
            if divisors[j] % a == 0:
                graph.add_edge(i, j)
    return DivisorGraph(
        n=n,
        graph=graph,
        divisors=tuple(divisors),
        phis=tuple(phi(d) for d in divisors),
    )
