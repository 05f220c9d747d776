"""Brute-force oracle: group table to power graph to exact characteristic polynomial."""

import networkx as nx

from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.core.enums import CharpolyMethod, MatrixKind
from src.powergraph_spectra.core.exceptions import DisconnectedGraphError
from src.powergraph_spectra.groups.constructors import build_group
from src.powergraph_spectra.models.group import GroupSpec
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization
from src.powergraph_spectra.powergraph.builders import power_graph, proper_power_graph
from src.powergraph_spectra.powergraph.metrics import is_connected
from src.powergraph_spectra.specmat.charpoly import graph_charpoly, graph_factorization
from src.powergraph_spectra.specmat.roots import RealRoot, factor_integer_roots, sorted_spectrum
from src.powergraph_spectra.utils.decorators import timed
from src.powergraph_spectra.utils.logger import get_logger

logger = get_logger(__name__)


def oracle_graph(spec: GroupSpec | str, proper: bool = False) -> nx.Graph:
    """Power graph (or proper power graph) of a group spec."""
    group = build_group(spec)
    return proper_power_graph(group) if proper else power_graph(group)


def require_connected(graph: nx.Graph, kind: MatrixKind) -> None:
    """Distance matrices need a connected graph.

    Raises:
        DisconnectedGraphError: For D^L of a disconnected graph
    """
    if kind == MatrixKind.DL and not is_connected(graph):
        raise DisconnectedGraphError(
            f"{graph.graph.get('name', 'graph')} is disconnected; its distance Laplacian is undefined"
        )


@timed("Oracle charpoly computed")
def oracle_charpoly(
    spec: GroupSpec | str,
    kind: MatrixKind,
    proper: bool = False,
    method: CharpolyMethod = CharpolyMethod.AUTO,
) -> IntPolynomial:
    """Exact monic characteristic polynomial through the full pipeline.

    Raises:
        InvalidGroupSpecError: On invalid specs
        DisconnectedGraphError: For D^L of a disconnected proper power graph
    """
    graph = oracle_graph(spec, proper)
    require_connected(graph, kind)
    return graph_charpoly(
        graph, kind, method=method, full_max_order=get_settings().full_charpoly_max_order
    )


def graph_spectrum_factorization(graph: nx.Graph, kind: MatrixKind) -> SpectrumFactorization:
    """Integer roots with multiplicities, then residual factors without integer roots.

    Raises:
        DisconnectedGraphError: For D^L of a disconnected graph
    """
    require_connected(graph, kind)
    return factor_integer_roots(graph_factorization(graph, kind))


def graph_spectrum(graph: nx.Graph, kind: MatrixKind) -> list[RealRoot]:
    """Certified spectrum, ascending, one entry per distinct root."""
    settings = get_settings()
    return sorted_spectrum(
        graph_spectrum_factorization(graph, kind),
        tol=settings.tolerance,
        max_steps=settings.max_bisection_steps,
    )
