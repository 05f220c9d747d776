"""Twin-factor and diameter-2 lemmas checked on concrete graphs."""

import networkx as nx

from src.powergraph_spectra.closedforms.transform import diameter2_transform
from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.core.enums import MatrixKind
from src.powergraph_spectra.core.exceptions import DiameterTooLargeError
from src.powergraph_spectra.models.polynomial import SpectrumFactorization
from src.powergraph_spectra.models.reports import Diameter2Report, TwinLemmaReport
from src.powergraph_spectra.powergraph.metrics import diameter
from src.powergraph_spectra.specmat.charpoly import graph_charpoly
from src.powergraph_spectra.specmat.quotient import predicted_twin_factors
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.verify.oracle import require_connected

logger = get_logger(__name__)


def _name(graph: nx.Graph) -> str:
    return str(graph.graph.get("name", f"graph on {graph.number_of_nodes()} vertices"))


def check_twin_lemmas(graph: nx.Graph) -> TwinLemmaReport:
    """Twin classes predict (x - Tr - 1)^(s-1) and (x - Tr - 2)^(s-1) factors of D^L.

    Raises:
        DisconnectedGraphError: On disconnected input
    """
    require_connected(graph, MatrixKind.DL)
    predicted = predicted_twin_factors(graph)
    oracle = graph_charpoly(
        graph, MatrixKind.DL, full_max_order=get_settings().full_charpoly_max_order
    )
    violations = []
    for fp in predicted.factors:
        observed = fp.factor.multiplicity_in(oracle)
        if observed < fp.multiplicity:
            violations.append(
                f"root {fp.root}: predicted multiplicity {fp.multiplicity}, observed {observed}"
            )
    if violations:
        logger.warning("Twin factor lemma violated", graph=_name(graph), violations=violations)
    return TwinLemmaReport(
        graph=_name(graph),
        order=graph.number_of_nodes(),
        predicted=predicted,
        violations=tuple(violations),
    )


def check_diameter2(graph: nx.Graph) -> Diameter2Report:
    """Transform the Laplacian polynomial and compare with the D^L polynomial.

    Raises:
        DisconnectedGraphError: On disconnected input
        DiameterTooLargeError: If the diameter exceeds 2
    """
    d = diameter(graph)
    if d > 2:
        raise DiameterTooLargeError(f"{_name(graph)} has diameter {d}; the transform needs <= 2")
    n = graph.number_of_nodes()
    max_order = get_settings().full_charpoly_max_order
    lap = graph_charpoly(graph, MatrixKind.L, full_max_order=max_order)
    dist = graph_charpoly(graph, MatrixKind.DL, full_max_order=max_order)
    transformed = diameter2_transform(SpectrumFactorization.from_pairs([(lap, 1)]), n)
    holds = transformed.expand() == dist
    if not holds:
        logger.warning("Diameter-2 transform mismatch", graph=_name(graph), order=n)
    return Diameter2Report(graph=_name(graph), order=n, diameter=d, holds=holds)
