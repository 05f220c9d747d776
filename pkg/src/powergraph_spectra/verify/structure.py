"""Compare joined-union decompositions with the group-built power graphs."""

from collections.abc import Sequence

from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.core.enums import MatrixKind, StructureFamily
from src.powergraph_spectra.models.reports import StructureReport
from src.powergraph_spectra.powergraph.metrics import degree_sequence, is_connected
from src.powergraph_spectra.powergraph.structures import structural_power_graph, structure_source
from src.powergraph_spectra.specmat.charpoly import graph_charpoly
from src.powergraph_spectra.utils.decorators import timed
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.verify.oracle import oracle_graph

logger = get_logger(__name__)


@timed("Structure verified")
def verify_structure(family: StructureFamily | str, params: Sequence[int] = ()) -> StructureReport:
    """Degree sequences and A, L, D^L polynomials of structure and group graph.

    Polynomials are only compared when the vertex counts agree; D^L is
    skipped for disconnected graphs.

    Raises:
        InvalidGroupSpecError: On invalid parameters
    """
    family = StructureFamily(family)
    params = tuple(params)
    structure = structural_power_graph(family, params)
    spec, proper = structure_source(family, params)
    graph = oracle_graph(spec, proper)

    same_order = structure.number_of_nodes() == graph.number_of_nodes()
    charpolys: dict[str, bool] = {}
    if same_order:
        max_order = get_settings().full_charpoly_max_order
        for kind in MatrixKind:
            if kind == MatrixKind.DL and not (is_connected(structure) and is_connected(graph)):
                continue
            charpolys[kind.value] = graph_charpoly(
                structure, kind, full_max_order=max_order
            ) == graph_charpoly(graph, kind, full_max_order=max_order)

    report = StructureReport(
        family=family.value,
        params=params,
        group=spec,
        structure_order=structure.number_of_nodes(),
        group_order=graph.number_of_nodes(),
        degree_sequences_equal=degree_sequence(structure) == degree_sequence(graph),
        charpolys_equal=charpolys,
    )
    if report.equal:
        logger.info("Structure matches group power graph", family=family.value, params=params)
    else:
        logger.warning(
            "Structure differs from group power graph",
            family=family.value,
            params=params,
            structure_order=report.structure_order,
            group_order=report.group_order,
        )
    return report
