"""Serialization of graphs, factorizations and reports.

Output is deterministic: nodes, edges and keys are emitted in sorted or
construction order and no timestamps are written.
"""

import csv
import io
import json
from typing import Any

import networkx as nx

from src.powergraph_spectra.closedforms.latex import factorization_latex
from src.powergraph_spectra.config.constants import palette_color
from src.powergraph_spectra.core.enums import ExportFormat
from src.powergraph_spectra.core.exceptions import UnsupportedExportError
from src.powergraph_spectra.models.polynomial import SpectrumFactorization
from src.powergraph_spectra.models.theorem import ClosedFormReport
from src.powergraph_spectra.powergraph.builders import DivisorGraph
from src.powergraph_spectra.specmat.roots import RealRoot


def _quote(text: object) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(graph: nx.Graph) -> str:
    """DOT text; nodes sharing a ``part`` form one group and share a color."""
    parts: dict[object, int] = {}
    for v in sorted(graph.nodes):
        parts.setdefault(graph.nodes[v].get("part", ""), len(parts))

    lines = [f"graph {_quote(graph.graph.get('name', 'G'))} {{"]
    for v in sorted(graph.nodes):
        attrs = graph.nodes[v]
        part = attrs.get("part", "")
        lines.append(
            f"  {v} [label={_quote(attrs.get('label', v))}, group={_quote(part)}, "
            f"color={_quote(palette_color(parts[part]))}];"
        )
    for u, w in sorted(tuple(sorted(e)) for e in graph.edges):
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_payload(graph: nx.Graph) -> dict[str, Any]:
    return {
        "name": str(graph.graph.get("name", "")),
        "order": str(graph.number_of_nodes()),
        "size": str(graph.number_of_edges()),
        "nodes": [
            {
                "id": str(v),
                "label": str(graph.nodes[v].get("label", v)),
                "part": str(graph.nodes[v].get("part", "")),
            }
            for v in sorted(graph.nodes)
        ],
        "edges": [[str(u), str(w)] for u, w in sorted(tuple(sorted(e)) for e in graph.edges)],
    }


def factorization_rows(factorization: SpectrumFactorization) -> list[tuple[str, str]]:
    """(root or factor, multiplicity) rows."""
    return [
        (str(fp.root) if fp.root is not None else str(fp.factor), str(fp.multiplicity))
        for fp in factorization.factors
    ]


def spectrum_rows(spectrum: list[RealRoot]) -> list[tuple[str, str]]:
    return [
        (str(r.exact_int()) if r.exact_int() is not None else f"{r.value:.12g}", str(r.multiplicity))
        for r in spectrum
    ]


def to_csv(
    rows: list[tuple[str, ...]], header: tuple[str, ...] = ("factor", "multiplicity")
) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def export(payload: Any, fmt: ExportFormat | str) -> str:
    """Render a graph, divisor graph, factorization, closed form or report.

    Args:
        payload: nx.Graph, DivisorGraph, SpectrumFactorization, ClosedFormReport,
            or any report with ``to_payload``
        fmt: Output format

    Raises:
        UnsupportedExportError: If the format does not apply to the payload
    """
    try:
        fmt = ExportFormat(fmt)
    except ValueError as e:
        raise UnsupportedExportError(f"Unknown export format: {fmt!r}") from e
    if isinstance(payload, DivisorGraph):
        payload = payload.graph

    if isinstance(payload, nx.Graph):
        if fmt == ExportFormat.DOT:
            return graph_to_dot(payload)
        if fmt == ExportFormat.JSON:
            return to_json(graph_payload(payload))
    elif isinstance(payload, SpectrumFactorization | ClosedFormReport):
        factorization = (
            payload.factorization if isinstance(payload, ClosedFormReport) else payload
        )
        if fmt == ExportFormat.LATEX:
            return factorization_latex(factorization) + "\n"
        if fmt == ExportFormat.CSV:
            return to_csv(factorization_rows(factorization))
        if fmt == ExportFormat.JSON:
            if isinstance(payload, ClosedFormReport):
                return to_json(payload.to_payload())
            return to_json(factorization.to_json_dict())
    elif hasattr(payload, "to_payload") and fmt == ExportFormat.JSON:
        return to_json(payload.to_payload())

    raise UnsupportedExportError(f"Cannot export {type(payload).__name__} as {fmt.value}")
