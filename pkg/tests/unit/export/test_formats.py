"""Tests for graph, factorization and report serialization."""

import json

import pytest

from src.powergraph_spectra.closedforms.pqr import dl_z2_semidirect_z4
from src.powergraph_spectra.core.enums import ExportFormat
from src.powergraph_spectra.core.exceptions import UnsupportedExportError
from src.powergraph_spectra.export.formats import (
    export,
    factorization_rows,
    graph_payload,
    graph_to_dot,
    spectrum_rows,
    to_csv,
    to_json,
)
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization
from src.powergraph_spectra.powergraph.builders import divisor_graph, star_graph
from src.powergraph_spectra.specmat.roots import isolate_real_roots
from src.powergraph_spectra.verify.lemmas import check_diameter2


class TestDot:
    """Test DOT rendering."""

    def test_star(self):
        """Header, one line per node and edge, closing brace."""
        dot = graph_to_dot(star_graph(2))
        lines = dot.splitlines()
        assert lines[0] == 'graph "K_1,2" {'
        assert lines[1] == '  0 [label="0", group="K_1,2", color="#1f77b4"];'
        assert lines[-3:] == ["  0 -- 1;", "  0 -- 2;", "}"]
        assert dot.endswith("}\n")

    def test_parts_get_distinct_colors(self, p_z6):
        """Element orders map to palette entries in first-seen order."""
        dot = graph_to_dot(p_z6)
        assert '  0 [label="0", group="order 1", color="#1f77b4"];' in dot
        assert '  1 [label="1", group="order 6", color="#ff7f0e"];' in dot

    def test_quotes_are_escaped(self):
        """Names with quotes stay valid DOT."""
        graph = star_graph(1)
        graph.graph["name"] = 'a"b'
        assert graph_to_dot(graph).startswith('graph "a\\"b" {')

    def test_deterministic(self, p_d10):
        """Repeated rendering is identical."""
        assert graph_to_dot(p_d10) == graph_to_dot(p_d10)


class TestPayloads:
    """Test JSON and CSV payloads."""

    def test_graph_payload(self):
        """Counts are strings; edges are sorted pairs."""
        payload = graph_payload(star_graph(2))
        assert payload["order"] == "3"
        assert payload["size"] == "2"
        assert payload["edges"] == [["0", "1"], ["0", "2"]]

    def test_factorization_rows(self):
        """Linear factors print their root, others the polynomial."""
        factorization = SpectrumFactorization.from_pairs([(4, 2), (IntPolynomial((-2, 0, 1)), 1)])
        assert factorization_rows(factorization) == [("4", "2"), ("x**2 - 2", "1")]

    def test_spectrum_rows(self):
        """Exact roots print as integers, others as 12 significant digits."""
        rows = spectrum_rows(isolate_real_roots(IntPolynomial((-2, 0, 1)) * IntPolynomial.linear(3)))
        assert rows[-1] == ("3", "1")
        assert rows[1][0].startswith("1.41421356")

    def test_csv(self):
        """Header row then data rows."""
        assert to_csv([("0", "1"), ("8", "1")]) == "factor,multiplicity\n0,1\n8,1\n"
        assert to_csv([("2", "true")], header=("n", "flag")) == "n,flag\n2,true\n"

    def test_json(self):
        """Indented with a trailing newline."""
        text = to_json({"a": "1"})
        assert text == '{\n  "a": "1"\n}\n'


class TestExport:
    """Test format dispatch."""

    def test_graph_as_json(self):
        """Graphs export as DOT or JSON."""
        payload = json.loads(export(star_graph(3), "json"))
        assert payload["name"] == "K_1,3"

    def test_divisor_graph_as_dot(self):
        """Divisor graphs export through their graph."""
        assert export(divisor_graph(12), ExportFormat.DOT).startswith('graph "Delta_12" {')

    def test_closed_form_as_latex(self):
        """Closed forms export in factored notation."""
        assert export(dl_z2_semidirect_z4(), "latex") == "x(x-8)(x-12)^{2}(x-15)^{4}\n"

    def test_closed_form_as_json(self):
        """Closed form payload keeps exact integers as strings."""
        payload = json.loads(export(dl_z2_semidirect_z4(), "json"))
        assert payload["product_degree"] == "8"
        assert payload["factors"][0] == {"coeffs": ["0", "1"], "mult": 1}

    def test_factorization_as_csv(self):
        """Factorizations export as rows."""
        text = export(SpectrumFactorization.from_roots({0: 1, 8: 1}), "csv")
        assert text == "factor,multiplicity\n0,1\n8,1\n"

    def test_report_as_json(self, p_z6):
        """Reports with to_payload export as JSON."""
        payload = json.loads(export(check_diameter2(p_z6), "json"))
        assert payload["holds"] is True

    def test_graph_as_latex_unsupported(self):
        """LaTeX applies to factorizations only."""
        with pytest.raises(UnsupportedExportError):
            export(star_graph(3), "latex")

    def test_report_as_dot_unsupported(self, p_z6):
        """Reports have no DOT form."""
        with pytest.raises(UnsupportedExportError):
            export(check_diameter2(p_z6), "dot")

    def test_unknown_format(self):
        """Unknown format names raise."""
        with pytest.raises(UnsupportedExportError):
            export(star_graph(3), "xml")
