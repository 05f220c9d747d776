"""Command-line entry point for the power graph spectra toolkit.

Data goes to stdout (or --out), logs go to stderr. Exit codes: 0 success,
agreement or a confirmed candidate, 1 verified discrepancy, 2 usage or input error.
"""

import sys
from collections.abc import Callable
from functools import wraps
from pathlib import Path
from typing import Any

import click
from dotenv import load_dotenv
from pydantic import ValidationError

from src.powergraph_spectra.closedforms.latex import polynomial_latex
from src.powergraph_spectra.closedforms.registry import evaluate
from src.powergraph_spectra.config.constants import DEFAULT_SCAN_MAX_N
from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.core.enums import ExportFormat, MatrixKind, StructureFamily, TheoremId
from src.powergraph_spectra.core.exceptions import (
    DisconnectedGraphError,
    InvalidGroupSpecError,
    InvalidTheoremParamsError,
    PowerGraphSpectraError,
    UnsupportedExportError,
)
from src.powergraph_spectra.export.formats import (
    export,
    factorization_rows,
    spectrum_rows,
    to_csv,
    to_json,
)
from src.powergraph_spectra.models.group import GroupSpec
from src.powergraph_spectra.models.theorem import TheoremParams
from src.powergraph_spectra.powergraph.builders import divisor_graph
from src.powergraph_spectra.powergraph.metrics import diameter
from src.powergraph_spectra.powergraph.structures import parse_structure_params, structural_power_graph
from src.powergraph_spectra.specmat.charpoly import graph_charpoly
from src.powergraph_spectra.specmat.roots import sorted_spectrum
from src.powergraph_spectra.utils.logger import configure_logging, get_logger
from src.powergraph_spectra.verify.inequalities import check_inequalities
from src.powergraph_spectra.verify.invariance import check_witness_independence
from src.powergraph_spectra.verify.lemmas import check_diameter2, check_twin_lemmas
from src.powergraph_spectra.verify.oracle import (
    graph_spectrum_factorization,
    oracle_graph,
    require_connected,
)
from src.powergraph_spectra.verify.scan import scan_integrality
from src.powergraph_spectra.verify.structure import verify_structure
from src.powergraph_spectra.verify.theorems import verify_theorem

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2

# Flag blamed for each input error
_ERROR_FLAGS: dict[type[PowerGraphSpectraError], str] = {
    InvalidGroupSpecError: "--group",
    InvalidTheoremParamsError: "--params",
    UnsupportedExportError: "--format",
    DisconnectedGraphError: "--proper",
}

MATRIX_CHOICE = click.Choice([k.value for k in MatrixKind], case_sensitive=False)


def _flag_for(error: PowerGraphSpectraError) -> str | None:
    for cls, flag in _ERROR_FLAGS.items():
        if isinstance(error, cls):
            return flag
    return None


def domain_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """Turn domain errors into usage errors (exit code 2) naming the offending flag."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except PowerGraphSpectraError as e:
            logger.debug("Command failed", error=str(e), error_type=type(e).__name__)
            flag = _flag_for(e)
            if flag:
                raise click.BadParameter(str(e), param_hint=f"'{flag}'") from e
            raise click.UsageError(str(e)) from e

    return wrapper


def emit(text: str, out: str | None) -> None:
    """Write a payload to --out or stdout."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("Wrote output", path=out, bytes=len(text.encode("utf-8")))
    else:
        click.echo(text, nl=False)


def _structure_params(family: StructureFamily, params: str) -> tuple[int, ...]:
    try:
        return parse_structure_params(family, params)
    except InvalidGroupSpecError as e:
        raise click.BadParameter(str(e), param_hint="'--params'") from e


_group_option = click.option("--group", "group", required=True, help="Group spec, e.g. cyclic:12")
_proper_option = click.option("--proper", is_flag=True, help="Use the proper power graph")
_out_option = click.option("--out", type=click.Path(dir_okay=False), help="Write output to PATH")


def _format_option(default: str, choices: tuple[str, ...]):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(list(choices)),
        default=default,
        show_default=True,
        help="Output format",
    )


@click.group()
@click.option(
    "--env-file",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Path to .env file",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default=None,
    help="Logging level (default: LOG_LEVEL or INFO)",
)
@click.option(
    "--json-logs",
    is_flag=True,
    help="Output logs in JSON format instead of human-readable format",
)
def cli(env_file: str | None, log_level: str | None, json_logs: bool) -> None:
    """Exact spectra of power graphs of finite groups.

    Configuration is loaded from environment variables or a .env file.
    """
    if env_file:
        load_dotenv(env_file, override=True)
        get_settings.cache_clear()
    try:
        settings = get_settings()
    except ValidationError as e:
        click.echo(f"Error: invalid configuration: {e}", err=True)
        sys.exit(EXIT_USAGE)
    configure_logging(log_level=log_level or settings.log_level, json_logs=json_logs)


@cli.command()
@_group_option
@_proper_option
@_format_option("dot", ("dot", "json"))
@_out_option
@domain_errors
def build(group: str, proper: bool, fmt: str, out: str | None) -> None:
    """Print the power graph of a group."""
    graph = oracle_graph(GroupSpec.parse(group), proper)
    emit(export(graph, fmt), out)


@cli.command()
@_group_option
@click.option("--matrix", "matrix", type=MATRIX_CHOICE, default="DL", show_default=True)
@_proper_option
@click.option("--numeric", is_flag=True, help="Add certified approximations of every root")
@_format_option("json", ("json", "csv"))
@_out_option
@domain_errors
def spectrum(
    group: str, matrix: str, proper: bool, numeric: bool, fmt: str, out: str | None
) -> None:
    """Print integer roots with multiplicities and residual factors."""
    kind = MatrixKind(matrix.upper())
    spec = GroupSpec.parse(group)
    graph = oracle_graph(spec, proper)
    factorization = graph_spectrum_factorization(graph, kind)

    settings = get_settings()
    roots = (
        sorted_spectrum(factorization, settings.tolerance, settings.max_bisection_steps)
        if numeric
        else None
    )
    if fmt == "csv":
        rows = spectrum_rows(roots) if roots is not None else factorization_rows(factorization)
        header = ("root", "multiplicity") if roots is not None else ("factor", "multiplicity")
        emit(to_csv(rows, header), out)
        return
    payload: dict[str, Any] = {
        "group": str(spec),
        "matrix": kind.value,
        "proper": proper,
        "order": str(graph.number_of_nodes()),
        **factorization.to_json_dict(),
    }
    if roots is not None:
        payload["numeric"] = [r.to_json_dict() for r in roots]
    emit(to_json(payload), out)


@cli.command()
@_group_option
@click.option("--matrix", "matrix", type=MATRIX_CHOICE, default="DL", show_default=True)
@_proper_option
@_format_option("json", ("json", "latex"))
@_out_option
@domain_errors
def charpoly(group: str, matrix: str, proper: bool, fmt: str, out: str | None) -> None:
    """Print the monic characteristic polynomial."""
    kind = MatrixKind(matrix.upper())
    spec = GroupSpec.parse(group)
    graph = oracle_graph(spec, proper)
    require_connected(graph, kind)
    poly = graph_charpoly(graph, kind, full_max_order=get_settings().full_charpoly_max_order)
    if fmt == "latex":
        emit(polynomial_latex(poly) + "\n", out)
    else:
        emit(to_json({"group": str(spec), "matrix": kind.value, **poly.to_json_dict()}), out)


@cli.command("closed-form")
@click.argument("theorem", type=click.Choice([t.value for t in TheoremId]))
@click.option("--params", "params", default="", help="Parameters, e.g. p=7,q=3,r=2")
@_format_option("json", ("json", "latex", "csv"))
@_out_option
@domain_errors
def closed_form(theorem: str, params: str, fmt: str, out: str | None) -> None:
    """Evaluate a closed form at concrete parameters."""
    report = evaluate(TheoremParams.parse(theorem, params))
    emit(export(report, fmt), out)


@cli.command()
@click.argument("theorem", required=False, type=click.Choice([t.value for t in TheoremId]))
@click.option("--params", "params", default="", help="Theorem or structure parameters")
@click.option("--group", "group", default=None, help="Check lemmas and inequalities on a group")
@click.option(
    "--structure",
    "structure",
    type=click.Choice([f.value for f in StructureFamily]),
    default=None,
    help="Compare a joined-union structure with its group",
)
@_proper_option
@_out_option
@domain_errors
def verify(
    theorem: str | None,
    params: str,
    group: str | None,
    structure: str | None,
    proper: bool,
    out: str | None,
) -> None:
    """Adjudicate a theorem, a structure, or a group's lemmas and inequalities."""
    chosen = [x for x in (theorem, group, structure) if x]
    if len(chosen) != 1:
        raise click.UsageError("Give exactly one of THEOREM, --group or --structure")

    if theorem:
        report = verify_theorem(theorem, TheoremParams.parse(theorem, params))
        emit(to_json(report.to_payload()), out)
        sys.exit(EXIT_OK if report.confirmed else EXIT_DISCREPANCY)

    if structure:
        family = StructureFamily(structure)
        structure_report = verify_structure(family, _structure_params(family, params))
        emit(to_json(structure_report.to_payload()), out)
        sys.exit(EXIT_OK if structure_report.equal else EXIT_DISCREPANCY)

    spec = GroupSpec.parse(group)
    graph = oracle_graph(spec, proper)
    require_connected(graph, MatrixKind.DL)
    inequalities = check_inequalities(spec, proper)
    twins = check_twin_lemmas(graph)
    payload: dict[str, Any] = {
        "inequalities": inequalities.to_payload(),
        "twin_lemmas": twins.to_payload(),
    }
    holds = inequalities.holds and twins.holds
    if diameter(graph) <= 2:
        transform = check_diameter2(graph)
        payload["diameter2"] = transform.to_payload()
        holds = holds and transform.holds
    witness = check_witness_independence(spec)
    payload["witness"] = witness.to_payload()
    holds = holds and witness.holds
    emit(to_json(payload), out)
    sys.exit(EXIT_OK if holds else EXIT_DISCREPANCY)


def _csv_cells(payload: dict[str, object]) -> dict[str, str]:
    return {
        key: str(value).lower() if isinstance(value, bool) else str(value)
        for key, value in payload.items()
        if key != "witness"
    }


@cli.command()
@click.option(
    "--max-n",
    "max_n",
    type=int,
    default=DEFAULT_SCAN_MAX_N,
    show_default=True,
    help="Scan 2 <= n <= N",
)
@_format_option("json", ("json", "csv"))
@_out_option
@domain_errors
def scan(max_n: int, fmt: str, out: str | None) -> None:
    """Integrality scan of P(Z_n)."""
    try:
        rows = scan_integrality(max_n)
    except InvalidGroupSpecError as e:
        raise click.BadParameter(str(e), param_hint="--max-n") from e
    if fmt == "csv":
        payloads = [_csv_cells(row.to_payload()) for row in rows]
        header = tuple(payloads[0]) if payloads else ()
        table = [tuple(cells.values()) for cells in payloads]
        emit(to_csv(table, header), out)
    else:
        emit(to_json([row.to_payload() for row in rows]), out)
    violations = [
        r.n for r in rows if r.violates_laplacian_conjecture or r.violates_distance_conjecture
    ]
    sys.exit(EXIT_DISCREPANCY if violations else EXIT_OK)


@cli.command("export")
@click.option(
    "--structure",
    "structure",
    type=click.Choice([f.value for f in StructureFamily]),
    default=None,
    help="Joined-union structure of a family",
)
@click.option("--divisor-graph", "divisor_n", type=int, default=None, help="Divisor graph of N")
@click.option(
    "--theorem", "theorem", type=click.Choice([t.value for t in TheoremId]), default=None
)
@click.option("--group", "group", default=None, help="Power graph of a group")
@_proper_option
@click.option("--params", "params", default="", help="Structure or theorem parameters")
@_format_option("dot", tuple(f.value for f in ExportFormat))
@_out_option
@domain_errors
def export_command(
    structure: str | None,
    divisor_n: int | None,
    theorem: str | None,
    group: str | None,
    proper: bool,
    params: str,
    fmt: str,
    out: str | None,
) -> None:
    """Export a structure, divisor graph, closed form or power graph."""
    chosen = [x for x in (structure, divisor_n, theorem, group) if x is not None]
    if len(chosen) != 1:
        raise click.UsageError(
            "Give exactly one of --structure, --divisor-graph, --theorem or --group"
        )

    payload: Any
    if structure:
        family = StructureFamily(structure)
        payload = structural_power_graph(family, _structure_params(family, params))
    elif divisor_n is not None:
        try:
            payload = divisor_graph(divisor_n)
        except InvalidGroupSpecError as e:
            raise click.BadParameter(str(e), param_hint="--divisor-graph") from e
    elif theorem:
        payload = evaluate(TheoremParams.parse(theorem, params))
    else:
        payload = oracle_graph(GroupSpec.parse(group), proper)
    emit(export(payload, fmt), out)


def main() -> None:
    """Console entry point."""
    cli()


if __name__ == "__main__":
    main()
