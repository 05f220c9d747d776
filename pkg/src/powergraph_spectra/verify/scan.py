"""Integrality scan of P(Z_n) against the two integrality conjectures."""

from concurrent.futures import ProcessPoolExecutor

from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.core.enums import MatrixKind
from src.powergraph_spectra.core.exceptions import InvalidGroupSpecError
from src.powergraph_spectra.groups.constructors import make_cyclic
from src.powergraph_spectra.models.polynomial import SpectrumFactorization
from src.powergraph_spectra.models.reports import ConjectureRow
from src.powergraph_spectra.powergraph.builders import power_graph
from src.powergraph_spectra.specmat.roots import RealRoot, sorted_spectrum
from src.powergraph_spectra.utils.decorators import timed
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.utils.numbers import classify
from src.powergraph_spectra.verify.oracle import graph_spectrum_factorization

logger = get_logger(__name__)


def _flat(spectrum: list[RealRoot]) -> list[RealRoot]:
    flat: list[RealRoot] = []
    for root in spectrum:
        flat.extend([root] * root.multiplicity)
    return flat


def _witness(*factorizations: SpectrumFactorization) -> str | None:
    for factorization in factorizations:
        for fp in factorization.nonlinear():
            return str(fp.factor)
    return None


def scan_row(n: int) -> ConjectureRow:
    """Integrality facts of P(Z_n)."""
    settings = get_settings()
    graph = power_graph(make_cyclic(n))
    lap = graph_spectrum_factorization(graph, MatrixKind.L)
    dist = graph_spectrum_factorization(graph, MatrixKind.DL)
    lap_spectrum = _flat(sorted_spectrum(lap, settings.tolerance, settings.max_bisection_steps))
    dist_spectrum = _flat(sorted_spectrum(dist, settings.tolerance, settings.max_bisection_steps))

    row = ConjectureRow(
        n=n,
        number_class=classify(n),
        algebraic_connectivity_integral=lap_spectrum[1].exact_int() is not None,
        laplacian_integral=not lap.nonlinear(),
        largest_distance_root_integral=dist_spectrum[-1].exact_int() is not None,
        distance_laplacian_integral=not dist.nonlinear(),
        witness=_witness(lap, dist),
    )
    if row.violates_laplacian_conjecture or row.violates_distance_conjecture:
        logger.error("Integrality conjecture violated", n=n, witness=row.witness)
    return row


@timed("Integrality scan finished")
def scan_integrality(n_max: int, threads: int | None = None) -> list[ConjectureRow]:
    """Rows for 2 <= n <= n_max, in increasing n.

    Args:
        n_max: Largest n scanned
        threads: Worker processes (default: TOOL_THREADS)

    Raises:
        InvalidGroupSpecError: If n_max < 2
    """
    if n_max < 2:
        raise InvalidGroupSpecError(f"--max-n must be >= 2, got {n_max}")
    workers = threads or get_settings().threads
    values = range(2, n_max + 1)
    logger.info("Starting integrality scan", n_max=n_max, workers=workers)
    if workers == 1:
        rows = [scan_row(n) for n in values]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(scan_row, values))
    violations = [r.n for r in rows if r.violates_laplacian_conjecture or r.violates_distance_conjecture]
    logger.info("Integrality scan complete", rows=len(rows), violations=violations)
    return rows
