"""Adjudicate closed forms against the oracle polynomial."""

from src.powergraph_spectra.closedforms.registry import (
    diameter2_partner,
    evaluate,
    get_entry,
    group_source,
)
from src.powergraph_spectra.closedforms.transform import diameter2_transform
from src.powergraph_spectra.core.enums import TheoremId, Verdict
from src.powergraph_spectra.core.exceptions import InvalidTheoremParamsError
from src.powergraph_spectra.models.polynomial import IntPolynomial
from src.powergraph_spectra.models.reports import FactorVerdict, VerificationReport
from src.powergraph_spectra.models.theorem import ClosedFormReport, TheoremParams
from src.powergraph_spectra.utils.decorators import timed
from src.powergraph_spectra.utils.logger import bind_context, get_logger, unbind_context
from src.powergraph_spectra.verify.oracle import oracle_charpoly

logger = get_logger(__name__)

TRANSFORM_CHECK = "diameter-2 transform of the Laplacian form matches the distance Laplacian form"


def factor_verdicts(report: ClosedFormReport, oracle: IntPolynomial) -> tuple[FactorVerdict, ...]:
    """Observed multiplicity of every distinct stated factor in the oracle polynomial."""
    return tuple(
        FactorVerdict(
            factor=fp.factor,
            stated_mult=fp.multiplicity,
            observed_mult=fp.factor.multiplicity_in(oracle),
        )
        for fp in report.factorization.merged().factors
    )


def adjudicate(
    report: ClosedFormReport, oracle: IntPolynomial
) -> tuple[Verdict, str | None, tuple[FactorVerdict, ...]]:
    """Verdict, confirmed candidate label and per-factor verdicts."""
    verdicts = factor_verdicts(report, oracle)
    if report.factorization.expand() == oracle:
        return Verdict.EQUAL, None, verdicts
    for candidate in report.candidates:
        if candidate.factorization.expand() == oracle:
            return Verdict.CANDIDATE_CONFIRMED, candidate.label, verdicts
    if all(v.ok for v in verdicts):
        return Verdict.FACTORS_DIVIDE, None, verdicts
    return Verdict.MISMATCH, None, verdicts


def _transform_check(params: TheoremParams, report: ClosedFormReport) -> dict[str, bool]:
    partner = diameter2_partner(params.theorem)
    if partner is None:
        return {}
    partner_report = evaluate(TheoremParams(theorem=partner, values=params.values))
    transformed = diameter2_transform(report.factorization, report.graph_order)
    return {TRANSFORM_CHECK: transformed.expand() == partner_report.factorization.expand()}


@timed("Theorem verified")
def verify_theorem(theorem: TheoremId | str, params: TheoremParams | str = "") -> VerificationReport:
    """Expand a closed form and compare it with the oracle polynomial.

    Args:
        theorem: Theorem id
        params: Parsed parameters or their text form (``p=7,q=3,r=2``)

    Returns:
        Report with per-factor verdicts, degree gap and overall verdict

    Raises:
        InvalidTheoremParamsError: On invalid parameters
    """
    if isinstance(params, str):
        params = TheoremParams.parse(theorem, params)
    elif params.theorem != TheoremId(theorem):
        raise InvalidTheoremParamsError(
            f"Parameters for {params.theorem.value} passed to {TheoremId(theorem).value}"
        )

    bind_context(theorem=params.theorem.value, params=str(params))
    try:
        report = evaluate(params)
        spec, proper = group_source(params)
        entry = get_entry(params.theorem)
        oracle = oracle_charpoly(spec, entry.kind, proper)
        verdict, candidate, verdicts = adjudicate(report, oracle)

        result = VerificationReport(
            theorem=params.theorem,
            params=dict(params.values),
            graph_order=report.graph_order,
            factors=verdicts,
            equal=verdict == Verdict.EQUAL,
            degree_gap=oracle.degree - report.factorization.product_degree,
            verdict=verdict,
            confirmed_candidate=candidate,
            caveats=report.caveats,
            cross_checks={**report.cross_checks, **_transform_check(params, report)},
        )
        log = logger.info if result.confirmed else logger.warning
        log(
            "Closed form adjudicated",
            verdict=verdict.value,
            candidate=candidate,
            degree_gap=result.degree_gap,
            failing_factors=sum(1 for v in verdicts if not v.ok),
        )
        return result
    finally:
        unbind_context("theorem", "params")
