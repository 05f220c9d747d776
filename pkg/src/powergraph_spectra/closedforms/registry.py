"""Theorem catalog: evaluator, matrix kind and source group per theorem id."""

from collections.abc import Callable
from dataclasses import dataclass

from src.powergraph_spectra.closedforms import pqr, proper
from src.powergraph_spectra.core.enums import MatrixKind, StructureFamily, TheoremId
from src.powergraph_spectra.models.theorem import ClosedFormReport, TheoremParams, theorem_family
from src.powergraph_spectra.powergraph.structures import structure_source
from src.powergraph_spectra.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TheoremEntry:
    """How to evaluate a theorem and which graph it describes."""

    theorem: TheoremId
    kind: MatrixKind
    structure: StructureFamily
    evaluator: Callable[..., ClosedFormReport]

    @property
    def family(self) -> str:
        return theorem_family(self.theorem)


def _entry(
    theorem: TheoremId,
    kind: MatrixKind,
    structure: StructureFamily,
    evaluator: Callable[..., ClosedFormReport],
) -> tuple[TheoremId, TheoremEntry]:
    return theorem, TheoremEntry(theorem, kind, structure, evaluator)


THEOREMS: dict[TheoremId, TheoremEntry] = dict(
    [
        _entry(TheoremId.DL_ZPZP2, MatrixKind.DL, StructureFamily.ZP_ZP2, pqr.dl_zp_zp2),
        _entry(TheoremId.L_ZPZP2, MatrixKind.L, StructureFamily.ZP_ZP2, pqr.l_zp_zp2),
        _entry(TheoremId.DL_ELEMAB, MatrixKind.DL, StructureFamily.ELEM_ABELIAN_P3, pqr.dl_elem_abelian),
        _entry(TheoremId.L_ELEMAB, MatrixKind.L, StructureFamily.ELEM_ABELIAN_P3, pqr.l_elem_abelian),
        _entry(
            TheoremId.DL_Z2SDZ4, MatrixKind.DL, StructureFamily.Z2_SEMIDIRECT_Z4, pqr.dl_z2_semidirect_z4
        ),
        _entry(
            TheoremId.L_Z2SDZ4, MatrixKind.L, StructureFamily.Z2_SEMIDIRECT_Z4, pqr.l_z2_semidirect_z4
        ),
        _entry(TheoremId.DL_ZRFPQ, MatrixKind.DL, StructureFamily.ZR_FPQ, pqr.dl_zr_fpq),
        _entry(TheoremId.L_ZRFPQ, MatrixKind.L, StructureFamily.ZR_FPQ, pqr.l_zr_fpq),
        _entry(
            TheoremId.DL_FPQR_I,
            MatrixKind.DL,
            StructureFamily.F_P_QR,
            lambda p, q, r: pqr.dl_f_pqr(p, q, r, "i"),
        ),
        _entry(
            TheoremId.DL_FPQR_II,
            MatrixKind.DL,
            StructureFamily.F_P_QR,
            lambda p, q, r: pqr.dl_f_pqr(p, q, r, "ii"),
        ),
        _entry(
            TheoremId.L_FPQR_I,
            MatrixKind.L,
            StructureFamily.F_P_QR,
            lambda p, q, r: pqr.l_f_pqr(p, q, r, "i"),
        ),
        _entry(
            TheoremId.L_FPQR_II,
            MatrixKind.L,
            StructureFamily.F_P_QR,
            lambda p, q, r: pqr.l_f_pqr(p, q, r, "ii"),
        ),
        _entry(TheoremId.DL_GI5, MatrixKind.DL, StructureFamily.G_I5, pqr.dl_g_i5),
        _entry(TheoremId.L_GI5, MatrixKind.L, StructureFamily.G_I5, pqr.l_g_i5),
        _entry(
            TheoremId.DL_PROPER_CYCLIC, MatrixKind.DL, StructureFamily.PROPER_CYCLIC, proper.dl_proper_cyclic
        ),
        _entry(
            TheoremId.DL_PROPER_DICYCLIC,
            MatrixKind.DL,
            StructureFamily.PROPER_DICYCLIC,
            proper.dl_proper_dicyclic,
        ),
        _entry(
            TheoremId.L_PROPER_DICYCLIC,
            MatrixKind.L,
            StructureFamily.PROPER_DICYCLIC,
            proper.l_proper_dicyclic,
        ),
    ]
)


def get_entry(theorem: TheoremId | str) -> TheoremEntry:
    """Catalog entry for a theorem id (or its string value)."""
    return THEOREMS[TheoremId(theorem)]


def group_source(params: TheoremParams) -> tuple[str, bool]:
    """Group spec text and proper flag of the graph a theorem describes."""
    entry = get_entry(params.theorem)
    return structure_source(entry.structure, params.ordered())


def evaluate(params: TheoremParams) -> ClosedFormReport:
    """Evaluate a theorem at concrete parameters.

    Raises:
        InvalidTheoremParamsError: If the parameters violate the theorem's hypotheses
    """
    entry = get_entry(params.theorem)
    report = entry.evaluator(*params.ordered())
    logger.debug(
        "Evaluated closed form",
        theorem=params.theorem.value,
        params=str(params),
        degree=report.factorization.product_degree,
        caveats=len(report.caveats),
    )
    return report


def diameter2_partner(theorem: TheoremId) -> TheoremId | None:
    """The D^L theorem paired with a Laplacian theorem on the same graph."""
    if not theorem.value.startswith("L-"):
        return None
    partner = "DL-" + theorem.value[2:]
    try:
        return TheoremId(partner)
    except ValueError:
        return None
