"""Spectra that must not depend on presentation choices."""

from src.powergraph_spectra.config.settings import get_settings
from src.powergraph_spectra.core.enums import GroupFamily, MatrixKind
from src.powergraph_spectra.groups.constructors import make_f_p_qr, make_frobenius, make_g_i5
from src.powergraph_spectra.models.group import FiniteGroup, GroupSpec, check_preconditions
from src.powergraph_spectra.models.polynomial import IntPolynomial
from src.powergraph_spectra.models.reports import InequalityCheck
from src.powergraph_spectra.powergraph.builders import power_graph
from src.powergraph_spectra.specmat.charpoly import graph_charpoly
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.utils.numbers import units_of_order

logger = get_logger(__name__)


def _dl(group: FiniteGroup) -> IntPolynomial:
    return graph_charpoly(
        power_graph(group), MatrixKind.DL, full_max_order=get_settings().full_charpoly_max_order
    )


def check_gi5_index_invariance(p: int, q: int, r: int) -> InequalityCheck:
    """D^L polynomials of P(G_{i+5}) agree for every 1 <= i <= r-1.

    Raises:
        InvalidGroupSpecError: If the congruences fail
    """
    check_preconditions(GroupFamily.G_I5, (p, q, r))
    polys = [_dl(make_g_i5(p, q, r, i)) for i in range(1, r)]
    return InequalityCheck(
        name="G_{i+5} distance Laplacian polynomial independent of i",
        holds=all(poly == polys[0] for poly in polys[1:]),
        detail=f"{len(polys)} index value(s) compared",
    )


def check_witness_independence(spec: GroupSpec | str) -> InequalityCheck:
    """Rebuild a Frobenius-type group with its two smallest witnesses and compare D^L.

    Not applicable when only one witness exists or the family has none.
    """
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    name = "distance Laplacian polynomial independent of the witness"
    factor = spec.factors[0]
    if spec.is_product or factor.family not in (
        GroupFamily.FROBENIUS,
        GroupFamily.F_P_QR,
        GroupFamily.G_I5,
    ):
        return InequalityCheck(name=name, holds=True, applicable=False, detail="no witness to vary")

    if factor.family == GroupFamily.FROBENIUS:
        p, q = factor.params
        witnesses = units_of_order(q, p)[:2]
        groups = [make_frobenius(p, q, witness=v) for v in witnesses]
    elif factor.family == GroupFamily.F_P_QR:
        p, q, r = factor.params
        witnesses = units_of_order(q * r, p)[:2]
        groups = [make_f_p_qr(p, q, r, witness=v) for v in witnesses]
    else:
        p, q, r = factor.params[:3]
        i = factor.params[3] if len(factor.params) == 4 else 1
        witnesses = units_of_order(r, p)[:2]
        groups = [make_g_i5(p, q, r, i, v=v) for v in witnesses]

    if len(groups) < 2:
        return InequalityCheck(
            name=name, holds=True, applicable=False, detail=f"single witness {witnesses}"
        )
    polys = [_dl(g) for g in groups]
    holds = polys[0] == polys[1]
    logger.debug("Witness independence checked", spec=str(spec), witnesses=witnesses, holds=holds)
    return InequalityCheck(name=name, holds=holds, detail=f"witnesses {witnesses}")
