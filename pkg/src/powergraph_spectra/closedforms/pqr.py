"""Closed forms for power graphs of groups of order p^3 and pqr."""

from src.powergraph_spectra.closedforms.residuals import (
    f_pqr_g,
    f_pqr_h,
    residual_charpoly,
    structural_quotient,
    zr_fpq_distance_matrix_transcribed,
    zr_fpq_laplacian_matrix_transcribed,
    zr_fpq_psi_expansion,
)
from src.powergraph_spectra.core.enums import GroupFamily, MatrixKind, TheoremId
from src.powergraph_spectra.core.exceptions import InvalidTheoremParamsError
from src.powergraph_spectra.models.group import precondition_errors
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization
from src.powergraph_spectra.models.theorem import CandidateForm, ClosedFormReport
from src.powergraph_spectra.powergraph.structures import fpqr_case, zr_fpq_structure
from src.powergraph_spectra.specmat.charpoly import charpoly
from src.powergraph_spectra.utils.numbers import is_prime


def _require(family: GroupFamily, params: tuple[int, ...]) -> None:
    errors = precondition_errors(family, params)
    if errors:
        raise InvalidTheoremParamsError(f"{family.value}: " + "; ".join(errors))


def _quadratic(trace: int, radicand: int) -> IntPolynomial:
    """(x - (trace - sqrt(radicand))/2)(x - (trace + sqrt(radicand))/2) with integer coefficients."""
    constant, remainder = divmod(trace * trace - radicand, 4)
    if remainder:
        raise InvalidTheoremParamsError(
            f"Surd pair with trace {trace} and radicand {radicand} is not integral"
        )
    return IntPolynomial((constant, -trace, 1))


# ----- Z_p x Z_{p^2} -----


def dl_zp_zp2(p: int) -> ClosedFormReport:
    """D^L polynomial of P(Z_p x Z_{p^2})."""
    _require(GroupFamily.ZP_ZP2, (p,))
    n = p**3
    factors = SpectrumFactorization.from_pairs(
        [
            (0, 1),
            (n, 1),
            (2 * n - p, p * p - p - 1),
            (n + p * p - p, p - 1),
            (2 * n - p * p, p * (p * p - p - 1)),
            (2 * n - 1, p),
        ]
    )
    return ClosedFormReport(theorem=TheoremId.DL_ZPZP2, params={"p": p}, graph_order=n, factorization=factors)


def l_zp_zp2(p: int) -> ClosedFormReport:
    """Laplacian polynomial of P(Z_p x Z_{p^2})."""
    _require(GroupFamily.ZP_ZP2, (p,))
    n = p**3
    factors = SpectrumFactorization.from_pairs(
        [
            (0, 1),
            (n, 1),
            (p, p * p - p - 1),
            (n - p * p + p, p - 1),
            (p * p, p * (p * p - p - 1)),
            (1, p),
        ]
    )
    return ClosedFormReport(theorem=TheoremId.L_ZPZP2, params={"p": p}, graph_order=n, factorization=factors)


# ----- Z_p x Z_p x Z_p -----


def dl_elem_abelian(p: int) -> ClosedFormReport:
    """D^L polynomial of P(Z_p^3); at p=2 the last exponent vanishes."""
    _require(GroupFamily.ELEM_ABELIAN_P3, (p,))
    n = p**3
    factors = SpectrumFactorization.from_pairs(
        [(0, 1), (n, 1), (2 * n - 1, p * p + p), (2 * n - p, n - p * p - p - 2)]
    )
    return ClosedFormReport(theorem=TheoremId.DL_ELEMAB, params={"p": p}, graph_order=n, factorization=factors)


def l_elem_abelian(p: int) -> ClosedFormReport:
    """Laplacian polynomial of P(Z_p^3)."""
    _require(GroupFamily.ELEM_ABELIAN_P3, (p,))
    n = p**3
    factors = SpectrumFactorization.from_pairs(
        [(0, 1), (n, 1), (1, p * p + p), (p, n - p * p - p - 2)]
    )
    return ClosedFormReport(theorem=TheoremId.L_ELEMAB, params={"p": p}, graph_order=n, factorization=factors)


# ----- Z_2 sd Z_4 -----


def dl_z2_semidirect_z4() -> ClosedFormReport:
    """x(x-8)(x-12)^2(x-15)^4."""
    factors = SpectrumFactorization.from_pairs([(0, 1), (8, 1), (12, 2), (15, 4)])
    return ClosedFormReport(theorem=TheoremId.DL_Z2SDZ4, graph_order=8, factorization=factors)


def l_z2_semidirect_z4() -> ClosedFormReport:
    """x(x-8)(x-4)^2(x-1)^4."""
    factors = SpectrumFactorization.from_pairs([(0, 1), (8, 1), (4, 2), (1, 4)])
    return ClosedFormReport(theorem=TheoremId.L_Z2SDZ4, graph_order=8, factorization=factors)


# ----- Z_r x F_{p,q} -----


def _check_zr_fpq(r: int, p: int, q: int) -> None:
    _require(GroupFamily.FROBENIUS, (p, q))
    if not is_prime(r):
        raise InvalidTheoremParamsError(f"r={r} must be prime")
    if not p > q > r:
        raise InvalidTheoremParamsError(f"primes must satisfy p > q > r, got p={p}, q={q}, r={r}")


def _surd_radicand(r: int, q: int) -> int:
    return r * r * (q - 2) ** 2 + 6 * q * r - 8 * r - 4 * q + 5


def _zr_fpq_report(
    theorem: TheoremId,
    r: int,
    p: int,
    q: int,
    linear: list[tuple[int, int]],
    tail_root: int,
    quadratic: IntPolynomial,
    residual: IntPolynomial,
    cross_checks: dict[str, bool],
) -> ClosedFormReport:
    n = p * q * r

    def assemble(tail_mult: int) -> SpectrumFactorization:
        return SpectrumFactorization.from_pairs(
            [*linear, (tail_root, tail_mult), (quadratic, p - 1), (residual, 1)]
        )

    stated = assemble(q - 2)
    caveats = []
    if stated.product_degree != n:
        caveats.append(
            f"stated multiplicities sum to {stated.product_degree} = pqr - (p-1)(q-2), "
            f"short of {n}"
        )
    candidate = CandidateForm(
        label="exponent p(q-2)",
        factorization=assemble(p * (q - 2)),
        note=f"exponent p(q-2) = {p * (q - 2)} on the root {tail_root} instead of q-2 = {q - 2}",
    )
    return ClosedFormReport(
        theorem=theorem,
        params={"r": r, "p": p, "q": q},
        graph_order=n,
        factorization=stated,
        candidates=(candidate,),
        caveats=tuple(caveats),
        cross_checks=cross_checks,
    )


def dl_zr_fpq(r: int, p: int, q: int) -> ClosedFormReport:
    """D^L polynomial of P(Z_r x F_{p,q}).

    The surd pair is one integer quadratic; the six-class residual comes
    from the structural quotient with the simple roots 0 and pqr split off.
    """
    _check_zr_fpq(r, p, q)
    n = p * q * r
    structure = zr_fpq_structure(r, p, q)
    quotient = structural_quotient(structure, MatrixKind.DL)
    full_residual = charpoly(quotient)
    residual = residual_charpoly(quotient, 0, n)
    transcribed = charpoly(zr_fpq_distance_matrix_transcribed(r, p, q))

    linear = [
        (0, 1),
        (n, 1),
        (2 * n - p * r + r - 1, p - 2),
        (2 * n - p * r, p * r - p - r),
        (n + p * q - 1, r - 2),
        (2 * n - q * r, p * (q * r - r - q)),
    ]
    quadratic = _quadratic(4 * n - q * r - 1, _surd_radicand(r, q))
    return _zr_fpq_report(
        TheoremId.DL_ZRFPQ,
        r,
        p,
        q,
        linear,
        2 * n - q * r + r - 1,
        quadratic,
        residual,
        {"printed six-class matrix matches structural quotient": transcribed == full_residual},
    )


def l_zr_fpq(r: int, p: int, q: int) -> ClosedFormReport:
    """Laplacian polynomial of P(Z_r x F_{p,q}).

    The quartic residual is the printed six-class matrix's polynomial with
    0 and pqr split off. The structural quotient and the printed quartic
    expansion are only compared against it.
    """
    _check_zr_fpq(r, p, q)
    n = p * q * r
    printed = zr_fpq_laplacian_matrix_transcribed(r, p, q)
    residual = residual_charpoly(printed, 0, n)
    structural = charpoly(structural_quotient(zr_fpq_structure(r, p, q), MatrixKind.L))

    linear = [
        (0, 1),
        (n, 1),
        (p * r - r + 1, p - 2),
        (p * r, p * r - p - r),
        (n - p * q + 1, r - 2),
        (q * r, p * (q * r - r - q)),
    ]
    quadratic = _quadratic(q * r + 1, _surd_radicand(r, q))
    return _zr_fpq_report(
        TheoremId.L_ZRFPQ,
        r,
        p,
        q,
        linear,
        q * r - r + 1,
        quadratic,
        residual,
        {
            "structural quotient matches printed six-class matrix": (
                structural == charpoly(printed)
            ),
            "printed quartic expansion matches six-class residual": (
                zr_fpq_psi_expansion(r, p, q) == residual
            ),
        },
    )


# ----- F_{p,qr} -----


def _fpqr_report(
    theorem: TheoremId,
    p: int,
    q: int,
    r: int,
    case: str,
    pairs: list[tuple[IntPolynomial | int, int]],
) -> ClosedFormReport:
    n = p * q * r
    factors = SpectrumFactorization.from_pairs(pairs)
    caveats = []
    if fpqr_case(q, r) != case:
        caveats.append(
            f"case {case} evaluated at q={q}, r={r}, where the case condition selects {fpqr_case(q, r)}"
        )
    if factors.product_degree != n:
        caveats.append(
            f"stated factors have degree {factors.product_degree}, {n - factors.product_degree} "
            f"short of {n}; the missing content is not displayed"
        )
    return ClosedFormReport(
        theorem=theorem,
        params={"p": p, "q": q, "r": r},
        graph_order=n,
        factorization=factors,
        caveats=tuple(caveats),
    )


def dl_f_pqr(p: int, q: int, r: int, case: str) -> ClosedFormReport:
    """D^L polynomial of P(F_{p,qr}); case "i" carries the printed cubic g."""
    _require(GroupFamily.F_P_QR, (p, q, r))
    n = p * q * r
    pairs: list[tuple[IntPolynomial | int, int]] = [
        (0, 1),
        (n, 1),
        (2 * n - p * r + r - 1, p - 2),
        (2 * n - p * r, p * r - p - r),
        (n + p - 1, r - 2),
        (2 * n - q * r, p * (q * r - r - 1)),
    ]
    if case == "i":
        pairs += [(2 * n + r, p - 1), (f_pqr_g(p, q, r), 1)]
        theorem = TheoremId.DL_FPQR_I
    else:
        pairs.append((2 * n - r, p - 1))
        theorem = TheoremId.DL_FPQR_II
    return _fpqr_report(theorem, p, q, r, case, pairs)


def l_f_pqr(p: int, q: int, r: int, case: str) -> ClosedFormReport:
    """Laplacian polynomial of P(F_{p,qr}); case "i" carries the printed cubic h."""
    _require(GroupFamily.F_P_QR, (p, q, r))
    n = p * q * r
    pairs: list[tuple[IntPolynomial | int, int]] = [
        (0, 1),
        (n, 1),
        (p * r - r + 1, p - 2),
        (p * r, p * r - p - r),
        (n - p + 1, r - 2),
        (q * r, p * (q * r - r - 1)),
        (r, p - 1),
    ]
    if case == "i":
        pairs.append((f_pqr_h(p, q, r), 1))
        theorem = TheoremId.L_FPQR_I
    else:
        theorem = TheoremId.L_FPQR_II
    return _fpqr_report(theorem, p, q, r, case, pairs)


# ----- G_{i+5} -----


def dl_g_i5(p: int, q: int, r: int) -> ClosedFormReport:
    """D^L polynomial of P(G_{i+5}) = P((Z_p x Z_q) sd Z_r)."""
    _require(GroupFamily.G_I5, (p, q, r))
    n = p * q * r
    factors = SpectrumFactorization.from_pairs(
        [
            (0, 1),
            (n, 1),
            (2 * n - p * q + p + q - 2, 1),
            (2 * n - 1, p * q),
            (2 * n - p * q + q - 1, p - 2),
            (2 * n - p * q, p * q - p - q + 1),
            (2 * n - p * q + p - 1, q - 2),
            (2 * n - 2 * r + 2, p * q * (r - 2)),
        ]
    )
    return ClosedFormReport(
        theorem=TheoremId.DL_GI5, params={"p": p, "q": q, "r": r}, graph_order=n, factorization=factors
    )


def l_g_i5(p: int, q: int, r: int) -> ClosedFormReport:
    """Laplacian polynomial of P(G_{i+5})."""
    _require(GroupFamily.G_I5, (p, q, r))
    n = p * q * r
    factors = SpectrumFactorization.from_pairs(
        [
            (0, 1),
            (n, 1),
            (p * q - p - q + 2, 1),
            (1, p * q),
            (p * q - q + 1, p - 2),
            (p * q, p * q - p - q + 1),
            (p * q - p + 1, q - 2),
            (2 * r - 2, p * q * (r - 2)),
        ]
    )
    return ClosedFormReport(
        theorem=TheoremId.L_GI5, params={"p": p, "q": q, "r": r}, graph_order=n, factorization=factors
    )
