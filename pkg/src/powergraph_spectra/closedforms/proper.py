"""Closed forms for proper power graphs of cyclic and dicyclic groups."""

from src.powergraph_spectra.closedforms.residuals import residual_charpoly, structural_quotient
from src.powergraph_spectra.core.enums import MatrixKind, TheoremId
from src.powergraph_spectra.core.exceptions import InvalidTheoremParamsError
from src.powergraph_spectra.models.matrix import IntMatrix
from src.powergraph_spectra.models.polynomial import IntPolynomial, SpectrumFactorization
from src.powergraph_spectra.models.theorem import ClosedFormReport
from src.powergraph_spectra.powergraph.structures import proper_cyclic_structure
from src.powergraph_spectra.utils.numbers import is_power_of_two, is_prime, phi, proper_divisors


def divisor_distance(a: int, b: int) -> int:
    """Distance between the classes of orders a and b in P*(Z_n)."""
    if a == b:
        return 0
    return 1 if a % b == 0 or b % a == 0 else 2


def divisor_betas(n: int) -> list[int]:
    """beta_i = sum over k != i of phi(d_k) * d(v_i, v_k) for the proper divisors of n."""
    divisors = proper_divisors(n)
    return [
        sum(phi(dk) * divisor_distance(di, dk) for dk in divisors if dk != di) for di in divisors
    ]


def proper_cyclic_quotient(n: int) -> IntMatrix:
    """(t+1)x(t+1) D^L quotient of P*(Z_n) written out from transmissions.

    Class 0 holds the generators; class i >= 1 the elements of order d_i.
    """
    divisors = proper_divisors(n)
    phis = [phi(d) for d in divisors]
    betas = divisor_betas(n)
    gens = phi(n)
    rows = [[n - 1 - gens] + [-f for f in phis]]
    for i, di in enumerate(divisors):
        row = [-gens]
        for k, dk in enumerate(divisors):
            row.append(gens + betas[i] if k == i else -phis[k] * divisor_distance(di, dk))
        rows.append(row)
    return IntMatrix.from_rows(rows)


def dl_proper_cyclic(n: int) -> ClosedFormReport:
    """D^L polynomial of P*(Z_n).

    Linear factors come from the generator clique and the divisor classes;
    the residual is the quotient spectrum without its zero, so the total
    degree is n - 1.

    Raises:
        InvalidTheoremParamsError: If n < 4 or n is prime
    """
    if n < 4 or is_prime(n):
        raise InvalidTheoremParamsError(f"n={n} must be composite")
    divisors = proper_divisors(n)
    betas = divisor_betas(n)
    gens = phi(n)

    structural = structural_quotient(proper_cyclic_structure(n), MatrixKind.DL)
    residual = residual_charpoly(structural, 0)

    pairs: list[tuple[IntPolynomial | int, int]] = [(0, 1), (n - 1, gens - 1)]
    pairs += [(phi(d) + gens + beta, phi(d) - 1) for d, beta in zip(divisors, betas)]
    pairs.append((residual, 1))
    t = len(divisors)
    return ClosedFormReport(
        theorem=TheoremId.DL_PROPER_CYCLIC,
        params={"n": n},
        graph_order=n - 1,
        factorization=SpectrumFactorization.from_pairs(pairs),
        caveats=(
            f"remaining zeros taken from the {t + 1}x{t + 1} quotient less its zero "
            f"({t} roots) rather than t-2 = {t - 2}",
        ),
        cross_checks={
            "quotient from transmissions matches structural quotient": (
                proper_cyclic_quotient(n) == structural
            ),
        },
    )


def _check_dicyclic(n: int) -> list[str]:
    if n < 2:
        raise InvalidTheoremParamsError(f"n={n} must be >= 2")
    if is_power_of_two(n):
        return []
    return [f"n={n} is not a power of 2, so Q_{n} is dicyclic but not generalized quaternion"]


def dl_proper_dicyclic(n: int) -> ClosedFormReport:
    """D^L polynomial of P(Q_n*)."""
    caveats = _check_dicyclic(n)
    factors = SpectrumFactorization.from_pairs(
        [(0, 1), (4 * n - 1, 1), (6 * n - 1, 2 * n - 3), (8 * n - 5, n), (8 * n - 3, n)]
    )
    return ClosedFormReport(
        theorem=TheoremId.DL_PROPER_DICYCLIC,
        params={"n": n},
        graph_order=4 * n - 1,
        factorization=factors,
        caveats=tuple(caveats),
    )


def l_proper_dicyclic(n: int) -> ClosedFormReport:
    """Laplacian polynomial of P(Q_n*)."""
    caveats = _check_dicyclic(n)
    factors = SpectrumFactorization.from_pairs(
        [(0, 1), (3, n), (1, n), (4 * n - 1, 1), (2 * n - 1, 2 * n - 3)]
    )
    return ClosedFormReport(
        theorem=TheoremId.L_PROPER_DICYCLIC,
        params={"n": n},
        graph_order=4 * n - 1,
        factorization=factors,
        caveats=tuple(caveats),
    )
