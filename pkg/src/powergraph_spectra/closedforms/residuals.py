"""Residual factors: structural quotients and transcribed reference forms.

Residuals that enter a closed form are always computed from the quotient
of the structural joined union. The transcribed matrices and expanded
polynomials below are evaluated only as cross-checks.
"""

import networkx as nx
from sympy import Poly, symbols

from src.powergraph_spectra.core.enums import MatrixKind
from src.powergraph_spectra.models.matrix import IntMatrix
from src.powergraph_spectra.models.polynomial import X, IntPolynomial
from src.powergraph_spectra.powergraph.structures import part_classes
from src.powergraph_spectra.specmat.charpoly import charpoly
from src.powergraph_spectra.specmat.matrices import graph_matrix
from src.powergraph_spectra.specmat.quotient import quotient_matrix

P, Q, R = symbols("p q r", integer=True, positive=True)


def structural_quotient(graph: nx.Graph, kind: MatrixKind) -> IntMatrix:
    """Quotient of a structural graph's matrix over its ``part`` blocks.

    Raises:
        NonEquitablePartitionError: If the blocks are not equitable
    """
    quotient = quotient_matrix(graph_matrix(graph, kind), part_classes(graph))
    return quotient.to_int_matrix()


def strip_roots(poly: IntPolynomial, *roots: int) -> IntPolynomial:
    """Divide out one linear factor per listed root.

    Raises:
        FactorizationError: If some root is missing
    """
    for root in roots:
        poly = poly.exquo(IntPolynomial.linear(root))
    return poly


def _instantiate(expr, **values: int) -> IntPolynomial:
    substituted = expr.subs({P: values["p"], Q: values["q"], R: values["r"]})
    return IntPolynomial.from_poly(Poly(substituted, X, domain="ZZ"))


def zr_fpq_distance_matrix_transcribed(r: int, p: int, q: int) -> IntMatrix:
    """Six-class D^L coefficient matrix as printed with the Z_r x F_{p,q} theorem."""
    a, b, c = p - 1, p * r - p - r + 1, r - 1
    s, t = p * (q * r - r - q + 1), p * (q - 1)
    n = p * q * r
    return IntMatrix.from_rows(
        [
            [n - 1, -a, -b, -c, -s, -t],
            [-1, 2 * n - p * r - p + r, -b, -2 * c, -s, -2 * t],
            [-1, -a, 2 * n - 2 * p * r + p + r - 1, -c, -2 * s, -2 * t],
            [-1, -2 * a, -b, n + p * q - r, -2 * s, -2 * t],
            [-1, -2 * a, -2 * b, -c, 2 * p * q + 2 * p * r - 2 * p - q - r + 1, -2 * t],
            [-1, -2 * a, -2 * b, -c, (1 - 2 * p) * (q - 1) * (r - 1),
             2 * n - 2 * p * q + 2 * p - q * r + q + r - 2],
        ]
    )


def zr_fpq_laplacian_matrix_transcribed(r: int, p: int, q: int) -> IntMatrix:
    """Six-class Laplacian quotient as printed with the Z_r x F_{p,q} corollary."""
    b, d = p * r - p - r + 1, q * r - q - r + 1
    n = p * q * r
    return IntMatrix.from_rows(
        [
            [n - 1, -(p - 1), -b, -(r - 1), -p * d, -p * (q - 1)],
            [-1, b + 1, -b, 0, 0, 0],
            [-1, -(p - 1), p + r - 1, -(r - 1), 0, 0],
            [-1, 0, -b, n - p * q - r + 2, -p * d, 0],
            [-1, 0, 0, -(r - 1), q + r - 1, -(q - 1)],
            [-1, 0, 0, 0, -d, d + 1],
        ]
    )


_PSI = (
    X**4
    + X**3 * (-3 + P * Q + R - P * R - Q * R - P * Q * R)
    + X**2
    * (
        P**2 * Q * R**2 - P**2 * Q * R + P * Q**2 * R**2 - P * Q**2 * R + 3 * P * Q * R
        - 2 * P * Q + P * R + P + Q * R + Q - R**2 + R + 1
    )
    + X
    * (
        -(P**2) * Q**2 * R**3 + P**2 * Q**2 * R**2 - P**2 * Q * R + P**2 * Q - P**2 * R**2
        + 2 * P**2 * R - P**2 - P * Q**2 * R**2 + P * Q**2 * R - 3 * P * Q * R + P * Q
        + P * R**3 - 2 * P * R**2 + P * R - P + Q * R**3 - 3 * Q * R**2 + 3 * Q * R
        - 2 * Q - R**3 + 4 * R**2 - 5 * R + 2
    )
    + P**2 * Q**2 * R**4 - 2 * P**2 * Q**2 * R**3 + 2 * P**2 * Q**2 * R**2 - P**2 * Q**2 * R
    - P**2 * Q * R**4 + 3 * P**2 * Q * R**3 - 4 * P**2 * Q * R**2 + 3 * P**2 * Q * R
    - P**2 * Q + P**2 * R**2 - 2 * P**2 * R + P**2 - P * Q**2 * R**4 + 3 * P * Q**2 * R**3
    - 3 * P * Q**2 * R**2 + P * Q**2 * R + P * Q * R**4 - 4 * P * Q * R**3
    + 6 * P * Q * R**2 - 3 * P * Q * R + P * Q - P * R**2 + 2 * P * R - P
)

_G_CUBIC = (
    X**3
    + X**2 * (2 - P + P * R - 5 * P * Q * R)
    + X
    * (
        8 * P**2 * Q**2 * R**2 - 3 * P**2 * Q * R**2 + 4 * P**2 * Q * R - P**2 * R
        - 7 * P * Q * R + P * R**2 - R**2 + 2 * R
    )
    - 4 * P**3 * Q**3 * R**3 + 2 * P**3 * Q**2 * R**3 - 4 * P**3 * Q**2 * R**2
    + 6 * P**2 * Q**2 * R**2 + 2 * P**3 * Q * R**2 - P**2 * Q * R**3 - P**2 * Q * R**2
    + P**2 * Q * R - P**2 * R + P * Q * R**3 - 2 * P * Q * R**2 - P * Q * R + P * R
)

_H_CUBIC = (
    X**3
    + X**2 * (-2 + P - P * R - P * Q * R)
    + X * (2 * R - P**2 * R + P * Q * R - R**2 + P * R**2 + P**2 * Q * R**2)
    - P * R + P**2 * R + P * Q * R - P**2 * Q * R - 2 * P * Q * R**2 + P**2 * Q * R**2
    + P * Q * R**3 - P**2 * Q * R**3
)


def zr_fpq_psi_expansion(r: int, p: int, q: int) -> IntPolynomial:
    """Printed quartic expansion of the Laplacian residual."""
    return _instantiate(_PSI, p=p, q=q, r=r)


def f_pqr_g(p: int, q: int, r: int) -> IntPolynomial:
    """Printed D^L cubic of P(F_{p,qr}), case i."""
    return _instantiate(_G_CUBIC, p=p, q=q, r=r)


def f_pqr_h(p: int, q: int, r: int) -> IntPolynomial:
    """Printed Laplacian cubic of P(F_{p,qr}), case i."""
    return _instantiate(_H_CUBIC, p=p, q=q, r=r)


def residual_charpoly(matrix: IntMatrix, *known_roots: int) -> IntPolynomial:
    """charpoly(matrix) with the listed simple roots divided out."""
    return strip_roots(charpoly(matrix), *known_roots)
