"""LaTeX rendering of factorizations in factored notation."""

from sympy import latex

from src.powergraph_spectra.models.polynomial import FactorPower, IntPolynomial, SpectrumFactorization


def _linear(root: int) -> str:
    if root == 0:
        return "x"
    if root > 0:
        return f"(x-{root})"
    return f"(x+{-root})"


def factor_latex(fp: FactorPower) -> str:
    """One factor with its exponent, e.g. (x-12)^{2}."""
    body = _linear(fp.root) if fp.root is not None else f"({latex(fp.factor.as_expr())})"
    if fp.multiplicity == 1:
        return body
    return f"{body}^{{{fp.multiplicity}}}"


def factorization_latex(factorization: SpectrumFactorization) -> str:
    """Concatenated factors, e.g. x(x-8)(x-12)^{2}(x-15)^{4}."""
    if not factorization.factors:
        return "1"
    return "".join(factor_latex(fp) for fp in factorization.factors)


def polynomial_latex(poly: IntPolynomial) -> str:
    """Expanded polynomial."""
    return latex(poly.as_expr())
