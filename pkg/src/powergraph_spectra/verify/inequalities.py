"""Eigenvalue inequalities and spectrum identities of power graphs.

Roots are compared exactly when integral and through certified intervals
otherwise. An interval that straddles a bound is reported as a tolerance
failure instead of being guessed.
"""

from collections import Counter
from fractions import Fraction

import networkx as nx

from src.powergraph_spectra.core.enums import GroupFamily, MatrixKind, NumberClass
from src.powergraph_spectra.core.exceptions import ToleranceNotReachedError
from src.powergraph_spectra.groups.constructors import make_cyclic, make_dicyclic, make_dihedral
from src.powergraph_spectra.models.group import GroupSpec
from src.powergraph_spectra.models.polynomial import SpectrumFactorization
from src.powergraph_spectra.models.reports import InequalityCheck, InequalityReport
from src.powergraph_spectra.powergraph.builders import power_graph
from src.powergraph_spectra.powergraph.metrics import complement_is_connected, wiener_index
from src.powergraph_spectra.specmat.roots import RealRoot, descending_values
from src.powergraph_spectra.utils.decorators import timed
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.utils.numbers import (
    classify,
    is_power_of_two,
    is_prime,
    is_prime_power,
    phi,
    prime_factorization,
)
from src.powergraph_spectra.verify.connectivity import vertex_connectivity
from src.powergraph_spectra.verify.oracle import (
    graph_spectrum,
    graph_spectrum_factorization,
    oracle_graph,
    require_connected,
)

logger = get_logger(__name__)

Bound = int | Fraction


def _flat(spectrum: list[RealRoot]) -> list[RealRoot]:
    """Ascending, one entry per eigenvalue."""
    flat: list[RealRoot] = []
    for root in spectrum:
        flat.extend([RealRoot(root.lower, root.upper, 1)] * root.multiplicity)
    return flat


def _straddles(root: RealRoot, bound: Bound) -> ToleranceNotReachedError:
    return ToleranceNotReachedError(
        f"root in ({root.lower}, {root.upper}) cannot be compared with {bound}"
    )


def at_least(root: RealRoot, bound: Bound) -> bool:
    """Certified root >= bound."""
    if root.is_exact:
        return root.lower >= bound
    if root.lower >= bound:
        return True
    if root.upper <= bound:
        return False
    raise _straddles(root, bound)


def at_most(root: RealRoot, bound: Bound) -> bool:
    """Certified root <= bound."""
    if root.is_exact:
        return root.lower <= bound
    if root.upper <= bound:
        return True
    if root.lower >= bound:
        return False
    raise _straddles(root, bound)


def below(root: RealRoot, bound: Bound) -> bool:
    """Certified root < bound."""
    if root.is_exact:
        return root.lower < bound
    if root.upper <= bound:
        return True
    if root.lower >= bound:
        return False
    raise _straddles(root, bound)


def _render(root: RealRoot) -> str:
    exact = root.exact_int()
    if exact is not None:
        return str(exact)
    return f"~{root.value:.9f}"


def exact_multiset(spectrum: list[RealRoot]) -> dict[int, int] | None:
    """{root: multiplicity} when every root is an integer, else None."""
    values: dict[int, int] = {}
    for root in spectrum:
        exact = root.exact_int()
        if exact is None:
            return None
        values[exact] = values.get(exact, 0) + root.multiplicity
    return values


def _multiset_check(name: str, spectrum: list[RealRoot], expected: Counter[int]) -> InequalityCheck:
    expected_clean = {v: m for v, m in expected.items() if m > 0}
    observed = exact_multiset(spectrum)
    return InequalityCheck(
        name=name,
        holds=observed == expected_clean,
        detail=f"expected {dict(sorted(expected_clean.items()))}, observed "
        + (str(dict(sorted(observed.items()))) if observed is not None else "non-integral"),
    )


# ----- general power graph inequalities -----


def check_second_smallest(
    graph: nx.Graph, dist: list[RealRoot], proper: bool = False
) -> list[InequalityCheck]:
    """Second smallest D^L root is at least n, with equality iff the complement is disconnected."""
    n = graph.number_of_nodes()
    if n < 2:
        return []
    second = _flat(dist)[1]
    equal = second.is_exact and second.lower == n
    complement_disconnected = not complement_is_connected(graph)
    checks = [
        InequalityCheck(
            name="second smallest distance Laplacian root >= n",
            holds=at_least(second, n),
            detail=f"{_render(second)} vs n={n}",
        ),
        InequalityCheck(
            name="equality exactly when the complement is disconnected",
            holds=equal == complement_disconnected,
            detail=f"equality={equal}, complement disconnected={complement_disconnected}",
        ),
    ]
    if not proper:
        checks.append(
            InequalityCheck(
                name="second smallest distance Laplacian root equals n",
                holds=equal,
                detail=_render(second),
            )
        )
    return checks


def check_spectral_dominance(dist: list[RealRoot], reference: list[RealRoot]) -> InequalityCheck:
    """Sorted D^L roots dominate those of P(Z_{p^m}) of the same order, index by index."""
    ours = descending_values(dist)
    theirs = descending_values(reference)
    if len(ours) != len(theirs):
        return InequalityCheck(
            name="distance Laplacian spectrum dominates P(Z_{p^m})",
            holds=False,
            detail=f"orders differ: {len(ours)} vs {len(theirs)}",
        )
    failing = [
        i + 1
        for i, (a, b) in enumerate(zip(ours, theirs))
        if not at_least(a, b.lower if b.is_exact else b.upper)
    ]
    return InequalityCheck(
        name="distance Laplacian spectrum dominates P(Z_{p^m})",
        holds=not failing,
        detail=f"failing indices {failing}" if failing else f"{len(ours)} indices compared",
    )


def check_fiedler(graph: nx.Graph, lap: list[RealRoot]) -> InequalityCheck:
    """Algebraic connectivity is at most the vertex connectivity (non-complete graphs)."""
    n = graph.number_of_nodes()
    name = "algebraic connectivity <= vertex connectivity"
    if n < 2 or graph.number_of_edges() == n * (n - 1) // 2:
        return InequalityCheck(name=name, holds=True, applicable=False, detail="complete graph")
    mu = _flat(lap)[1]
    kappa = vertex_connectivity(graph)
    return InequalityCheck(name=name, holds=at_most(mu, kappa), detail=f"{_render(mu)} vs {kappa}")


def check_distance_invariants(
    graph: nx.Graph, factorization: SpectrumFactorization, dist: list[RealRoot]
) -> list[InequalityCheck]:
    """Trace is twice the Wiener index; the zero root is simple; every root is real."""
    poly = factorization.expand()
    trace = -poly.coefficient(poly.degree - 1)
    wiener = wiener_index(graph)
    real_count = sum(r.multiplicity for r in dist)
    first = dist[0]
    return [
        InequalityCheck(
            name="trace equals twice the Wiener index",
            holds=trace == 2 * wiener,
            detail=f"trace {trace}, Wiener index {wiener}",
        ),
        InequalityCheck(
            name="zero root is simple",
            holds=first.exact_int() == 0 and first.multiplicity == 1,
            detail=f"smallest root {_render(first)} with multiplicity {first.multiplicity}",
        ),
        InequalityCheck(
            name="all roots are real",
            holds=real_count == graph.number_of_nodes(),
            detail=f"{real_count} real roots of {graph.number_of_nodes()}",
        ),
    ]


# ----- family bullets -----


def _dl_spectrum(graph: nx.Graph) -> list[RealRoot]:
    return graph_spectrum(graph, MatrixKind.DL)


def check_dihedral_spectrum(n: int, dist: list[RealRoot] | None = None) -> list[InequalityCheck]:
    """Value and multiplicity statements for P(D_2n)."""
    if dist is None:
        dist = _dl_spectrum(power_graph(make_dihedral(n)))
    number_class = classify(n)
    name = f"P(D_{2 * n}) distance Laplacian spectrum"
    if number_class == NumberClass.PRIME_POWER:
        expected = Counter({0: 1, 2 * n: 1, 3 * n: n - 2})
        expected[4 * n - 1] += n
        return [_multiset_check(name, dist, expected)]
    if number_class == NumberClass.TWO_PRIMES:
        p, q = sorted(prime_factorization(n))
        expected = Counter({0: 1})
        for value, mult in (
            (2 * n, 1),
            (3 * n, phi(n)),
            (3 * n + phi(p), phi(q) - 1),
            (3 * n + phi(q), phi(p) - 1),
            (4 * n - phi(n) - 1, 1),
            (4 * n - 1, n),
        ):
            expected[value] += mult
        return [_multiset_check(name, dist, expected)]

    flat = _flat(dist)
    observed = exact_multiset(dist) or {}
    return [
        InequalityCheck(
            name=f"P(D_{2 * n}) second smallest root is 2n",
            holds=flat[1].exact_int() == 2 * n,
            detail=_render(flat[1]),
        ),
        InequalityCheck(
            name=f"P(D_{2 * n}) root 3n has multiplicity at least phi(n)",
            holds=observed.get(3 * n, 0) >= phi(n),
            detail=f"multiplicity {observed.get(3 * n, 0)}, phi(n)={phi(n)}",
        ),
        InequalityCheck(
            name=f"P(D_{2 * n}) remaining roots are at least 3n",
            holds=all(at_least(r, 3 * n) for r in flat[2:]),
        ),
    ]


def check_dicyclic_spectrum(n: int, dist: list[RealRoot] | None = None) -> list[InequalityCheck]:
    """Spectrum statements and the largest-root bracket for P(Q_n)."""
    if dist is None:
        dist = _dl_spectrum(power_graph(make_dicyclic(n)))
    flat = _flat(dist)
    largest = flat[-1]
    checks = [
        InequalityCheck(
            name="8n-2 <= largest root < 8n-1",
            holds=at_least(largest, 8 * n - 2) and below(largest, 8 * n - 1),
            detail=f"{_render(largest)} vs [{8 * n - 2}, {8 * n - 1})",
        )
    ]
    if is_power_of_two(n):
        expected = Counter({0: 1, 4 * n: 2, 6 * n: 2 * n - 3})
        expected[8 * n - 4] += n
        expected[8 * n - 2] += n
        checks.append(_multiset_check(f"P(Q_{n}) distance Laplacian spectrum", dist, expected))
        return checks
    checks += [
        InequalityCheck(
            name="4n is a double root",
            holds=flat[1].exact_int() == 4 * n and flat[2].exact_int() == 4 * n,
            detail=f"{_render(flat[1])}, {_render(flat[2])}",
        ),
        InequalityCheck(
            name="remaining roots are at least 6n",
            holds=all(at_least(r, 6 * n) for r in flat[3:]),
        ),
    ]
    return checks


def check_cyclic_bounds(n: int, dist: list[RealRoot] | None = None) -> list[InequalityCheck]:
    """Largest-root bounds and spectrum statements for P(Z_n)."""
    if n < 2:
        return []
    if dist is None:
        dist = _dl_spectrum(power_graph(make_cyclic(n)))
    flat = _flat(dist)
    largest = flat[-1]
    totient = phi(n)
    number_class = classify(n)
    factors = prime_factorization(n)

    upper = 2 * n - totient - 1
    upper_equal = largest.exact_int() == upper
    upper_equal_expected = is_prime(n) or number_class == NumberClass.TWO_PRIMES
    checks = [
        InequalityCheck(
            name="largest root <= 2n - phi(n) - 1",
            holds=at_most(largest, upper),
            detail=f"{_render(largest)} vs {upper}",
        ),
        InequalityCheck(
            name="upper bound attained exactly for primes and products of two primes",
            holds=upper_equal == upper_equal_expected,
            detail=f"attained={upper_equal}",
        ),
    ]

    if len(factors) == 2:
        (p, alpha), (q, beta) = sorted(factors.items())
        lower = 2 * n - totient - p ** (alpha - 1) * q ** (beta - 1)
        lower_equal = largest.exact_int() == lower
        checks += [
            InequalityCheck(
                name="largest root >= 2n - phi(n) - p^(a-1) q^(b-1)",
                holds=at_least(largest, lower),
                detail=f"{_render(largest)} vs {lower}",
            ),
            InequalityCheck(
                name="lower bound attained exactly when both exponents are 1",
                holds=lower_equal == (alpha == beta == 1),
                detail=f"attained={lower_equal}",
            ),
        ]
    if len(factors) == 3 and all(e == 1 for e in factors.values()):
        p, q, _ = sorted(factors, reverse=True)
        lower = 2 * n - totient - p - q + 1
        checks.append(
            InequalityCheck(
                name="largest root >= 2n - phi(n) - p - q + 1",
                holds=at_least(largest, lower),
                detail=f"{_render(largest)} vs {lower}",
            )
        )

    name = f"P(Z_{n}) distance Laplacian spectrum"
    if number_class == NumberClass.PRIME_POWER:
        checks.append(_multiset_check(name, dist, Counter({0: 1, n: n - 1})))
    elif number_class == NumberClass.TWO_PRIMES:
        p, q = sorted(factors)
        expected = Counter({0: 1})
        for value, mult in (
            (n, totient + 1),
            (n + phi(p), phi(q) - 1),
            (n + phi(q), phi(p) - 1),
            (n + phi(p) + phi(q), 1),
        ):
            expected[value] += mult
        checks.append(_multiset_check(name, dist, expected))
    else:
        observed = exact_multiset(dist) or {}
        checks += [
            InequalityCheck(
                name=f"P(Z_{n}) root n has multiplicity at least phi(n)+1",
                holds=observed.get(n, 0) >= totient + 1,
                detail=f"multiplicity {observed.get(n, 0)}, phi(n)+1={totient + 1}",
            ),
            InequalityCheck(
                name=f"P(Z_{n}) nonzero roots are at least n",
                holds=all(at_least(r, n) for r in flat[1:]),
            ),
        ]
    return checks


def check_cut_bullets(
    graph: nx.Graph, lap: list[RealRoot], dist: list[RealRoot], r: int
) -> list[InequalityCheck]:
    """Vertex connectivity r, algebraic connectivity <= r and largest D^L root >= 2n - r."""
    n = graph.number_of_nodes()
    kappa = vertex_connectivity(graph)
    mu = _flat(lap)[1]
    largest = _flat(dist)[-1]
    return [
        InequalityCheck(name="vertex connectivity equals r", holds=kappa == r, detail=f"{kappa} vs r={r}"),
        InequalityCheck(
            name="algebraic connectivity <= r", holds=at_most(mu, r), detail=f"{_render(mu)} vs {r}"
        ),
        InequalityCheck(
            name="largest root >= 2n - r",
            holds=at_least(largest, 2 * n - r),
            detail=f"{_render(largest)} vs {2 * n - r}",
        ),
    ]


def _family_checks(
    spec: GroupSpec, graph: nx.Graph, lap: list[RealRoot], dist: list[RealRoot]
) -> list[InequalityCheck]:
    families = [f.family for f in spec.factors]
    if families == [GroupFamily.DIHEDRAL]:
        return check_dihedral_spectrum(spec.factors[0].params[0], dist)
    if families == [GroupFamily.DICYCLIC]:
        return check_dicyclic_spectrum(spec.factors[0].params[0], dist)
    if families == [GroupFamily.CYCLIC]:
        return check_cyclic_bounds(spec.factors[0].params[0], dist)
    if families == [GroupFamily.CYCLIC, GroupFamily.FROBENIUS]:
        (r,), (p, q) = spec.factors[0].params, spec.factors[1].params
        if is_prime(r) and p > q > r:
            return check_cut_bullets(graph, lap, dist, r)
    if families == [GroupFamily.F_P_QR]:
        _, q, r = spec.factors[0].params
        if 3 in (q, r):
            return check_cut_bullets(graph, lap, dist, r)
    return []


@timed("Inequalities checked")
def check_inequalities(spec: GroupSpec | str, proper: bool = False) -> InequalityReport:
    """Evaluate every applicable inequality on P(G) or P(G*).

    Raises:
        InvalidGroupSpecError: On invalid specs
        DisconnectedGraphError: For disconnected proper power graphs
        ToleranceNotReachedError: If a certified root cannot be separated from a bound
    """
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    graph = oracle_graph(spec, proper)
    require_connected(graph, MatrixKind.DL)
    n = graph.number_of_nodes()

    factorization = graph_spectrum_factorization(graph, MatrixKind.DL)
    dist = graph_spectrum(graph, MatrixKind.DL)
    lap = graph_spectrum(graph, MatrixKind.L)

    checks = check_distance_invariants(graph, factorization, dist)
    checks += check_second_smallest(graph, dist, proper)
    checks.append(check_fiedler(graph, lap))
    if not proper:
        if is_prime_power(n):
            reference = _dl_spectrum(power_graph(make_cyclic(n)))
            checks.append(check_spectral_dominance(dist, reference))
        checks += _family_checks(spec, graph, lap, dist)

    report = InequalityReport(group=str(spec), proper=proper, order=n, checks=tuple(checks))
    if report.holds:
        logger.info("All inequalities hold", group=str(spec), checks=len(checks))
    else:
        logger.warning(
            "Inequality failures", group=str(spec), failures=[c.name for c in report.failures]
        )
    return report
