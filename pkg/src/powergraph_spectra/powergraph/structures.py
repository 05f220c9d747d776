"""Joined-union decompositions of the power graphs with a closed form.

Each builder lays parts out left to right in display order and tags every
vertex with a coarse ``part`` name. Vertices sharing a part name form one
block of the quotient partition used by the residual factors.
"""

from collections.abc import Sequence

import networkx as nx

from src.powergraph_spectra.core.enums import GroupFamily, StructureFamily
from src.powergraph_spectra.core.exceptions import InvalidGroupSpecError
from src.powergraph_spectra.models.group import precondition_errors
from src.powergraph_spectra.models.theorem import parse_assignments
from src.powergraph_spectra.powergraph.builders import (
    complete_graph,
    divisor_graph,
    empty_graph,
    joined_union,
)
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.utils.numbers import is_prime, is_power_of_two, phi

logger = get_logger(__name__)

STRUCTURE_PARAM_NAMES: dict[StructureFamily, tuple[str, ...]] = {
    StructureFamily.ZP_ZP2: ("p",),
    StructureFamily.ELEM_ABELIAN_P3: ("p",),
    StructureFamily.Z2_SEMIDIRECT_Z4: (),
    StructureFamily.ZR_FPQ: ("r", "p", "q"),
    StructureFamily.F_P_QR: ("p", "q", "r"),
    StructureFamily.G_I5: ("p", "q", "r"),
    StructureFamily.PROPER_CYCLIC: ("n",),
    StructureFamily.PROPER_DICYCLIC: ("n",),
}


def fpqr_case(q: int, r: int) -> str:
    """Case label of the F_{p,qr} closed forms: "i" when q or r is 3."""
    return "i" if 3 in (q, r) else "ii"


def validate_structure_params(family: StructureFamily, params: Sequence[int]) -> None:
    """Check parameter count and arithmetic for a structural family.

    Raises:
        InvalidGroupSpecError: On a wrong parameter count or violated precondition
    """
    names = STRUCTURE_PARAM_NAMES[family]
    if len(params) != len(names):
        raise InvalidGroupSpecError(
            f"{family.value} takes parameters ({', '.join(names)}), got {len(params)} value(s)"
        )
    errors: list[str] = []
    if family == StructureFamily.ZP_ZP2:
        errors = precondition_errors(GroupFamily.ZP_ZP2, tuple(params))
    elif family == StructureFamily.ELEM_ABELIAN_P3:
        errors = precondition_errors(GroupFamily.ELEM_ABELIAN_P3, tuple(params))
    elif family == StructureFamily.ZR_FPQ:
        r, p, q = params
        errors = precondition_errors(GroupFamily.FROBENIUS, (p, q))
        if not is_prime(r):
            errors.append(f"r={r} must be prime")
        elif not p > q > r:
            errors.append(f"primes must satisfy p > q > r, got p={p}, q={q}, r={r}")
    elif family == StructureFamily.F_P_QR:
        errors = precondition_errors(GroupFamily.F_P_QR, tuple(params))
    elif family == StructureFamily.G_I5:
        errors = precondition_errors(GroupFamily.G_I5, tuple(params))
    elif family == StructureFamily.PROPER_CYCLIC:
        if params[0] < 2:
            errors.append("n must be >= 2")
    elif family == StructureFamily.PROPER_DICYCLIC:
        if params[0] < 2:
            errors.append("n must be >= 2")
    if errors:
        raise InvalidGroupSpecError(f"{family.value}: " + "; ".join(errors))


def structure_source(family: StructureFamily, params: Sequence[int]) -> tuple[str, bool]:
    """Group spec text and proper flag of the group a structure describes."""
    if family == StructureFamily.ZP_ZP2:
        return f"zpzp2:{params[0]}", False
    if family == StructureFamily.ELEM_ABELIAN_P3:
        return f"elemab3:{params[0]}", False
    if family == StructureFamily.Z2_SEMIDIRECT_Z4:
        return "z2sdz4", False
    if family == StructureFamily.ZR_FPQ:
        r, p, q = params
        return f"cyclic:{r} x frobenius:{p},{q}", False
    if family == StructureFamily.F_P_QR:
        p, q, r = params
        return f"fpqr:{p},{q},{r}", False
    if family == StructureFamily.G_I5:
        p, q, r = params
        return f"gi5:{p},{q},{r}", False
    if family == StructureFamily.PROPER_CYCLIC:
        return f"cyclic:{params[0]}", True
    return f"dicyclic:{params[0]}", True


def _assemble(
    base_edges: Sequence[tuple[int, int]],
    parts: Sequence[tuple[str, nx.Graph]],
    name: str,
) -> nx.Graph:
    """Joined union over a base given by edges, with coarse part names."""
    base = nx.empty_graph(len(parts))
    base.add_edges_from(base_edges)
    graph = joined_union(base, [part for _, part in parts])
    offset = 0
    for part_name, part in parts:
        for k in range(part.number_of_nodes()):
            graph.nodes[offset + k]["part"] = part_name
            graph.nodes[offset + k]["label"] = f"{part_name}.{k}"
        offset += part.number_of_nodes()
    graph.graph["name"] = name
    return graph


def _cone(apex: int, count: int) -> list[tuple[int, int]]:
    return [(apex, j) for j in range(count) if j != apex]


def zp_zp2_structure(p: int) -> nx.Graph:
    """K_1 v (p K_{p-1} u (K_{p-1} v p K_{p^2-p}))."""
    parts = [("e", complete_graph(1))]
    parts += [("order p", complete_graph(p - 1)) for _ in range(p)]
    parts.append(("order p, central", complete_graph(p - 1)))
    parts += [("order p^2", complete_graph(p * p - p)) for _ in range(p)]
    hub = p + 1
    edges = _cone(0, len(parts)) + [(hub, hub + 1 + j) for j in range(p)]
    return _assemble(edges, parts, f"P(Z_{p} x Z_{p * p})")


def elem_abelian_structure(p: int) -> nx.Graph:
    """K_1 v (p^2+p+1) K_{p-1}."""
    k = p * p + p + 1
    parts = [("e", complete_graph(1))] + [("order p", complete_graph(p - 1)) for _ in range(k)]
    return _assemble(_cone(0, len(parts)), parts, f"P(Z_{p}^3)")


def z2_semidirect_z4_structure() -> nx.Graph:
    """K_1 v (K_3 u K̄_4)."""
    parts = [("e", complete_graph(1)), ("cyclic", complete_graph(3)), ("involutions", empty_graph(4))]
    return _assemble(_cone(0, 3), parts, "P(Z_2 sd Z_4)")


def zr_fpq_structure(r: int, p: int, q: int) -> nx.Graph:
    """Z_r x F_{p,q}: e joined to all; chain A - B - C, C to every S_j, S_j to T_j.

    A: order p, B: order pr, C: order r, S_j: order qr, T_j: order q, with S_j
    and T_j repeated p times.
    """
    parts = [
        ("e", complete_graph(1)),
        ("A", complete_graph(p - 1)),
        ("B", complete_graph((p - 1) * (r - 1))),
        ("C", complete_graph(r - 1)),
    ]
    parts += [("S", complete_graph((q - 1) * (r - 1))) for _ in range(p)]
    parts += [("T", complete_graph(q - 1)) for _ in range(p)]
    s0, t0 = 4, 4 + p
    edges = _cone(0, len(parts)) + [(1, 2), (2, 3)]
    edges += [(3, s0 + j) for j in range(p)]
    edges += [(s0 + j, t0 + j) for j in range(p)]
    return _assemble(edges, parts, f"P(Z_{r} x F_{p},{q})")


def f_p_qr_structure(p: int, q: int, r: int) -> nx.Graph:
    """Displayed decomposition of P(F_{p,qr}), selected by the q, r = 3 case split.

    Case i: K_1 v (K_{p-1} v K_{pr-p-r+1} v K_{r-1} v p K_{qr-r}) read as a chain.
    Case ii: K_1 v p K_{qr-1}, which has pqr - p + 1 vertices rather than pqr.
    """
    if fpqr_case(q, r) == "i":
        parts = [
            ("e", complete_graph(1)),
            ("A", complete_graph(p - 1)),
            ("B", complete_graph(p * r - p - r + 1)),
            ("C", complete_graph(r - 1)),
        ]
        parts += [("S", complete_graph(q * r - r)) for _ in range(p)]
        edges = _cone(0, len(parts)) + [(1, 2), (2, 3)] + [(3, 4 + j) for j in range(p)]
    else:
        parts = [("e", complete_graph(1))] + [("S", complete_graph(q * r - 1)) for _ in range(p)]
        edges = _cone(0, len(parts))
    graph = _assemble(edges, parts, f"P(F_{p},{q * r})")
    if graph.number_of_nodes() != p * q * r:
        logger.warning(
            "Displayed structure vertex count differs from group order",
            family="fpqr",
            vertices=graph.number_of_nodes(),
            order=p * q * r,
        )
    return graph


def g_i5_structure(p: int, q: int, r: int) -> nx.Graph:
    """K_1 v (pq K_{r-1} u (K_{p-1} v K_{(p-1)(q-1)} v K_{q-1})) with the inner join a chain.

    The pq copies of K_{r-1} are the Sylow r-subgroups minus the identity;
    the chain is the cyclic normal subgroup Z_p x Z_q.
    """
    parts = [("e", complete_graph(1))]
    parts += [("order r", complete_graph(r - 1)) for _ in range(p * q)]
    a = len(parts)
    parts += [
        ("order p", complete_graph(p - 1)),
        ("order pq", complete_graph((p - 1) * (q - 1))),
        ("order q", complete_graph(q - 1)),
    ]
    edges = _cone(0, len(parts)) + [(a, a + 1), (a + 1, a + 2)]
    return _assemble(edges, parts, f"P(G({p},{q},{r}))")


def proper_cyclic_structure(n: int) -> nx.Graph:
    """P*(Z_n) = K_{phi(n)} v Delta_n[K_{phi(d_1)}, ..., K_{phi(d_t)}]."""
    delta = divisor_graph(n)
    parts = [("generators", complete_graph(phi(n)))]
    parts += [(f"d={d}", complete_graph(phi(d))) for d in delta.divisors]
    edges = _cone(0, len(parts))
    edges += [(i + 1, j + 1) for i, j in delta.graph.edges]
    return _assemble(edges, parts, f"P*(Z_{n})")


def proper_dicyclic_structure(n: int) -> nx.Graph:
    """P(Q_n*) = K_1 v (K_{2n-2} u n K_2)."""
    parts = [("center", complete_graph(1)), ("cyclic", complete_graph(2 * n - 2))]
    parts += [("order 4", complete_graph(2)) for _ in range(n)]
    if not is_power_of_two(n):
        logger.info("Dicyclic structure used outside generalized quaternion groups", n=n)
    return _assemble(_cone(0, len(parts)), parts, f"P(Q_{n}*)")


def structural_power_graph(family: StructureFamily, params: Sequence[int] = ()) -> nx.Graph:
    """Build the joined-union decomposition of a family.

    Args:
        family: Structural family
        params: Parameters in the order of STRUCTURE_PARAM_NAMES

    Returns:
        Graph whose vertices carry coarse ``part`` names

    Raises:
        InvalidGroupSpecError: On invalid parameters
    """
    validate_structure_params(family, params)
    if family == StructureFamily.ZP_ZP2:
        return zp_zp2_structure(params[0])
    if family == StructureFamily.ELEM_ABELIAN_P3:
        return elem_abelian_structure(params[0])
    if family == StructureFamily.Z2_SEMIDIRECT_Z4:
        return z2_semidirect_z4_structure()
    if family == StructureFamily.ZR_FPQ:
        return zr_fpq_structure(*params)
    if family == StructureFamily.F_P_QR:
        return f_p_qr_structure(*params)
    if family == StructureFamily.G_I5:
        return g_i5_structure(*params)
    if family == StructureFamily.PROPER_CYCLIC:
        return proper_cyclic_structure(params[0])
    return proper_dicyclic_structure(params[0])


def part_classes(graph: nx.Graph) -> list[list[int]]:
    """Vertex blocks by ``part`` name, in first-appearance order."""
    blocks: dict[object, list[int]] = {}
    for v in sorted(graph.nodes):
        blocks.setdefault(graph.nodes[v].get("part", v), []).append(v)
    return list(blocks.values())


def parse_structure_params(family: StructureFamily | str, text: str = "") -> tuple[int, ...]:
    """Parse ``r=2,p=7,q=3`` into the family's parameter order.

    Raises:
        InvalidGroupSpecError: On unknown families, malformed pairs or wrong names
    """
    try:
        family = StructureFamily(family)
    except ValueError as e:
        raise InvalidGroupSpecError(f"Unknown structure family: {family!r}") from e
    values = parse_assignments(text, InvalidGroupSpecError)
    names = STRUCTURE_PARAM_NAMES[family]
    if set(values) != set(names):
        raise InvalidGroupSpecError(
            f"{family.value} takes parameters ({', '.join(names)}), got ({', '.join(sorted(values))})"
        )
    return tuple(values[n] for n in names)
