"""Constructors for the finite group families.

Every group is materialized as a multiplication table. Semidirect products
take the action as one permutation of N per element of H.
"""

from collections.abc import Callable, Sequence

from src.powergraph_spectra.core.enums import GroupFamily
from src.powergraph_spectra.groups.axioms import check_axioms
from src.powergraph_spectra.core.exceptions import InvalidActionError, InvalidGroupSpecError
from src.powergraph_spectra.models.group import FiniteGroup, GroupSpec, check_preconditions
from src.powergraph_spectra.utils.logger import get_logger
from src.powergraph_spectra.utils.numbers import units_of_order

logger = get_logger(__name__)

Action = Sequence[Sequence[int]]


def make_cyclic(n: int) -> FiniteGroup:
    """Z_n under addition mod n.

    Raises:
        InvalidGroupSpecError: If n < 1
    """
    check_preconditions(GroupFamily.CYCLIC, (n,))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(
        table=table, identity=0, labels=tuple(str(i) for i in range(n)), name=f"Z_{n}"
    )


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G x H with componentwise operation; (a, b) has index a*|H| + b."""
    m = h.order
    table = tuple(
        tuple(
            g.table[a1][a2] * m + h.table[b1][b2]
            for a2 in g.elements
            for b2 in h.elements
        )
        for a1 in g.elements
        for b1 in h.elements
    )
    labels = tuple(f"({g.labels[a]},{h.labels[b]})" for a in g.elements for b in h.elements)
    group = FiniteGroup(
        table=table,
        identity=g.identity * m + h.identity,
        labels=labels,
        name=f"{g.name} x {h.name}",
    )
    logger.debug("Built direct product", name=group.name, order=group.order)
    return group


def validate_action(n_group: FiniteGroup, h_group: FiniteGroup, action: Action) -> None:
    """Check that the action is a homomorphism H -> Aut(N).

    Raises:
        InvalidActionError: If some image is not an automorphism of N or
            composition is not respected
    """
    if len(action) != h_group.order:
        raise InvalidActionError(
            f"Action has {len(action)} images, expected one per element of H ({h_group.order})"
        )
    for h, perm in enumerate(action):
        if sorted(perm) != list(n_group.elements):
            raise InvalidActionError(f"Image of H-element {h} is not a bijection of N")
        for a in n_group.elements:
            for b in n_group.elements:
                if perm[n_group.table[a][b]] != n_group.table[perm[a]][perm[b]]:
                    raise InvalidActionError(
                        f"Image of H-element {h} is not a homomorphism of N"
                    )
    for h1 in h_group.elements:
        for h2 in h_group.elements:
            composed = action[h_group.table[h1][h2]]
            if any(composed[x] != action[h1][action[h2][x]] for x in n_group.elements):
                raise InvalidActionError(
                    f"Action does not respect composition at ({h1}, {h2})"
                )


def semidirect_product(
    n_group: FiniteGroup, h_group: FiniteGroup, action: Action, name: str | None = None
) -> FiniteGroup:
    """N x| H with (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2).

    Args:
        n_group: Normal subgroup N
        h_group: Complement H
        action: action[h][x] is the image of x in N under h
        name: Optional display name

    Raises:
        InvalidActionError: If action is not a homomorphism H -> Aut(N)
    """
    validate_action(n_group, h_group, action)
    m = h_group.order
    table = tuple(
        tuple(
            n_group.table[n1][action[h1][n2]] * m + h_group.table[h1][h2]
            for n2 in n_group.elements
            for h2 in h_group.elements
        )
        for n1 in n_group.elements
        for h1 in h_group.elements
    )
    labels = tuple(
        f"({n_group.labels[a]},{h_group.labels[b]})"
        for a in n_group.elements
        for b in h_group.elements
    )
    group = FiniteGroup(
        table=table,
        identity=n_group.identity * m + h_group.identity,
        labels=labels,
        name=name or f"{n_group.name} x| {h_group.name}",
    )
    logger.debug("Built semidirect product", name=group.name, order=group.order)
    return group


def cyclic_action(
    n_group: FiniteGroup, h_order: int, automorphism: Callable[[int], int]
) -> list[list[int]]:
    """Action of Z_m on N generated by one automorphism: h acts as its h-th power."""
    images = [list(n_group.elements)]
    for _ in range(1, h_order):
        previous = images[-1]
        images.append([automorphism(previous[x]) for x in n_group.elements])
    return images


def make_dihedral(n: int) -> FiniteGroup:
    """D_2n = <r, s : r^n = s^2 = e, srs = r^-1>; r^i has index i, r^i s has index n+i.

    Raises:
        InvalidGroupSpecError: If n < 2
    """
    check_preconditions(GroupFamily.DIHEDRAL, (n,))

    def mul(x: int, y: int) -> int:
        i, s1 = x % n, x // n
        j, s2 = y % n, y // n
        k = (i + j) % n if s1 == 0 else (i - j) % n
        return k + n * (s1 ^ s2)

    size = 2 * n
    table = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
    labels = tuple([f"r^{i}" for i in range(n)] + [f"r^{i}s" for i in range(n)])
    return FiniteGroup(table=table, identity=0, labels=labels, name=f"D_{size}")


def make_dicyclic(n: int) -> FiniteGroup:
    """Q_n = <a, b : a^2n = e, b^2 = a^n, ab = ba^-1> of order 4n.

    a^i has index i and a^i b has index 2n+i.

    Raises:
        InvalidGroupSpecError: If n < 2
    """
    check_preconditions(GroupFamily.DICYCLIC, (n,))
    m = 2 * n

    def mul(x: int, y: int) -> int:
        i, j = x % m, x // m
        k, l = y % m, y // m
        if j == 0:
            return (i + k) % m + m * l
        if l == 0:
            return (i - k) % m + m
        return (i - k + n) % m

    size = 4 * n
    table = tuple(tuple(mul(x, y) for y in range(size)) for x in range(size))
    labels = tuple([f"a^{i}" for i in range(m)] + [f"a^{i}b" for i in range(m)])
    return FiniteGroup(table=table, identity=0, labels=labels, name=f"Q_{n}")


def _witness(order: int, modulus: int, witness: int | None, label: str) -> int:
    """Smallest unit of the given multiplicative order, or a validated override."""
    candidates = units_of_order(order, modulus)
    if witness is None:
        if not candidates:
            raise InvalidGroupSpecError(f"No {label} of order {order} modulo {modulus}")
        return candidates[0]
    if witness % modulus not in candidates:
        raise InvalidGroupSpecError(
            f"{label}={witness} does not have multiplicative order {order} modulo {modulus}"
        )
    return witness % modulus


def make_frobenius(p: int, q: int, witness: int | None = None) -> FiniteGroup:
    """F_{p,q} = Z_p x| Z_q with the generator of Z_q acting as x -> v x.

    Args:
        p: Prime with p = 1 (mod q)
        q: Prime
        witness: v of multiplicative order q mod p (default: smallest such v)

    Raises:
        InvalidGroupSpecError: If the congruence or the witness order fails
    """
    check_preconditions(GroupFamily.FROBENIUS, (p, q))
    v = _witness(q, p, witness, "v")
    zp = make_cyclic(p)
    action = cyclic_action(zp, q, lambda x: x * v % p)
    logger.debug("Building Frobenius group", p=p, q=q, v=v)
    return semidirect_product(zp, make_cyclic(q), action, name=f"F_{p},{q}")


def make_f_p_qr(p: int, q: int, r: int, witness: int | None = None) -> FiniteGroup:
    """F_{p,qr} = Z_p x| Z_qr with the generator acting as x -> v x, ord_p(v) = qr.

    Raises:
        InvalidGroupSpecError: If p != 1 (mod qr) or the witness order fails
    """
    check_preconditions(GroupFamily.F_P_QR, (p, q, r))
    v = _witness(q * r, p, witness, "v")
    zp = make_cyclic(p)
    action = cyclic_action(zp, q * r, lambda x: x * v % p)
    logger.debug("Building F_p,qr", p=p, q=q, r=r, v=v)
    return semidirect_product(zp, make_cyclic(q * r), action, name=f"F_{p},{q * r}")


def make_g_i5(
    p: int,
    q: int,
    r: int,
    i: int = 1,
    u: int | None = None,
    v: int | None = None,
) -> FiniteGroup:
    """G_{i+5} = (Z_p x Z_q) x| Z_r with c acting as b -> b^u and a -> a^(v^i).

    Args:
        p, q, r: Primes with p = q = 1 (mod r)
        i: Index with 1 <= i <= r-1
        u: Unit of order r mod q (default: smallest)
        v: Unit of order r mod p (default: smallest)

    Raises:
        InvalidGroupSpecError: If congruences or witness orders fail
    """
    check_preconditions(GroupFamily.G_I5, (p, q, r, i))
    u = _witness(r, q, u, "u")
    v = _witness(r, p, v, "v")
    vi = pow(v, i, p)
    n_group = direct_product(make_cyclic(p), make_cyclic(q))

    def automorphism(x: int) -> int:
        a, b = divmod(x, q)
        return (a * vi % p) * q + b * u % q

    action = cyclic_action(n_group, r, automorphism)
    logger.debug("Building G_i+5", p=p, q=q, r=r, i=i, u=u, v=v)
    return semidirect_product(n_group, make_cyclic(r), action, name=f"G_{i}+5({p},{q},{r})")


def make_zp_zp2(p: int) -> FiniteGroup:
    """Z_p x Z_p^2."""
    check_preconditions(GroupFamily.ZP_ZP2, (p,))
    return direct_product(make_cyclic(p), make_cyclic(p * p))


def make_elem_abelian_p3(p: int) -> FiniteGroup:
    """Z_p x Z_p x Z_p."""
    check_preconditions(GroupFamily.ELEM_ABELIAN_P3, (p,))
    zp = make_cyclic(p)
    return direct_product(direct_product(zp, zp), zp)


def make_zp_semidirect_zp2(p: int) -> FiniteGroup:
    """<x, y : x^(p^2) = y^p = 1, y^-1 x y = x^(p+1)> as Z_p^2 x| Z_p.

    At p = 2 this is the dihedral group of order 8.
    """
    check_preconditions(GroupFamily.ZP_SEMIDIRECT_ZP2, (p,))
    modulus = p * p
    n_group = make_cyclic(modulus)
    action = cyclic_action(n_group, p, lambda x: x * (p + 1) % modulus)
    return semidirect_product(n_group, make_cyclic(p), action, name=f"Z_{modulus} x| Z_{p}")


def make_heisenberg(p: int) -> FiniteGroup:
    """<x, y, z : x^p = y^p = z^p = 1, xy = yx, zy = yz, xz = zxy> as (Z_p x Z_p) x| Z_p.

    z acts on N = <x> x <y> by (a, b) -> (a, a + b).
    """
    check_preconditions(GroupFamily.HEISENBERG, (p,))
    n_group = direct_product(make_cyclic(p), make_cyclic(p))

    def automorphism(x: int) -> int:
        a, b = divmod(x, p)
        return a * p + (a + b) % p

    action = cyclic_action(n_group, p, automorphism)
    return semidirect_product(n_group, make_cyclic(p), action, name=f"Heis({p})")


def _build_factor(family: GroupFamily, params: tuple[int, ...]) -> FiniteGroup:
    if family == GroupFamily.CYCLIC:
        return make_cyclic(*params)
    if family == GroupFamily.DIHEDRAL:
        return make_dihedral(*params)
    if family == GroupFamily.DICYCLIC:
        return make_dicyclic(*params)
    if family == GroupFamily.FROBENIUS:
        return make_frobenius(*params)
    if family == GroupFamily.F_P_QR:
        return make_f_p_qr(*params)
    if family == GroupFamily.G_I5:
        return make_g_i5(*params)
    if family == GroupFamily.ZP_ZP2:
        return make_zp_zp2(*params)
    if family == GroupFamily.ELEM_ABELIAN_P3:
        return make_elem_abelian_p3(*params)
    if family == GroupFamily.ZP_SEMIDIRECT_ZP2:
        return make_zp_semidirect_zp2(*params)
    if family == GroupFamily.HEISENBERG:
        return make_heisenberg(*params)
    if family == GroupFamily.Z2_SEMIDIRECT_Z4:
        return make_zp_semidirect_zp2(2)
    raise InvalidGroupSpecError(f"Unsupported family: {family}")


def build_group(spec: GroupSpec | str) -> FiniteGroup:
    """Materialize a group spec (or its text form) as a FiniteGroup.

    The table is checked against the group axioms before it is returned.

    Raises:
        InvalidGroupSpecError: On invalid specs
        GroupAxiomError: If the constructed table is not a group
    """
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    group = _build_factor(spec.factors[0].family, spec.factors[0].params)
    for factor in spec.factors[1:]:
        group = direct_product(group, _build_factor(factor.family, factor.params))
    checked = check_axioms(group)
    logger.debug(
        "Built group",
        spec=str(spec),
        order=group.order,
        axioms_exhaustive=checked.exhaustive,
    )
    return group
