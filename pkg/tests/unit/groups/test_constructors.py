"""Tests for group constructors."""

import pytest

from src.powergraph_spectra.core.exceptions import (
    GroupAxiomError,
    InvalidActionError,
    InvalidGroupSpecError,
)
from src.powergraph_spectra.groups import constructors
from src.powergraph_spectra.groups.axioms import check_axioms
from src.powergraph_spectra.groups.constructors import (
    build_group,
    direct_product,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_f_p_qr,
    make_frobenius,
    make_g_i5,
    make_heisenberg,
    make_zp_semidirect_zp2,
    semidirect_product,
)
from src.powergraph_spectra.models.group import FiniteGroup
from tests.fixtures.graphs import ORDER_CENSUS, Z12_ELEMENT_ORDERS


class TestCyclic:
    """Test Z_n."""

    def test_trivial_group(self):
        """Z_1 has only the identity."""
        group = make_cyclic(1)
        assert group.order == 1
        assert group.element_orders == (1,)

    def test_element_orders(self):
        """Orders in Z_12 follow n / gcd(k, n)."""
        assert make_cyclic(12).element_orders == Z12_ELEMENT_ORDERS

    def test_element_two_in_z6(self):
        """2 has order 3 and 1 has order 6 in Z_6."""
        group = make_cyclic(6)
        assert group.element_order(2) == 3
        assert group.element_order(1) == 6
        assert group.is_cyclic()

    def test_rejects_zero(self):
        """n = 0 is rejected."""
        with pytest.raises(InvalidGroupSpecError):
            make_cyclic(0)


class TestFamilies:
    """Test order census of every family."""

    @pytest.mark.parametrize("spec,census", sorted(ORDER_CENSUS.items()))
    def test_order_census(self, spec, census):
        """Element orders match hand counts."""
        assert build_group(spec).order_census() == census

    def test_dihedral_relations(self):
        """srs = r^-1 in D_2n."""
        n = 5
        group = make_dihedral(n)
        r, s = 1, n
        assert group.order == 2 * n
        assert group.op(group.op(s, r), s) == group.inverse(r)
        assert not group.is_abelian()

    def test_dicyclic_has_unique_involution(self):
        """b^2 = a^n is the only element of order 2."""
        group = make_dicyclic(3)
        assert group.order == 12
        assert group.order_census()[2] == 1
        assert group.op(6, 6) == 3

    def test_frobenius_is_nonabelian_of_order_pq(self):
        """F_{7,3} has order 21 and trivial center."""
        group = make_frobenius(7, 3)
        assert group.order == 21
        assert group.center() == [group.identity]

    def test_frobenius_rejects_bad_witness(self):
        """A witness of the wrong multiplicative order is rejected."""
        with pytest.raises(InvalidGroupSpecError, match="multiplicative order"):
            make_frobenius(7, 3, witness=3)

    def test_f_p_qr(self):
        """F_{7,6} has order 42 with 6 elements of order 7."""
        group = make_f_p_qr(7, 3, 2)
        assert group.order == 42
        assert group.order_census()[7] == 6

    def test_g_i5_orders(self):
        """(Z_5 x Z_3) x| Z_2 with inversion has 15 involutions."""
        group = make_g_i5(5, 3, 2)
        assert group.order == 30
        assert group.order_census() == {1: 1, 2: 15, 3: 2, 5: 4, 15: 8}

    def test_g_i5_rejects_index_out_of_range(self):
        """i must lie in 1..r-1."""
        with pytest.raises(InvalidGroupSpecError):
            make_g_i5(5, 3, 2, i=2)

    def test_heisenberg_is_nonabelian(self):
        """The Heisenberg group mod p is nonabelian of exponent p for odd p."""
        group = make_heisenberg(3)
        assert group.order == 27
        assert not group.is_abelian()
        assert len(group.center()) == 3

    def test_zp_semidirect_zp2_at_two_is_dihedral(self):
        """At p = 2 the group has the order census of D_8."""
        assert make_zp_semidirect_zp2(2).order_census() == ORDER_CENSUS["dihedral:4"]

    def test_direct_product_orders(self):
        """Z_2 x Z_2 is the Klein group."""
        group = direct_product(make_cyclic(2), make_cyclic(2))
        assert group.order_census() == {1: 1, 2: 3}


class TestSemidirectProduct:
    """Test action validation."""

    def test_rejects_non_automorphism(self):
        """An image that moves the identity is not an automorphism."""
        z3 = make_cyclic(3)
        z2 = make_cyclic(2)
        with pytest.raises(InvalidActionError):
            semidirect_product(z3, z2, [[0, 1, 2], [1, 0, 2]])

    def test_rejects_wrong_image_count(self):
        """One image per element of H is required."""
        with pytest.raises(InvalidActionError, match="expected one per element"):
            semidirect_product(make_cyclic(3), make_cyclic(2), [[0, 1, 2]])

    def test_rejects_non_homomorphic_action(self):
        """Inversion on Z_3 is an automorphism, but Z_3 cannot act through it."""
        z3 = make_cyclic(3)
        inversion = [0, 2, 1]
        with pytest.raises(InvalidActionError, match="composition"):
            semidirect_product(z3, z3, [[0, 1, 2], inversion, inversion])

    def test_inversion_action_gives_s3(self):
        """Z_3 x| Z_2 by inversion is nonabelian of order 6."""
        group = semidirect_product(make_cyclic(3), make_cyclic(2), [[0, 1, 2], [0, 2, 1]])
        assert group.order == 6
        assert not group.is_abelian()
        check_axioms(group)


class TestBuildGroup:
    """Test building groups from spec strings."""

    def test_build_from_text(self):
        """Products multiply orders."""
        assert build_group("cyclic:2 x frobenius:7,3").order == 42

    def test_alias_z2sdz4(self):
        """z2sdz4 builds Z_4 x| Z_2."""
        assert build_group("z2sdz4").order == 8

    def test_rejects_invalid_spec(self):
        """Invalid specs raise InvalidGroupSpecError."""
        with pytest.raises(InvalidGroupSpecError):
            build_group("frobenius:7,5")

    def test_checks_axioms_before_returning(self, monkeypatch):
        """A table that is not a group never leaves build_group."""
        bad = FiniteGroup(table=((1, 0), (0, 1)), identity=0, labels=("e", "a"), name="bad")
        monkeypatch.setattr(constructors, "_build_factor", lambda family, params: bad)
        with pytest.raises(GroupAxiomError, match="identity"):
            build_group("cyclic:2")
