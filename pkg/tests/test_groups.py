"""
Tests for the group layer: closure, catalogue, classes, subgroups
and genus spectra.
"""

import pytest
import sys
import os

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import CapExceeded, ConfigError, GroupError, ParseError
from groups import (
    Signature,
    admissible_signatures,
    class_fusion,
    conjugacy_data,
    curve_orbit_lengths,
    doubly_transitive_sizes,
    generate_group,
    genus_spectrum,
    get_group,
    hurwitz_min_genus,
    maximal_subgroup_classes,
    min_orbit_length,
    signatures,
    subgroup_classes,
    subgroup_order_obstruction,
    transitive_action_sizes,
)
from groups.elements import PermOps
from groups.library import catalogue, load_group_file


class TestClosure:
    """Tests for breadth-first generation."""

    def test_symmetric_group(self):
        """A transposition and a 4-cycle generate S4."""
        G = generate_group([[1, 0, 2, 3], [1, 2, 3, 0]], PermOps(4), expected_order=24, name="S4")
        assert G.order == 24
        assert G.mul(3, G.inv(3)) == 0
        assert all(G.mul(G.mul(a, b), 5) == G.mul(a, G.mul(b, 5)) for a in range(24) for b in range(24))

    def test_wrong_declared_order(self):
        """A declared order that the closure does not reach is an error."""
        with pytest.raises(GroupError):
            generate_group([[1, 0, 2]], PermOps(3), expected_order=6)

    def test_closure_cap(self):
        """Closure stops once it grows past the cap."""
        with pytest.raises(CapExceeded):
            generate_group([[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]], PermOps(5), cap=50)

    def test_invalid_permutation(self):
        """Generators must be permutations of the right degree."""
        with pytest.raises(GroupError):
            generate_group([[0, 0, 1]], PermOps(3))

    def test_element_orders(self, klein_group):
        """Element orders of PSL(2,7) are 1, 2, 3, 4 and 7."""
        orders = {klein_group.element_order(i) for i in range(klein_group.order)}
        assert orders == {1, 2, 3, 4, 7}


class TestCatalogue:
    """Tests for the bundled group catalogue."""

    @pytest.mark.parametrize("name,order", [
        ("C7:C3", 21),
        ("C14:C3", 42),
        ("(C7:C3)xC3", 63),
        ("C7:C9", 63),
        ("PSL(2,7)", 168),
        ("SL(2,7)", 336),
        ("SL(2,8)", 504),
        ("A7", 2520),
        ("A5", 60),
        ("D6", 12),
    ])
    def test_orders(self, name, order):
        """Every generator set closes to its declared order."""
        assert get_group(name).order == order

    @pytest.mark.slow
    def test_double_cover_a7(self):
        """The Clifford-algebra generators give 2.A7."""
        assert get_group("2.A7").order == 5040

    def test_unknown_group(self):
        """Unknown names are configuration errors."""
        with pytest.raises(ConfigError):
            get_group("M11")

    def test_max_order_cap(self):
        """Groups above max_order are refused before closure."""
        with pytest.raises(CapExceeded) as exc:
            get_group("Sp(4,3)", max_order=1000)
        assert exc.value.undecided == ["Sp(4,3)"]

    def test_grp_file_errors(self, tmp_path):
        """Malformed .grp files raise ParseError with the line number."""
        bad = tmp_path / "bad.grp"
        bad.write_text("name X\ndomain perm 3\norder six\ngen [1,0,2]\n")
        with pytest.raises(ParseError) as exc:
            load_group_file(bad)
        assert exc.value.line == 3

        unknown = tmp_path / "unknown.grp"
        unknown.write_text("name X\nsize 2\n")
        with pytest.raises(ParseError):
            load_group_file(unknown)

    def test_grp_file_order_checked(self, tmp_path):
        """The declared order is checked when the group is built."""
        path = tmp_path / "c3.grp"
        path.write_text("name C3?\ndomain perm 3\norder 6\ngen [1,2,0]\n")
        spec = load_group_file(path)
        with pytest.raises(GroupError):
            spec.build()


class TestConjugacy:
    """Tests for conjugacy classes and fusion."""

    def test_klein_classes(self, klein_classes):
        """PSL(2,7) has six classes: 1, 21, 56, 42, 24, 24."""
        assert klein_classes.count == 6
        assert klein_classes.orders == [1, 2, 3, 4, 7, 7]
        assert klein_classes.sizes == [1, 21, 56, 42, 24, 24]
        assert klein_classes.group_order == 168

    @pytest.mark.parametrize("name,count", [("C7:C3", 5), ("SL(2,7)", 11), ("SL(2,8)", 9), ("A7", 9)])
    def test_class_counts(self, name, count):
        assert conjugacy_data(get_group(name)).count == count

    def test_power_maps(self, klein_classes):
        """Squaring a 7-element stays in its class; inversion swaps 7A and 7B."""
        seven_a = klein_classes.orders.index(7)
        assert klein_classes.power_class(seven_a, 2) == seven_a
        assert klein_classes.inverse_class(seven_a) == seven_a + 1

    def test_borel_fusion(self, klein_group, klein_classes):
        """The two classes of order 3 in C7:C3 fuse in PSL(2,7); the 7-classes stay apart."""
        H = generate_group(
            [[1, 2, 3, 4, 5, 6, 0, 7], [0, 2, 4, 6, 1, 3, 5, 7]], PermOps(8), expected_order=21, name="C7:C3"
        )
        H_classes = conjugacy_data(H)
        fusion = class_fusion(H, H_classes, klein_group, klein_classes)
        assert [klein_classes.orders[c] for c in fusion] == H_classes.orders
        assert len(set(fusion)) == 4


class TestClassEquation:
    """Class sizes against centralizers across the catalogue."""

    @pytest.fixture(params=sorted(catalogue()))
    def group_and_classes(self, request):
        try:
            G = get_group(request.param, max_order=2520)
        except CapExceeded:
            pytest.skip(f"{request.param} is above the test order cap")
        return G, conjugacy_data(G)

    def test_class_equation(self, group_and_classes):
        G, classes = group_and_classes
        assert sum(classes.sizes) == G.order
        assert classes.sizes[0] == 1

    def test_orbit_stabilizer(self, group_and_classes):
        """|class of x| * |C_G(x)| = |G| with the centralizer counted directly."""
        G, classes = group_and_classes
        for rep, size in zip(classes.reps, classes.sizes):
            centralizer = sum(1 for g in range(G.order) if G.mul(g, rep) == G.mul(rep, g))
            assert size * centralizer == G.order


class TestSubgroups:
    """Tests for the subgroup lattice of PSL(2,7)."""

    def test_indices(self, klein_group, klein_classes):
        """Indices of the nontrivial proper subgroup classes."""
        classes = subgroup_classes(klein_group, classes=klein_classes)
        assert sorted(c.index for c in classes) == [7, 7, 8, 14, 14, 21, 24, 28, 42, 42, 42, 56, 84]

    def test_maximal(self, klein_lattice):
        """Maximal subgroups: two classes of S4 and the Borel C7:C3."""
        maximal = maximal_subgroup_classes(klein_lattice, 168)
        assert sorted(c.index for c in maximal) == [7, 7, 8]
        assert sorted(c.name for c in maximal if c.index == 7) == ["S4", "S4"]

    def test_action_sizes(self, klein_group, klein_lattice):
        """Transitive actions on at most 14 points; only 7 and 8 are doubly transitive."""
        assert transitive_action_sizes(klein_group, 14, klein_lattice) == [7, 8, 14]
        assert doubly_transitive_sizes(klein_group, 14, klein_lattice) == [7, 8]
        assert transitive_action_sizes(klein_group, 42, klein_lattice) == [7, 8, 14, 21, 24, 28, 42]

    def test_curve_orbits(self, klein_group, klein_classes):
        """Orbits with cyclic stabilizer have length |G|/o for an element order o."""
        assert curve_orbit_lengths(klein_group, klein_classes) == [24, 42, 56, 84, 168]

    def test_order_obstruction(self, klein_group, klein_classes):
        """No subgroup of order 14 or 28: a normal Sylow 7 would need N(C7) of order divisible by it."""
        assert subgroup_order_obstruction(klein_group, 5, klein_classes) is not None
        assert subgroup_order_obstruction(klein_group, 14, klein_classes) is not None
        assert subgroup_order_obstruction(klein_group, 21, klein_classes) is None


class TestGenus:
    """Tests for Riemann-Hurwitz signatures and generating vectors."""

    def test_signature_genus(self):
        """(0; 2,3,7) has genus 3 for order 168; (0; 2,3,8) gives no integer genus."""
        assert Signature(0, (2, 3, 7)).genus(168) == 3
        assert Signature(0, (2, 3, 8)).genus(168) is None
        assert str(Signature(0, (2, 3, 7))) == "(0; 2, 3, 7)"

    @pytest.mark.parametrize("order,genus", [(168, 3), (504, 7), (21, 2), (2520, 31)])
    def test_hurwitz_bound(self, order, genus):
        assert hurwitz_min_genus(order) == genus

    def test_hurwitz_rejects_trivial(self):
        with pytest.raises(ValueError):
            hurwitz_min_genus(1)

    def test_klein_quartic_genus(self, klein_group, klein_classes):
        """PSL(2,7) acts in genus 3 through (2,3,7) only; the shortest orbit has 24 points."""
        assert genus_spectrum(klein_group, 3, classes=klein_classes) == [3]
        assert admissible_signatures(klein_group, 3, klein_classes) == [Signature(0, (2, 3, 7))]
        assert min_orbit_length(klein_group, 3, klein_classes) == 24

    def test_genus_domain(self, klein_group, klein_classes):
        """Enumeration starts at genus 2: C2 acts on genus 2 through (0; 2, 2, 2, 2, 2, 2)."""
        sigs = signatures(2, [2], 5)
        assert min(sigs) == 2
        assert Signature(0, (2,) * 6) in sigs[2]
        with pytest.raises(ValueError):
            admissible_signatures(klein_group, 1, klein_classes)

    def test_signature_superset(self, klein_group, klein_classes):
        """Without the search, genera come from signature arithmetic alone."""
        arithmetic = genus_spectrum(klein_group, 8, search=False, classes=klein_classes)
        assert 3 in arithmetic
        assert 2 not in arithmetic

    @pytest.mark.slow
    def test_sl28_genus_seven(self):
        """SL(2,8) is a Hurwitz group: it acts in genus 7."""
        G = get_group("SL(2,8)")
        assert genus_spectrum(G, 7) == [7]
