import pytest
from ccsgraph_lib.classes import (
    commuting_cross_prime_pair,
    cross_prime_pairs,
    g_classes,
    group_classes,
    noncentral_elements,
    p_elements,
    realized_sizes,
)
from ccsgraph_lib.exceptions import InvalidInput, NotNormalError
from ccsgraph_lib.groups import normal_subgroups, subgroup_generated, whole_group
from oracles import class_sizes, sympy_class_sizes


def normal_of_order(group, order):
    return next(n for n in normal_subgroups(group) if n.order == order)


# ---------------------------------------------------------
# Class sizes
# ---------------------------------------------------------


class TestClassSizes:
    """G-class sizes against orbit enumeration."""

    @pytest.mark.parametrize(
        "fixture, cs",
        [
            ("s3", (1, 2, 3)),
            ("d8", (1, 2)),
            ("q8", (1, 2)),
            ("f20", (1, 4, 5)),
            ("a4", (1, 3, 4)),
            ("s4", (1, 3, 6, 8)),
            ("sl23", (1, 4, 6)),
            ("c6", (1,)),
        ],
    )
    def test_cs_values(self, request, fixture, cs):
        """Test cs(G) for small groups."""
        assert group_classes(request.getfixturevalue(fixture)).cs_values == cs

    def test_d8_class_multiset(self, d8):
        """Test D8 has classes of sizes 1, 1, 2, 2, 2."""
        assert sorted(c.size for c in group_classes(d8).classes) == [1, 1, 2, 2, 2]

    def test_s4_on_a4(self, s4):
        """Test cs_S4(A4) = {1, 3, 8}: the 3-cycles fuse in S4."""
        cd = g_classes(s4, normal_of_order(s4, 12))
        assert cd.cs_values == (1, 3, 8)
        assert cd.vertex_sizes == (3, 8)

    @pytest.mark.parametrize("fixture", ["s4", "d8xc3", "f20", "sl23", "s3xs3"])
    def test_matches_orbit_oracle(self, request, fixture):
        """Test every normal subgroup against direct conjugation of permutations."""
        group = request.getfixturevalue(fixture)
        for normal in normal_subgroups(group):
            cd = g_classes(group, normal)
            members = {group.element(i) for i in normal.members}
            assert sorted(c.size for c in cd.classes) == class_sizes(group, members)

    @pytest.mark.parametrize("fixture", ["s4", "q8", "f20", "sl23"])
    def test_matches_sympy(self, request, fixture):
        """Test ordinary class sizes against sympy."""
        group = request.getfixturevalue(fixture)
        assert sorted(c.size for c in group_classes(group).classes) == sympy_class_sizes(group)

    def test_classes_partition_normal(self, s4):
        """Test classes are disjoint and cover N."""
        for normal in normal_subgroups(s4):
            cd = g_classes(s4, normal)
            covered = [x for c in cd.classes for x in c.members]
            assert tuple(sorted(covered)) == normal.sorted_members
            assert all(c.representative == min(c.members) for c in cd.classes)

    def test_not_normal(self, s3):
        """Test a non-normal subgroup is refused with a witness."""
        sub = subgroup_generated(s3, [s3.generator_indices[0]])
        assert sub.order == 2
        with pytest.raises(NotNormalError):
            g_classes(s3, sub)

    def test_class_size_outside_normal(self, s4):
        """Test asking for an element outside N fails."""
        a4 = normal_of_order(s4, 12)
        cd = g_classes(s4, a4)
        outside = next(x for x in range(s4.order) if x not in a4.members)
        with pytest.raises(InvalidInput):
            cd.class_size(outside)


# ---------------------------------------------------------
# Centers
# ---------------------------------------------------------


class TestCenters:
    """Z(G), Z(N) and N ∩ Z(G)."""

    def test_s3xc2(self, s3xc2):
        """Test N ∩ Z(G) = Z(G) of order 2 for N = G."""
        cd = group_classes(s3xc2)
        assert len(cd.n_cap_zg) == 2
        assert cd.zn_members == cd.n_cap_zg
        assert cd.quotient_order == 6

    def test_abelian_normal_subgroup(self, s4):
        """Test Z(V4) = V4 while V4 ∩ Z(S4) is trivial."""
        cd = g_classes(s4, normal_of_order(s4, 4))
        assert len(cd.zn_members) == 4
        assert len(cd.n_cap_zg) == 1
        assert cd.quotient_order == 4

    def test_center_containment(self, d8xc3):
        """Test N ∩ Z(G) is always inside Z(N)."""
        for normal in normal_subgroups(d8xc3):
            cd = g_classes(d8xc3, normal)
            assert cd.n_cap_zg <= cd.zn_members

    def test_central_classes_are_singletons(self, d8xc3):
        """Test class size 1 exactly on N ∩ Z(G)."""
        for normal in normal_subgroups(d8xc3):
            cd = g_classes(d8xc3, normal)
            singletons = {x for c in cd.classes if c.size == 1 for x in c.members}
            assert singletons == set(cd.n_cap_zg)


# ---------------------------------------------------------
# Element filters
# ---------------------------------------------------------


class TestElementFilters:
    """p-elements and commuting cross-prime pairs."""

    def test_p_elements(self, s3):
        """Test the 2-elements and 3-elements of S3."""
        cd = group_classes(s3)
        assert len(p_elements(cd, 2)) == 4
        assert len(p_elements(cd, 3)) == 3
        assert len(p_elements(cd, 3, noncentral_only=True)) == 2
        assert len(noncentral_elements(cd)) == 5

    def test_s3_has_no_cross_prime_pair(self, s3):
        """Test no 2-element commutes with a 3-element in S3."""
        assert commuting_cross_prime_pair(group_classes(s3), 2, 3) is None

    def test_s3xs3_cross_prime_pairs(self, s3xs3):
        """Test a transposition in one factor commutes with a 3-cycle in the other."""
        cd = group_classes(s3xs3)
        pairs = list(cross_prime_pairs(cd, 2, 3))
        assert pairs
        for x0, y0 in pairs:
            assert s3xs3.commutes(x0, y0)
            assert s3xs3.element_orders[x0] == 2
            assert s3xs3.element_orders[y0] == 3
        # Three transpositions on each side times two 3-cycles on the other.
        assert len(pairs) == 2 * 3 * 2

    def test_same_prime_rejected(self, s3):
        """Test p1 and p2 must differ."""
        with pytest.raises(InvalidInput):
            list(cross_prime_pairs(group_classes(s3), 2, 2))

    def test_realized_sizes(self, s4):
        """Test sizes realized by the noncentral 2-elements of S4."""
        cd = g_classes(s4, whole_group(s4))
        assert realized_sizes(cd, p_elements(cd, 2, noncentral_only=True)) == {3, 6}
