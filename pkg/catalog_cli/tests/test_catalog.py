import pytest
from ccsgraph_cli.catalog import (
    CatalogEntry,
    CatalogFamily,
    build_catalog_entry,
    catalog_entries,
    default_catalog_names,
    parse_group_spec,
    select_normal_subgroups,
)
from ccsgraph_lib.exceptions import (
    CatalogError,
    InvalidInput,
    NotNormalError,
    ResourceCapExceeded,
)
from ccsgraph_lib.groups import check_group_axioms, normal_subgroups


def build(spec: str):
    return build_catalog_entry(parse_group_spec(spec))


@pytest.fixture(scope="module")
def s4():
    return build("S4")


# ---------------------------------------------------------
# Group specs
# ---------------------------------------------------------


class TestParseGroupSpec:
    """Catalog names, products and files."""

    @pytest.mark.parametrize(
        "spec, family, order, degree",
        [
            ("C12", CatalogFamily.cyclic, 12, 12),
            ("D8", CatalogFamily.dihedral, 8, 4),
            ("S4", CatalogFamily.symmetric, 24, 4),
            ("A5", CatalogFamily.alternating, 60, 5),
            ("Q8", CatalogFamily.quaternion8, 8, 8),
            ("SL2_3", CatalogFamily.special_linear_2_3, 24, 8),
            ("AGL1_5", CatalogFamily.frobenius_affine, 20, 5),
            ("D8xC3", CatalogFamily.direct_product, 24, 7),
        ],
    )
    def test_expected_order_and_degree(self, spec, family, order, degree):
        """Test the family formulas."""
        entry = parse_group_spec(spec)
        assert entry.family == family
        assert entry.expected_order == order
        assert entry.expected_degree == degree

    def test_product_factors(self):
        """Test a product keeps its factors in order."""
        entry = parse_group_spec("S3xC2xC2")
        assert [f.name for f in entry.factors] == ["S3", "C2", "C2"]
        assert entry.expected_order == 24

    def test_file_spec(self):
        """Test file specs keep their path and have no formula order."""
        entry = parse_group_spec("file:groups/m11.txt")
        assert entry.family == CatalogFamily.from_file
        assert entry.path == "groups/m11.txt"
        assert entry.expected_order is None

    @pytest.mark.parametrize(
        "spec",
        [
            "D7",
            "D4",
            "S9",
            "A9",
            "C0",
            "AGL1_2",
            "AGL1_9",
            "AGL1_37",
            "M11",
            "C2x",
            "xC2",
            "C2xfile:g.txt",
            "file:",
        ],
    )
    def test_rejected(self, spec):
        """Test unknown names, out-of-range parameters and malformed products."""
        with pytest.raises(CatalogError):
            parse_group_spec(spec)


# ---------------------------------------------------------
# Construction
# ---------------------------------------------------------


class TestBuildCatalogEntry:
    """Generators reach the advertised orders."""

    @pytest.mark.parametrize(
        "spec", ["C1", "C7", "D6", "D12", "S1", "S2", "S5", "A3", "A4", "Q8", "SL2_3", "AGL1_7"]
    )
    def test_orders(self, spec):
        """Test the built order equals the family formula."""
        entry = parse_group_spec(spec)
        group = build_catalog_entry(entry)
        assert group.order == entry.expected_order
        assert group.degree == entry.expected_degree

    @pytest.mark.parametrize("spec", ["D8xC3", "AGL1_5xC2", "Q8xC2", "S3xS3"])
    def test_products(self, spec):
        """Test factors act on disjoint blocks, so orders multiply."""
        entry = parse_group_spec(spec)
        group = build_catalog_entry(entry)
        assert group.order == entry.expected_order
        assert group.degree == entry.expected_degree
        assert group.name == spec

    def test_quaternion_and_sl2_3_axioms(self):
        """Test the hand-written generators give genuine groups."""
        for spec in ("Q8", "SL2_3"):
            assert check_group_axioms(build(spec)) == []

    def test_quaternion_has_one_involution(self):
        """Test Q8 has a unique element of order 2."""
        q8 = build("Q8")
        assert sum(1 for x in range(q8.order) if q8.element_orders[x] == 2) == 1

    def test_from_file(self, tmp_path):
        """Test a file entry loads the generators from disk."""
        path = tmp_path / "f21.txt"
        path.write_text("degree 7\ngen (1 2 3 4 5 6 7)\ngen (2 3 5)(4 7 6)\n")
        group = build_catalog_entry(parse_group_spec(f"file:{path}"))
        assert group.order == 21

    def test_file_factor_rejected(self):
        """Test products cannot contain file entries."""
        entry = CatalogEntry(
            name="odd",
            family=CatalogFamily.direct_product,
            factors=(
                CatalogEntry(name="file:g.txt", family=CatalogFamily.from_file, path="g.txt"),
                parse_group_spec("C2"),
            ),
        )
        with pytest.raises(CatalogError):
            build_catalog_entry(entry)

    def test_order_cap(self):
        """Test the closure cap applies to catalog groups."""
        with pytest.raises(ResourceCapExceeded):
            build_catalog_entry(parse_group_spec("S5"), order_cap=50)


# ---------------------------------------------------------
# Default catalog
# ---------------------------------------------------------


class TestDefaultCatalog:
    """The sweep's group list."""

    def test_large_groups_are_opt_in(self):
        """Test S7 appears only when asked for."""
        assert "S7" not in default_catalog_names(include_large=False)
        assert "S7" in default_catalog_names(include_large=True)

    def test_names_are_unique_and_parse(self):
        """Test every default name parses."""
        names = default_catalog_names(include_large=False)
        assert len(names) == len(set(names))
        assert len(catalog_entries(names)) == len(names)

    def test_max_order_filter(self):
        """Test entries above the order bound are dropped."""
        entries = catalog_entries(max_order=6, include_large=False)
        names = {e.name for e in entries}
        assert all(e.expected_order <= 6 for e in entries)
        assert {"C1", "C6", "D6", "S3", "AGL1_3", "C2xC2"} <= names
        assert "S4" not in names

    def test_explicit_names(self):
        """Test a caller-supplied list replaces the default one."""
        entries = catalog_entries(["S4", "Q8"], max_order=10)
        assert [e.name for e in entries] == ["Q8"]


# ---------------------------------------------------------
# Normal-subgroup selectors
# ---------------------------------------------------------


class TestSelectNormalSubgroups:
    """self, auto, indices and files."""

    def test_self(self, s4):
        """Test 'self' selects N = G."""
        [(descriptor, normal)] = select_normal_subgroups(s4, "self")
        assert descriptor == "self"
        assert normal.is_whole()

    def test_auto(self, s4):
        """Test 'auto' lists every normal subgroup in order."""
        selected = select_normal_subgroups(s4, "auto")
        assert [n.order for _, n in selected] == [1, 4, 12, 24]
        assert selected[2][0] == "normal[2] order=12"

    def test_index(self, s4):
        """Test a numeric selector picks one normal subgroup."""
        [(descriptor, normal)] = select_normal_subgroups(s4, "2")
        assert descriptor == "normal[2] order=12"
        assert normal == normal_subgroups(s4)[2]

    @pytest.mark.parametrize("selector", ["4", "largest", "-1"])
    def test_bad_selector(self, s4, selector):
        """Test out-of-range indices and unknown selectors."""
        with pytest.raises(InvalidInput):
            select_normal_subgroups(s4, selector)

    def test_file(self, s4, tmp_path):
        """Test generators from a file generate the normal subgroup."""
        path = tmp_path / "a4.txt"
        path.write_text("degree 4\ngen (1 2 3)\ngen (1 2)(3 4)\n")
        [(descriptor, normal)] = select_normal_subgroups(s4, f"file:{path}")
        assert descriptor == f"file:{path}"
        assert normal.order == 12

    def test_file_not_normal(self, s4, tmp_path):
        """Test a non-normal subgroup from a file is refused."""
        path = tmp_path / "c2.txt"
        path.write_text("degree 4\ngen (1 2)\n")
        with pytest.raises(NotNormalError):
            select_normal_subgroups(s4, f"file:{path}")

    @pytest.mark.parametrize(
        "text",
        ["degree 5\ngen (1 2 3)\n", "degree 4\ngen (1 2)\n"],
        ids=["degree mismatch", "not an element"],
    )
    def test_file_errors(self, tmp_path, text):
        """Test generators must live in G."""
        a4 = build("A4")
        path = tmp_path / "bad.txt"
        path.write_text(text)
        with pytest.raises(InvalidInput):
            select_normal_subgroups(a4, f"file:{path}")

    def test_missing_file(self, s4, tmp_path):
        """Test an unreadable selector file."""
        with pytest.raises(InvalidInput, match="cannot read"):
            select_normal_subgroups(s4, f"file:{tmp_path / 'missing.txt'}")
