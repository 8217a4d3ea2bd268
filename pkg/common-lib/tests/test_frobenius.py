import pytest
from ccsgraph_lib.theorems import is_frobenius, is_quasi_frobenius_abelian, quasi_frobenius_data

# ---------------------------------------------------------
# Frobenius groups
# ---------------------------------------------------------


class TestFrobenius:
    """Kernel search over the normal subgroups."""

    @pytest.mark.parametrize(
        "fixture, kernel_order, quotient_abelian",
        [("s3", 3, True), ("a4", 4, True), ("d10", 5, True), ("f20", 5, True)],
    )
    def test_frobenius_groups(self, request, fixture, kernel_order, quotient_abelian):
        """Test the kernel and the complement of small Frobenius groups."""
        data = is_frobenius(request.getfixturevalue(fixture))
        assert data is not None
        assert data.kernel.order == kernel_order
        assert data.kernel_abelian
        assert data.quotient_abelian == quotient_abelian

    @pytest.mark.parametrize("fixture", ["c6", "d8", "q8", "s4", "s3xs3", "sl23"])
    def test_not_frobenius(self, request, fixture):
        """Test groups with no Frobenius kernel."""
        assert is_frobenius(request.getfixturevalue(fixture)) is None


# ---------------------------------------------------------
# Quasi-Frobenius groups
# ---------------------------------------------------------


class TestQuasiFrobenius:
    """Frobenius structure of G / Z(G) lifted back to G."""

    def test_trivial_center(self, a4):
        """Test a Frobenius group with trivial center is its own preimage."""
        data = quasi_frobenius_data(a4)
        assert data is not None
        assert data.center.is_trivial()
        assert data.kernel_preimage.order == 4
        assert data.abelian_kernel_and_complement

    def test_central_extension(self, s3xc2):
        """Test S3 x C2: the kernel C3 lifts to the abelian C6."""
        data = quasi_frobenius_data(s3xc2)
        assert data is not None
        assert data.center.order == 2
        assert data.frobenius.kernel.order == 3
        assert data.kernel_preimage.order == 6
        assert data.kernel_preimage_abelian
        assert data.abelian_kernel_and_complement

    def test_nonabelian_preimage(self, sl23):
        """Test SL(2,3): G/Z(G) is A4 but the kernel lifts to Q8."""
        data = quasi_frobenius_data(sl23)
        assert data is not None
        assert data.frobenius.kernel.order == 4
        assert data.kernel_preimage.order == 8
        assert not data.kernel_preimage_abelian
        assert not data.abelian_kernel_and_complement

    @pytest.mark.parametrize("fixture", ["c6", "d8", "q8", "s4", "s3xs3"])
    def test_not_quasi_frobenius(self, request, fixture):
        """Test abelian centers, abelian quotients and non-Frobenius quotients."""
        assert quasi_frobenius_data(request.getfixturevalue(fixture)) is None

    @pytest.mark.parametrize(
        "fixture, expected",
        [
            ("s3", True),
            ("a4", True),
            ("d10", True),
            ("f20", True),
            ("s3xc2", True),
            ("sl23", False),
            ("d8", False),
            ("s4", False),
        ],
    )
    def test_is_quasi_frobenius_abelian(self, request, fixture, expected):
        """Test the combined predicate."""
        assert is_quasi_frobenius_abelian(request.getfixturevalue(fixture)) == expected
