from typing import Sequence

import pytest
from ccsgraph_lib.groups import Permutation, PermutationGroup, generate_group, parse_permutation

# ---------------------------------------------------------
# Helpers
# ---------------------------------------------------------


def make_group(degree: int, cycles: Sequence[str], name: str = "group") -> PermutationGroup:
    """Permutation group generated by cycle-notation strings on ``degree`` points."""
    gens = [parse_permutation(text, degree) for text in cycles]
    return generate_group(gens, degree=degree, name=name)


def sl2_3() -> PermutationGroup:
    # SL(2,3) acting on the eight nonzero vectors of F_3^2.
    t = Permutation((4, 8, 3, 7, 2, 6, 1, 5))
    u = Permutation((1, 2, 4, 5, 3, 8, 6, 7))
    return generate_group([t, u], name="SL2_3")


# ---------------------------------------------------------
# Group Fixtures
# ---------------------------------------------------------


@pytest.fixture(scope="session")
def c6():
    return make_group(6, ["(1 2 3 4 5 6)"], name="C6")


@pytest.fixture(scope="session")
def klein():
    return make_group(4, ["(1 2)(3 4)", "(1 3)(2 4)"], name="V4")


@pytest.fixture(scope="session")
def s3():
    return make_group(3, ["(1 2)", "(1 2 3)"], name="S3")


@pytest.fixture(scope="session")
def d8():
    return make_group(4, ["(1 2 3 4)", "(1 3)"], name="D8")


@pytest.fixture(scope="session")
def q8():
    return make_group(8, ["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], name="Q8")


@pytest.fixture(scope="session")
def d10():
    return make_group(5, ["(1 2 3 4 5)", "(2 5)(3 4)"], name="D10")


@pytest.fixture(scope="session")
def a4():
    return make_group(4, ["(1 2 3)", "(2 3 4)"], name="A4")


@pytest.fixture(scope="session")
def s4():
    return make_group(4, ["(1 2)", "(1 2 3 4)"], name="S4")


@pytest.fixture(scope="session")
def f20():
    # x -> x + 1 and x -> 2x on the field with five elements, point i + 1 standing for i.
    return make_group(5, ["(1 2 3 4 5)", "(2 3 5 4)"], name="AGL1_5")


@pytest.fixture(scope="session")
def s5():
    return make_group(5, ["(1 2)", "(1 2 3 4 5)"], name="S5")


@pytest.fixture(scope="session")
def sl23():
    return sl2_3()


@pytest.fixture(scope="session")
def s3xc2():
    return make_group(5, ["(1 2)", "(1 2 3)", "(4 5)"], name="S3xC2")


@pytest.fixture(scope="session")
def s3xs3():
    return make_group(6, ["(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"], name="S3xS3")


@pytest.fixture(scope="session")
def d8xc3():
    return make_group(7, ["(1 2 3 4)", "(1 3)", "(5 6 7)"], name="D8xC3")
