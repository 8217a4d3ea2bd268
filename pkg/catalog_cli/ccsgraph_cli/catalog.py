"""
Named group constructors, group specs and normal-subgroup selectors.

A group spec is a catalog name (``C12``, ``D8``, ``S4``, ``A5``, ``Q8``, ``AGL1_5``, ``SL2_3``),
a direct product of names joined by ``x`` (``D8xC3``), or ``file:<path>``.
"""

import math
import re
from enum import StrEnum
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from ccsgraph_lib.config import CatalogSettings, get_settings
from ccsgraph_lib.exceptions import CatalogError, InvalidInput, PermutationError
from ccsgraph_lib.groups import (
    Permutation,
    PermutationGroup,
    Subgroup,
    generate_group,
    load_group_file,
    normal_subgroups,
    parse_group_text,
    require_normal,
    subgroup_generated,
    whole_group,
)
from ccsgraph_lib.theorems import describe_normal
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from sympy import isprime, primitive_root

FILE_PREFIX = "file:"


class CatalogFamily(StrEnum):
    cyclic = "cyclic"
    dihedral = "dihedral"
    symmetric = "symmetric"
    alternating = "alternating"
    quaternion8 = "quaternion8"
    frobenius_affine = "frobenius_affine"
    special_linear_2_3 = "special_linear_2_3"
    direct_product = "direct_product"
    from_file = "from_file"


class CatalogEntry(BaseModel):
    """A buildable group: a named family with its parameter, a product, or a file."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Group spec this entry was parsed from")
    family: CatalogFamily
    parameter: Optional[int] = Field(
        None, description="n for Cn, Sn, An; the order for dihedral groups; p for AGL1_p"
    )
    factors: Tuple["CatalogEntry", ...] = ()
    path: Optional[str] = None

    @property
    def expected_order(self) -> Optional[int]:
        """Order from the family formula; None for file entries."""
        n = self.parameter
        match self.family:
            case CatalogFamily.cyclic | CatalogFamily.dihedral:
                return n
            case CatalogFamily.symmetric:
                return math.factorial(n)
            case CatalogFamily.alternating:
                return max(math.factorial(n) // 2, 1)
            case CatalogFamily.quaternion8:
                return 8
            case CatalogFamily.frobenius_affine:
                return n * (n - 1)
            case CatalogFamily.special_linear_2_3:
                return 24
            case CatalogFamily.direct_product:
                orders = [f.expected_order for f in self.factors]
                return None if None in orders else math.prod(orders)
        return None

    @property
    def expected_degree(self) -> Optional[int]:
        n = self.parameter
        match self.family:
            case CatalogFamily.cyclic | CatalogFamily.symmetric | CatalogFamily.alternating:
                return n
            case CatalogFamily.dihedral:
                return n // 2
            case CatalogFamily.quaternion8 | CatalogFamily.special_linear_2_3:
                return 8
            case CatalogFamily.frobenius_affine:
                return n
            case CatalogFamily.direct_product:
                degrees = [f.expected_degree for f in self.factors]
                return None if None in degrees else sum(degrees)
        return None


CatalogEntry.model_rebuild()


# ---------------------------------------------------------
# Spec parsing
# ---------------------------------------------------------

_NAMED_PATTERNS = [
    (re.compile(r"C(\d+)"), CatalogFamily.cyclic),
    (re.compile(r"D(\d+)"), CatalogFamily.dihedral),
    (re.compile(r"S(\d+)"), CatalogFamily.symmetric),
    (re.compile(r"A(\d+)"), CatalogFamily.alternating),
    (re.compile(r"AGL1_(\d+)"), CatalogFamily.frobenius_affine),
]


def _validate(family: CatalogFamily, n: int, name: str, settings: CatalogSettings) -> None:
    if family == CatalogFamily.cyclic and n < 1:
        raise CatalogError(f"{name}: cyclic groups need n >= 1")
    if family == CatalogFamily.dihedral and (n < 6 or n % 2):
        raise CatalogError(f"{name}: dihedral order must be even and at least 6")
    if family in (CatalogFamily.symmetric, CatalogFamily.alternating):
        if not 1 <= n <= settings.max_symmetric_degree:
            raise CatalogError(
                f"{name}: degree must be between 1 and {settings.max_symmetric_degree}"
            )
    if family == CatalogFamily.frobenius_affine:
        if n == 2 or not isprime(n) or n > settings.max_affine_prime:
            raise CatalogError(
                f"{name}: p must be an odd prime at most {settings.max_affine_prime}"
            )


def _parse_factor(name: str, settings: CatalogSettings) -> CatalogEntry:
    if name == "Q8":
        return CatalogEntry(name=name, family=CatalogFamily.quaternion8)
    if name == "SL2_3":
        return CatalogEntry(name=name, family=CatalogFamily.special_linear_2_3)
    for pattern, family in _NAMED_PATTERNS:
        match = pattern.fullmatch(name)
        if match:
            n = int(match.group(1))
            _validate(family, n, name, settings)
            return CatalogEntry(name=name, family=family, parameter=n)
    raise CatalogError(f"Unknown group name {name!r}")


def parse_group_spec(spec: str, settings: Optional[CatalogSettings] = None) -> CatalogEntry:
    """
    Raises:
        CatalogError: unknown name or parameter out of range
    """
    settings = settings or get_settings().catalog
    spec = spec.strip()
    if spec.startswith(FILE_PREFIX):
        path = spec[len(FILE_PREFIX) :]
        if not path:
            raise CatalogError("file: spec needs a path")
        return CatalogEntry(name=spec, family=CatalogFamily.from_file, path=path)

    parts = spec.split("x")
    if len(parts) == 1:
        return _parse_factor(spec, settings)
    if any(not part for part in parts):
        raise CatalogError(f"Malformed product {spec!r}")
    factors = tuple(_parse_factor(part, settings) for part in parts)
    return CatalogEntry(name=spec, family=CatalogFamily.direct_product, factors=factors)


# ---------------------------------------------------------
# Generators
# ---------------------------------------------------------


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    """The cycle (points[0] points[1] ...) on {1..degree}."""
    images = list(range(1, degree + 1))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        images[a - 1] = b
    return Permutation(tuple(images))


def _affine_generators(p: int) -> List[Permutation]:
    # Point i + 1 stands for the field element i.
    g = int(primitive_root(p))
    translation = Permutation(tuple((x + 1) % p + 1 for x in range(p)))
    scaling = Permutation(tuple((g * x) % p + 1 for x in range(p)))
    return [translation, scaling]


def _sl2_3_generators() -> List[Permutation]:
    vectors = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    position = {v: i + 1 for i, v in enumerate(vectors)}

    def action(m: Tuple[int, int, int, int]) -> Permutation:
        a, b, c, d = m
        return Permutation(
            tuple(position[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vectors)
        )

    return [action((1, 1, 0, 1)), action((1, 0, 1, 1))]


def _generators(entry: CatalogEntry) -> Tuple[int, List[Permutation]]:
    n = entry.parameter
    match entry.family:
        case CatalogFamily.cyclic:
            return n, [_cycle(range(1, n + 1), n)] if n > 1 else []
        case CatalogFamily.dihedral:
            m = n // 2
            rotation = _cycle(range(1, m + 1), m)
            reflection = Permutation(tuple(m + 1 - i for i in range(1, m + 1)))
            return m, [rotation, reflection]
        case CatalogFamily.symmetric:
            if n == 1:
                return 1, []
            return n, [_cycle([1, 2], n), _cycle(range(1, n + 1), n)]
        case CatalogFamily.alternating:
            return n, [_cycle([1, 2, k], n) for k in range(3, n + 1)]
        case CatalogFamily.quaternion8:
            i = Permutation((2, 3, 4, 1, 6, 7, 8, 5))  # (1 2 3 4)(5 6 7 8)
            j = Permutation((5, 8, 7, 6, 3, 2, 1, 4))  # (1 5 3 7)(2 8 4 6)
            return 8, [i, j]
        case CatalogFamily.frobenius_affine:
            return n, _affine_generators(n)
        case CatalogFamily.special_linear_2_3:
            return 8, _sl2_3_generators()
        case CatalogFamily.direct_product:
            return _product_generators(entry.factors)
    raise CatalogError(f"{entry.name}: no generators for family {entry.family}")


def _product_generators(factors: Sequence[CatalogEntry]) -> Tuple[int, List[Permutation]]:
    """Each factor acts on its own block of points."""
    blocks = [_generators(f) for f in factors]
    total = sum(degree for degree, _ in blocks)
    gens = []
    offset = 0
    for degree, factor_gens in blocks:
        for g in factor_gens:
            images = list(range(1, total + 1))
            images[offset : offset + degree] = [offset + x for x in g.images]
            gens.append(Permutation(tuple(images)))
        offset += degree
    return total, gens


def build_catalog_entry(
    entry: CatalogEntry, order_cap: Optional[int] = None
) -> PermutationGroup:
    """The advertised group as a permutation group.

    Raises:
        CatalogError: if a product contains a file entry
        GroupFileError: for unreadable or malformed files
        ResourceCapExceeded: if the closure passes ``order_cap``
    """
    if entry.family == CatalogFamily.from_file:
        return load_group_file(entry.path, name=entry.name, order_cap=order_cap)
    if any(f.family == CatalogFamily.from_file for f in entry.factors):
        raise CatalogError(f"{entry.name}: file groups cannot be product factors")

    degree, gens = _generators(entry)
    group = generate_group(gens, degree=degree, order_cap=order_cap, name=entry.name)
    expected = entry.expected_order
    if expected is not None and group.order != expected:
        raise CatalogError(f"{entry.name}: built order {group.order}, expected {expected}")
    return group


# ---------------------------------------------------------
# Default catalog
# ---------------------------------------------------------

DEFAULT_PRODUCTS = [
    "C2xC2",
    "C3xC3",
    "C2xC2xC2",
    "S3xC2",
    "S3xC3",
    "S3xS3",
    "D8xC2",
    "D8xC3",
    "Q8xC2",
    "Q8xC3",
    "D10xC2",
    "A4xC2",
    "A4xC3",
    "AGL1_5xC2",
    "S4xC2",
    "SL2_3xC2",
]


def default_catalog_names(include_large: Optional[bool] = None) -> List[str]:
    settings = get_settings().catalog
    if include_large is None:
        include_large = settings.include_large
    names = [f"C{n}" for n in range(1, 25)]
    names += [f"D{order}" for order in range(6, 49, 2)]
    names += [f"S{n}" for n in range(3, 7)]
    names += [f"A{n}" for n in range(4, 7)]
    names += ["Q8", "SL2_3"]
    names += [f"AGL1_{p}" for p in (3, 5, 7, 11, 13)]
    names += DEFAULT_PRODUCTS
    if include_large:
        names.append("S7")
    return names


def catalog_entries(
    names: Optional[Sequence[str]] = None,
    max_order: Optional[int] = None,
    include_large: Optional[bool] = None,
) -> List[CatalogEntry]:
    """Parsed entries for ``names`` (the default catalog when omitted), filtered by order."""
    if names is None:
        names = default_catalog_names(include_large)
    entries = [parse_group_spec(name) for name in names]
    if max_order is not None:
        entries = [
            e for e in entries if e.expected_order is None or e.expected_order <= max_order
        ]
    return entries


# ---------------------------------------------------------
# Normal-subgroup selectors
# ---------------------------------------------------------


def _normal_from_file(group: PermutationGroup, path: str) -> Subgroup:
    degree, gens = parse_group_text(_read(path), source=path)
    if degree != group.degree:
        raise InvalidInput(f"{path}: degree {degree} does not match {group.name} ({group.degree})")
    try:
        indices = [group.index_of(g) for g in gens]
    except PermutationError as e:
        raise InvalidInput(f"{path}: {e}") from e
    normal = subgroup_generated(group, indices)
    require_normal(group, normal)
    return normal


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInput(f"cannot read {path}: {e}") from e


def select_normal_subgroups(
    group: PermutationGroup, selector: str = "self"
) -> List[Tuple[str, Subgroup]]:
    """Resolve ``self``, ``auto``, an index into normal_subgroups, or ``file:<path>``.

    Raises:
        InvalidInput: unknown selector or index out of range
        NotNormalError: the file's generators do not generate a normal subgroup
    """
    if selector == "self":
        return [("self", whole_group(group))]
    if selector.startswith(FILE_PREFIX):
        return [(selector, _normal_from_file(group, selector[len(FILE_PREFIX) :]))]

    normals = normal_subgroups(group)
    if selector == "auto":
        return [(describe_normal(i, n), n) for i, n in enumerate(normals)]
    if selector.isdigit():
        k = int(selector)
        if k >= len(normals):
            raise InvalidInput(
                f"{group.name} has {len(normals)} normal subgroups; index {k} is out of range"
            )
        logger.debug("Selected normal subgroup {} of {}", k, group.name)
        return [(describe_normal(k, normals[k]), normals[k])]
    raise InvalidInput(f"Unknown normal selector {selector!r}")
