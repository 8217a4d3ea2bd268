from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Optional, Tuple

import numpy as np
from loguru import logger

from ..exceptions import InvalidInput
from ..groups.arithmetic import is_p_power
from ..groups.base import FiniteGroup
from ..groups.subgroups import (
    Subgroup,
    center,
    conjugacy_orbits,
    require_normal,
    subgroup_generators,
    whole_group,
)


@dataclass(frozen=True)
class ConjClass:
    """A G-conjugacy class inside N, represented by its least index."""

    representative: int
    members: FrozenSet[int]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ClassData:
    """G-classes of a normal subgroup N together with the central subgroups around them."""

    group: FiniteGroup
    normal: Subgroup
    classes: Tuple[ConjClass, ...]
    zg: Subgroup
    zn_members: FrozenSet[int]
    n_cap_zg: FrozenSet[int]

    @cached_property
    def class_of(self) -> np.ndarray:
        """Class position of every element of G; -1 outside N."""
        result = np.full(self.group.order, -1, dtype=np.int64)
        for i, cls in enumerate(self.classes):
            result[list(cls.members)] = i
        return result

    def class_size(self, x: int) -> int:
        position = int(self.class_of[x])
        if position < 0:
            raise InvalidInput(f"Element {x} is not in N")
        return self.classes[position].size

    @cached_property
    def cs_values(self) -> Tuple[int, ...]:
        return tuple(sorted({cls.size for cls in self.classes}))

    @cached_property
    def vertex_sizes(self) -> Tuple[int, ...]:
        return tuple(v for v in self.cs_values if v > 1)

    @cached_property
    def quotient_order(self) -> int:
        """|N / (N ∩ Z(G))|."""
        return self.normal.order // len(self.n_cap_zg)


def g_classes(group: FiniteGroup, normal: Subgroup) -> ClassData:
    """Orbits of conjugation by G on a normal subgroup N, plus Z(G), Z(N) and N ∩ Z(G).

    Raises:
        NotNormalError: naming g, h with g * h * g^-1 outside N
    """
    require_normal(group, normal)

    orbits = conjugacy_orbits(group, normal.members)
    classes = tuple(ConjClass(min(orbit), orbit) for orbit in orbits)

    zg = center(group)
    zn_mask = normal.mask.copy()
    for g in subgroup_generators(normal):
        zn_mask &= group.centralizer_mask(g)

    data = ClassData(
        group=group,
        normal=normal,
        classes=classes,
        zg=zg,
        zn_members=frozenset(np.flatnonzero(zn_mask).tolist()),
        n_cap_zg=normal.members & zg.members,
    )
    logger.debug(
        "{}: |N|={} with {} G-classes, sizes {}",
        group.name,
        normal.order,
        len(classes),
        list(data.cs_values),
    )
    return data


def group_classes(group: FiniteGroup) -> ClassData:
    """Ordinary conjugacy classes, i.e. g_classes with N = G."""
    return g_classes(group, whole_group(group))


# ---------------------------------------------------------
# Element filters
# ---------------------------------------------------------


def noncentral_elements(cd: ClassData) -> FrozenSet[int]:
    return cd.normal.members - cd.n_cap_zg


def p_elements(cd: ClassData, p: int, noncentral_only: bool = False) -> FrozenSet[int]:
    """Elements of N whose order is a power of p."""
    orders = cd.group.element_orders
    candidates = noncentral_elements(cd) if noncentral_only else cd.normal.members
    return frozenset(x for x in candidates if is_p_power(int(orders[x]), p))


def cross_prime_pairs(cd: ClassData, p1: int, p2: int) -> Iterator[Tuple[int, int]]:
    """Commuting pairs (x0, y0) of noncentral p1- and p2-elements in index order."""
    if p1 == p2:
        raise InvalidInput(f"Primes must be distinct, got {p1} twice")
    xs = sorted(p_elements(cd, p1, noncentral_only=True))
    ys = sorted(p_elements(cd, p2, noncentral_only=True))
    if not ys:
        return
    y_array = np.array(ys, dtype=np.int64)
    for x0 in xs:
        commuting = y_array[cd.group.centralizer_mask(x0)[y_array]]
        for y0 in commuting.tolist():
            yield x0, y0


def commuting_cross_prime_pair(cd: ClassData, p1: int, p2: int) -> Optional[Tuple[int, int]]:
    return next(cross_prime_pairs(cd, p1, p2), None)


def realized_sizes(cd: ClassData, elements: Iterable[int]) -> FrozenSet[int]:
    return frozenset(cd.class_size(x) for x in elements)
