from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..config import get_settings
from ..errors import log_errors
from ..exceptions import NotNormalError, ResourceCapExceeded
from .base import FiniteGroup
from .table_group import TableGroup


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` given by its member indices."""

    parent: FiniteGroup
    members: FrozenSet[int]

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def sorted_members(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.members)] = True
        return mask

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def issubset(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.order, self.sorted_members

    def check_invariants(self) -> List[str]:
        """Closure, inverses, identity and Lagrange; an empty list means all hold."""
        group = self.parent
        problems = []
        if group.identity_index not in self.members:
            problems.append("identity missing")
        if group.order % self.order:
            problems.append(f"order {self.order} does not divide {group.order}")
        for a in self.sorted_members:
            if group.inv(a) not in self.members:
                problems.append(f"inverse of {a} missing")
                break
            if not self.mask[group.left_products(a)[list(self.sorted_members)]].all():
                problems.append(f"products with {a} leave the subgroup")
                break
        return problems

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, parent={self.parent.name!r})"


# ---------------------------------------------------------
# Closure
# ---------------------------------------------------------


def _closure(group: FiniteGroup, seed: Iterable[int]) -> Tuple[FrozenSet[int], List[int]]:
    """Close ``seed`` under multiplication, adding seed elements one at a time.

    Returns the members and the seed elements that were actually needed as generators.
    """
    members = {group.identity_index}
    gens: List[int] = []
    right: Dict[int, np.ndarray] = {}

    for s in seed:
        if s in members:
            continue
        gens.append(s)
        right[s] = group.right_products(s)
        frontier = list(members)
        while frontier:
            nxt = []
            for g in gens:
                for y in right[g][frontier].tolist():
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
    return frozenset(members), gens


def subgroup_generated(group: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    members, _ = _closure(group, sorted(set(seed)))
    return Subgroup(group, members)


def subgroup_generators(subgroup: Subgroup) -> List[int]:
    """Greedy generating set: least-index members not yet generated by the earlier ones."""
    if subgroup.is_whole():
        return list(subgroup.parent.generator_indices)
    _, gens = _closure(subgroup.parent, subgroup.sorted_members)
    return gens


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, frozenset({group.identity_index}))


def whole_group(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, frozenset(range(group.order)))


def subgroup_as_group(subgroup: Subgroup) -> FiniteGroup:
    """The subgroup re-indexed as a group of its own (members in increasing index order)."""
    if subgroup.is_whole():
        return subgroup.parent
    return subgroup.parent.restrict(subgroup.sorted_members, subgroup_generators(subgroup))


# ---------------------------------------------------------
# Centralizers and center
# ---------------------------------------------------------


def centralizer(group: FiniteGroup, x: int) -> Subgroup:
    return Subgroup(group, frozenset(np.flatnonzero(group.centralizer_mask(x)).tolist()))


def center(group: FiniteGroup) -> Subgroup:
    """Elements commuting with every generator, hence with every element."""
    mask = np.ones(group.order, dtype=bool)
    for g in group.generator_indices:
        mask &= group.centralizer_mask(g)
    return Subgroup(group, frozenset(np.flatnonzero(mask).tolist()))


# ---------------------------------------------------------
# Conjugation and normality
# ---------------------------------------------------------


def normality_witness(
    group: FiniteGroup, subgroup: Subgroup, exhaustive: Optional[bool] = None
) -> Optional[Tuple[int, int]]:
    """Return (g, h) with g * h * g^-1 outside ``subgroup``, or None when it is normal.

    Conjugating by the generators suffices: g^-1 is a positive power of g in a finite group.
    """
    if exhaustive is None:
        exhaustive = get_settings().engine.exhaustive_normality
    conjugators = range(group.order) if exhaustive else group.generator_indices
    members = np.array(subgroup.sorted_members, dtype=np.int64)
    for g in conjugators:
        images = group.conjugation_map(g)[members]
        outside = np.flatnonzero(~subgroup.mask[images])
        if outside.size:
            return int(g), int(members[outside[0]])
    return None


def is_normal(group: FiniteGroup, subgroup: Subgroup, exhaustive: Optional[bool] = None) -> bool:
    return normality_witness(group, subgroup, exhaustive=exhaustive) is None


def require_normal(group: FiniteGroup, subgroup: Subgroup) -> None:
    witness = normality_witness(group, subgroup)
    if witness is not None:
        g, h = witness
        raise NotNormalError(
            g,
            h,
            f"Subgroup of order {subgroup.order} is not normal in {group.name}: "
            f"{group.element(g)} conjugates {group.element(h)} outside it",
        )


def conjugacy_orbits(
    group: FiniteGroup, members: Optional[Sequence[int]] = None
) -> List[FrozenSet[int]]:
    """Orbits of conjugation by ``group`` on ``members`` (all elements by default).

    ``members`` must be a union of conjugacy classes. Orbits are ordered by least index.
    """
    maps = [group.conjugation_map(g) for g in group.generator_indices]
    domain = range(group.order) if members is None else sorted(members)
    seen = set()
    orbits = []
    for x in domain:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for conj in maps:
                for y in conj[frontier].tolist():
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        orbits.append(frozenset(orbit))
    return orbits


def normal_closure(group: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    classes = conjugacy_orbits(group)
    seed = set(seed)
    generators = set()
    for cls in classes:
        if cls & seed:
            generators |= cls
    return subgroup_generated(group, generators)


@log_errors
def normal_subgroups(group: FiniteGroup) -> List[Subgroup]:
    """All normal subgroups, sorted by order and then by members.

    A subgroup is normal exactly when it is a union of conjugacy classes, so every normal
    subgroup is the join of the normal closures of the classes it contains. Starting from
    those closures and the trivial subgroup, joins are added until nothing new appears.
    """
    found: Dict[FrozenSet[int], Subgroup] = {}
    trivial = trivial_subgroup(group)
    found[trivial.members] = trivial

    for cls in conjugacy_orbits(group):
        if group.identity_index in cls:
            continue
        closure = subgroup_generated(group, cls)
        found.setdefault(closure.members, closure)

    pending = list(found.values())
    while pending:
        fresh = []
        current = list(found.values())
        for a in pending:
            for b in current:
                if a.issubset(b) or b.issubset(a):
                    continue
                join = subgroup_generated(group, a.members | b.members)
                if join.members not in found:
                    found[join.members] = join
                    fresh.append(join)
        pending = fresh

    result = sorted(found.values(), key=Subgroup.sort_key)
    logger.debug("{} has {} normal subgroups", group.name, len(result))
    return result


# ---------------------------------------------------------
# Quotients
# ---------------------------------------------------------


@log_errors
def quotient_group(
    group: FiniteGroup, kernel: Subgroup, max_order: Optional[int] = None
) -> TableGroup:
    """Table-backed group of the cosets of a normal subgroup.

    Coset i is labelled by the frozenset of its members; cosets are numbered by their least
    member, so the kernel itself is coset 0.

    Raises:
        NotNormalError: if ``kernel`` is not normal (the coset product would be ill-defined)
        ResourceCapExceeded: if the quotient is larger than ``max_order``
    """
    require_normal(group, kernel)
    if max_order is None:
        max_order = get_settings().engine.quotient_max_order
    m = group.order // kernel.order
    if m > max_order:
        raise ResourceCapExceeded(
            f"Quotient of order {m} exceeds the quotient table cap {max_order}"
        )

    # Left cosets gK are the orbits of right multiplication by generators of K.
    right_maps = [group.right_products(k) for k in subgroup_generators(kernel)]
    coset_of = np.full(group.order, -1, dtype=np.int64)
    reps: List[int] = []
    labels: List[FrozenSet[int]] = []
    for g in range(group.order):
        if coset_of[g] >= 0:
            continue
        label = len(reps)
        coset = {g}
        frontier = [g]
        while frontier:
            nxt = []
            for rmap in right_maps:
                for y in rmap[frontier].tolist():
                    if y not in coset:
                        coset.add(y)
                        nxt.append(y)
            frontier = nxt
        coset_of[list(coset)] = label
        reps.append(g)
        labels.append(frozenset(coset))

    rep_array = np.array(reps, dtype=np.int64)
    table = np.empty((m, m), dtype=np.int32)
    for i, rep in enumerate(reps):
        table[i] = coset_of[group.left_products(rep)[rep_array]]

    generators = []
    for g in group.generator_indices:
        c = int(coset_of[g])
        if c != 0 and c not in generators:
            generators.append(c)

    return TableGroup(
        table, generators, labels=labels, name=f"{group.name}/{kernel.order}"
    )


# ---------------------------------------------------------
# Element-level helpers
# ---------------------------------------------------------


def element_order(group: FiniteGroup, x: int) -> int:
    return int(group.element_orders[x])


def power(group: FiniteGroup, x: int, a: int) -> int:
    return group.power(x, a)


def is_abelian(group: FiniteGroup) -> bool:
    return group.is_abelian()
