from abc import ABC, abstractmethod
from functools import cached_property
from typing import Hashable, List, Sequence, Tuple

import numpy as np


class FiniteGroup(ABC):
    """Abstract base class for a fully enumerated finite group.

    Elements are addressed by index. The identity has index 0 and every element is reachable
    from ``generator_indices``. Instances are immutable after construction.
    """

    identity_index: int = 0

    def __init__(self, generator_indices: Sequence[int], name: str = "group"):
        self.generator_indices: Tuple[int, ...] = tuple(generator_indices)
        self.name = name

    # ---------------------------------------------------------
    # Backend primitives
    # ---------------------------------------------------------

    @property
    @abstractmethod
    def order(self) -> int:
        """Number of elements."""

    @abstractmethod
    def element(self, index: int) -> Hashable:
        """Return the concrete element (a Permutation or a coset label) at ``index``."""

    @abstractmethod
    def mul(self, a: int, b: int) -> int:
        """Index of the product a * b."""

    @abstractmethod
    def left_products(self, x: int) -> np.ndarray:
        """Array whose entry g is the index of x * g."""

    @abstractmethod
    def right_products(self, x: int) -> np.ndarray:
        """Array whose entry g is the index of g * x."""

    @abstractmethod
    def conjugation_map(self, g: int) -> np.ndarray:
        """Array whose entry h is the index of g * h * g^-1."""

    @abstractmethod
    def restrict(self, members: Sequence[int], generators: Sequence[int]) -> "FiniteGroup":
        """Re-index a subgroup as a group of its own.

        Args:
            members: indices of a subgroup, containing the identity
            generators: indices (in this group) that generate the subgroup
        """

    @abstractmethod
    def cayley_table(self) -> np.ndarray:
        """Full multiplication table; entry [a, b] is the index of a * b."""

    # ---------------------------------------------------------
    # Derived operations
    # ---------------------------------------------------------

    @cached_property
    def inverses(self) -> np.ndarray:
        result = np.empty(self.order, dtype=np.int64)
        for a in range(self.order):
            result[a] = int(np.flatnonzero(self.left_products(a) == self.identity_index)[0])
        return result

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    @property
    def elements(self) -> List[Hashable]:
        return [self.element(i) for i in range(self.order)]

    def commutes(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    def centralizer_mask(self, x: int) -> np.ndarray:
        """Boolean mask over all elements: True where g * x == x * g."""
        return self.right_products(x) == self.left_products(x)

    def element_order(self, x: int) -> int:
        """Least k > 0 with x**k the identity."""
        k = 1
        y = x
        while y != self.identity_index:
            y = self.mul(y, x)
            k += 1
        return k

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(x) for x in range(self.order)], dtype=np.int64)

    def power(self, x: int, a: int) -> int:
        """Index of x**a; negative and zero exponents are reduced modulo the element order."""
        k = a % int(self.element_orders[x])
        result = self.identity_index
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_abelian(self) -> bool:
        """Commutativity of the generators is equivalent to commutativity of the group."""
        gens = self.generator_indices
        return all(self.commutes(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :])

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, order={self.order})"


def check_group_axioms(group: FiniteGroup) -> List[str]:
    """Exhaustively test associativity, identity, inverses and generation.

    Returns a list of human-readable problems; an empty list means every axiom holds.
    """
    problems = []
    table = group.cayley_table()
    n = group.order
    e = group.identity_index
    everything = np.arange(n)

    if not (np.array_equal(table[e], everything) and np.array_equal(table[:, e], everything)):
        problems.append(f"index {e} is not a two-sided identity")

    for a in range(n):
        # (a * b) * c against a * (b * c) for all b, c at once.
        if not np.array_equal(table[table[a]], table[a][table]):
            problems.append(f"associativity fails for left factor {a}")
            break

    for a in range(n):
        if table[a, group.inv(a)] != e or table[group.inv(a), a] != e:
            problems.append(f"element {a} has no two-sided inverse")
            break

    reached = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in group.generator_indices:
                y = int(table[x, g])
                if y not in reached:
                    reached.add(y)
                    nxt.append(y)
        frontier = nxt
    if len(reached) != n:
        problems.append(f"generators reach {len(reached)} of {n} elements")

    return problems
