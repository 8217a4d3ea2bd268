from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from loguru import logger

from ..config import get_settings
from ..errors import log_errors
from ..exceptions import PermutationError, ResourceCapExceeded
from .base import FiniteGroup
from .permutation import Permutation


class PermutationGroup(FiniteGroup):
    """Group of permutations stored as an (order x degree) array of 0-based images.

    Small groups carry a precomputed Cayley table; larger ones multiply on demand through a
    dictionary from image bytes to element index.
    """

    def __init__(
        self,
        perms: np.ndarray,
        generator_indices: Sequence[int],
        name: str = "group",
        table_max_order: Optional[int] = None,
    ):
        super().__init__(generator_indices, name=name)
        self.perms = np.ascontiguousarray(perms, dtype=np.int32)
        self.perms.setflags(write=False)
        self._index: Dict[bytes, int] = {row.tobytes(): i for i, row in enumerate(self.perms)}

        if table_max_order is None:
            table_max_order = get_settings().engine.table_max_order
        self._table: Optional[np.ndarray] = None
        if self.order <= table_max_order:
            self._table = self._build_table()

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def degree(self) -> int:
        return self.perms.shape[1]

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Map rows of 0-based images to element indices."""
        return np.fromiter(
            (self._index[row.tobytes()] for row in rows), dtype=np.int64, count=rows.shape[0]
        )

    def index_of(self, perm: Permutation) -> int:
        if perm.degree != self.degree:
            raise PermutationError(f"Degree mismatch: {perm.degree} != {self.degree}")
        key = np.asarray(perm.zero_based(), dtype=np.int32).tobytes()
        if key not in self._index:
            raise PermutationError(f"{perm} is not an element of {self.name}")
        return self._index[key]

    def element(self, index: int) -> Permutation:
        return Permutation.from_zero_based(self.perms[index])

    def _build_table(self) -> np.ndarray:
        table = np.empty((self.order, self.order), dtype=np.int32)
        for a in range(self.order):
            # Row a holds a * b, the map i -> a(b(i)).
            table[a] = self.lookup(self.perms[a][self.perms])
        table.setflags(write=False)
        return table

    def cayley_table(self) -> np.ndarray:
        if self._table is None:
            self._table = self._build_table()
        return self._table

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return int(self._table[a, b])
        return self._index[self.perms[a][self.perms[b]].tobytes()]

    def left_products(self, x: int) -> np.ndarray:
        if self._table is not None:
            return self._table[x].astype(np.int64)
        return self.lookup(self.perms[x][self.perms])

    def right_products(self, x: int) -> np.ndarray:
        if self._table is not None:
            return self._table[:, x].astype(np.int64)
        return self.lookup(self.perms[:, self.perms[x]])

    def centralizer_mask(self, x: int) -> np.ndarray:
        px = self.perms[x]
        return np.all(self.perms[:, px] == px[self.perms], axis=1)

    def conjugation_map(self, g: int) -> np.ndarray:
        pg = self.perms[g]
        pg_inv = np.argsort(pg)
        return self.lookup(pg[self.perms[:, pg_inv]])

    @cached_property
    def inverses(self) -> np.ndarray:
        return self.lookup(np.argsort(self.perms, axis=1).astype(np.int32))

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([self.element(i).order for i in range(self.order)], dtype=np.int64)

    def restrict(self, members: Sequence[int], generators: Sequence[int]) -> "PermutationGroup":
        ordered = sorted(members)
        position = {old: new for new, old in enumerate(ordered)}
        return PermutationGroup(
            self.perms[ordered],
            [position[g] for g in generators],
            name=f"subgroup of {self.name}",
        )


def _dedupe(indices: Iterable[int]) -> List[int]:
    seen = set()
    result = []
    for i in indices:
        if i not in seen and i != 0:
            seen.add(i)
            result.append(i)
    return result


@log_errors
def generate_group(
    gens: Sequence[Permutation],
    degree: Optional[int] = None,
    order_cap: Optional[int] = None,
    name: str = "group",
    table_max_order: Optional[int] = None,
) -> PermutationGroup:
    """Close ``gens`` under composition by breadth-first search from the identity.

    Element indices follow discovery order with the identity at index 0; each discovered
    element x is extended by x * g for every generator g in turn.

    Raises:
        PermutationError: if generators disagree on degree or no degree is known
        ResourceCapExceeded: if the closure grows past ``order_cap``
    """
    if order_cap is None:
        order_cap = get_settings().engine.order_cap

    degrees = {g.degree for g in gens}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) != 1:
        if not degrees:
            raise PermutationError("A degree is required when no generators are given")
        raise PermutationError(f"Generators have mixed degrees: {sorted(degrees)}")
    (n_points,) = degrees

    gen_array = np.array([g.zero_based() for g in gens], dtype=np.int32).reshape(-1, n_points)
    rows: List[np.ndarray] = [np.arange(n_points, dtype=np.int32)]
    index = {rows[0].tobytes(): 0}

    start = 0
    while start < len(rows):
        frontier = np.stack(rows[start:])
        start = len(rows)
        if gen_array.shape[0] == 0:
            break
        # products[a, b] is frontier[a] * gens[b], the map i -> frontier[a](gens[b](i)).
        products = frontier[:, gen_array].reshape(-1, n_points)
        for row in products:
            key = row.tobytes()
            if key in index:
                continue
            index[key] = len(rows)
            rows.append(row)
            if len(rows) > order_cap:
                raise ResourceCapExceeded(
                    f"Closure of {len(gens)} generators on {n_points} points exceeds "
                    f"the order cap {order_cap}"
                )

    perms = np.stack(rows)
    generator_indices = _dedupe(index[g.tobytes()] for g in gen_array)
    logger.debug("Generated {} of order {} on {} points", name, len(rows), n_points)
    return PermutationGroup(
        perms, generator_indices, name=name, table_max_order=table_max_order
    )
