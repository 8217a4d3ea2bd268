from functools import cached_property
from typing import Hashable, Optional, Sequence

import numpy as np

from ..exceptions import InvalidInput
from .base import FiniteGroup


class TableGroup(FiniteGroup):
    """Group given by its Cayley table, used for quotients and re-indexed subgroups.

    ``labels[i]`` is the concrete element at index i (for quotients, the frozenset of
    parent indices forming the coset). Index 0 must be the identity.
    """

    def __init__(
        self,
        table: np.ndarray,
        generator_indices: Sequence[int],
        labels: Optional[Sequence[Hashable]] = None,
        name: str = "group",
    ):
        super().__init__(generator_indices, name=name)
        self.table = np.ascontiguousarray(table, dtype=np.int32)
        self.table.setflags(write=False)
        n = self.table.shape[0]
        if self.table.shape != (n, n):
            raise InvalidInput("Cayley table must be square")
        if not np.array_equal(self.table[0], np.arange(n)):
            raise InvalidInput("Index 0 must be the identity of a table-backed group")
        self.labels = list(labels) if labels is not None else list(range(n))

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def element(self, index: int) -> Hashable:
        return self.labels[index]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def left_products(self, x: int) -> np.ndarray:
        return self.table[x].astype(np.int64)

    def right_products(self, x: int) -> np.ndarray:
        return self.table[:, x].astype(np.int64)

    def conjugation_map(self, g: int) -> np.ndarray:
        return self.table[self.table[g], self.inverses[g]].astype(np.int64)

    def cayley_table(self) -> np.ndarray:
        return self.table

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.table == self.identity_index, axis=1).astype(np.int64)

    def restrict(self, members: Sequence[int], generators: Sequence[int]) -> "TableGroup":
        ordered = np.array(sorted(members), dtype=np.int64)
        position = np.full(self.order, -1, dtype=np.int64)
        position[ordered] = np.arange(len(ordered))
        sub_table = position[self.table[np.ix_(ordered, ordered)]]
        return TableGroup(
            sub_table,
            [int(position[g]) for g in generators],
            labels=[self.labels[i] for i in ordered],
            name=f"subgroup of {self.name}",
        )
