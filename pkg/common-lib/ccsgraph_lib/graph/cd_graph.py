"""
Common-divisor graph on a finite set of integers greater than 1.

Two distinct vertices are adjacent when their gcd exceeds 1. Conventions on small graphs:
the empty graph and single vertices are regular, complete and connected.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from ..exceptions import InvalidInput, UnknownVertex
from .disjoint_set import DisjointSet


@dataclass(frozen=True, eq=False)
class CDGraph:
    vertices: Tuple[int, ...]
    adj: np.ndarray
    components: Tuple[Tuple[int, ...], ...]

    @cached_property
    def _position(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index_of(self, v: int) -> int:
        try:
            return self._position[v]
        except KeyError:
            raise UnknownVertex(f"{v} is not a vertex of the graph {list(self.vertices)}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._position

    # ---------------------------------------------------------
    # Neighborhoods
    # ---------------------------------------------------------

    def neighbors(self, v: int) -> FrozenSet[int]:
        row = self.adj[self.index_of(v)]
        return frozenset(self.vertices[j] for j in np.flatnonzero(row))

    def closed_neighborhood(self, v: int) -> FrozenSet[int]:
        """v together with every vertex adjacent to it."""
        return self.neighbors(v) | {v}

    def is_adjacent(self, v: int, w: int) -> bool:
        return bool(self.adj[self.index_of(v), self.index_of(w)])

    def degree(self, v: int) -> int:
        """Size of the open neighborhood."""
        return int(self.adj[self.index_of(v)].sum())

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(int(d) for d in self.adj.sum(axis=1))

    def edges(self) -> List[Tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adj, k=1))
        return [(self.vertices[i], self.vertices[j]) for i, j in zip(rows, cols)]

    # ---------------------------------------------------------
    # Predicates
    # ---------------------------------------------------------

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def regular_degree(self) -> Optional[int]:
        """Common degree k of a regular graph with at least one vertex, else None."""
        if not self.vertices or not self.is_regular():
            return None
        return self.degrees[0]

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return int(self.adj.sum()) == n * (n - 1)

    def component_count(self) -> int:
        return len(self.components)

    def is_connected(self) -> bool:
        return self.component_count() <= 1

    def components_bfs(self) -> List[Tuple[int, ...]]:
        """Components by breadth-first search, as index tuples."""
        seen = set()
        result = []
        for start in range(len(self.vertices)):
            if start in seen:
                continue
            seen.add(start)
            block = [start]
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in np.flatnonzero(self.adj[i]).tolist():
                    if j not in seen:
                        seen.add(j)
                        block.append(j)
                        queue.append(j)
            result.append(tuple(sorted(block)))
        return result

    def component_vertices(self) -> List[Tuple[int, ...]]:
        return [tuple(self.vertices[i] for i in block) for block in self.components]

    def partner_classes(self) -> List[Tuple[int, ...]]:
        """Blocks of vertices sharing one closed neighborhood, ordered by least vertex."""
        blocks: Dict[FrozenSet[int], List[int]] = {}
        for v in self.vertices:
            blocks.setdefault(self.closed_neighborhood(v), []).append(v)
        return sorted((tuple(block) for block in blocks.values()), key=lambda b: b[0])

    def are_partners(self, v: int, w: int) -> bool:
        return v != w and self.closed_neighborhood(v) == self.closed_neighborhood(w)


def build_graph(sizes: Iterable[int]) -> CDGraph:
    """Common-divisor graph on the distinct members of ``sizes``.

    Raises:
        InvalidInput: if any member is 1 or less
    """
    values = sorted(set(int(s) for s in sizes))
    bad = [s for s in values if s <= 1]
    if bad:
        raise InvalidInput(f"Graph vertices must exceed 1, got {bad}")

    vertex_array = np.array(values, dtype=np.int64)
    adj = np.gcd.outer(vertex_array, vertex_array) > 1
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)

    forest = DisjointSet(len(values))
    for i, j in zip(*np.nonzero(adj)):
        forest.merge(int(i), int(j))
    components = tuple(tuple(block) for block in forest.groups())

    return CDGraph(vertices=tuple(values), adj=adj, components=components)
