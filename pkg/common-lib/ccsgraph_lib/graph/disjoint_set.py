from typing import Dict, List


class DisjointSet:
    """Union-find over 0..size-1 with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [1] * size

    def find_root(self, node: int) -> int:
        root = node
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[node] != root:
            self.parent[node], node = root, self.parent[node]
        return root

    def merge(self, node1: int, node2: int) -> None:
        root1 = self.find_root(node1)
        root2 = self.find_root(node2)
        if root1 == root2:
            return
        if self.rank[root2] > self.rank[root1]:
            root1, root2 = root2, root1
        self.parent[root2] = root1
        self.rank[root1] += self.rank[root2]

    def groups(self) -> List[List[int]]:
        """Blocks sorted internally and ordered by their least member."""
        blocks: Dict[int, List[int]] = {}
        for node in range(len(self.parent)):
            blocks.setdefault(self.find_root(node), []).append(node)
        return sorted(blocks.values(), key=lambda block: block[0])
