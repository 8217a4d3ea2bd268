from .cd_graph import CDGraph, build_graph
from .disjoint_set import DisjointSet

__all__ = ["CDGraph", "DisjointSet", "build_graph"]
