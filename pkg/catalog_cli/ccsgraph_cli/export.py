"""
Byte-stable renderings of graphs, class listings and reports.
"""

import json
import re
from typing import Any, List, Sequence, Set, Tuple

from ccsgraph_lib.classes import ClassData
from ccsgraph_lib.graph import CDGraph
from ccsgraph_lib.schemas import SearchHit
from ccsgraph_lib.theorems import summarize_graph
from pydantic import BaseModel, Field

_DOT_NODE_RE = re.compile(r"^\s*(\d+)\s*\[")
_DOT_EDGE_RE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;")


def dump_json(document: Any) -> str:
    if isinstance(document, BaseModel):
        document = document.model_dump(mode="json", by_alias=True)
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------
# Graphs
# ---------------------------------------------------------


def graph_to_dot(graph: CDGraph, title: str = "cd") -> str:
    """Undirected DOT with vertices and edges in increasing order."""
    lines = [f"graph {json.dumps(title)} {{"]
    for v in graph.vertices:
        lines.append(f'  {v} [label="{v}"];')
    for v, w in sorted(graph.edges()):
        lines.append(f"  {v} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_dot(text: str) -> Tuple[Set[int], Set[Tuple[int, int]]]:
    """Vertex and edge sets of a document written by graph_to_dot."""
    vertices: Set[int] = set()
    edges: Set[Tuple[int, int]] = set()
    for line in text.splitlines():
        edge = _DOT_EDGE_RE.match(line)
        if edge:
            v, w = sorted((int(edge.group(1)), int(edge.group(2))))
            edges.add((v, w))
            continue
        node = _DOT_NODE_RE.match(line)
        if node:
            vertices.add(int(node.group(1)))
    return vertices, edges


def graph_document(graph: CDGraph, subgroup_descriptor: str) -> dict:
    document = summarize_graph(graph).model_dump(mode="json")
    document["subgroup"] = subgroup_descriptor
    return document


# ---------------------------------------------------------
# Class listings
# ---------------------------------------------------------


class ClassRow(BaseModel):
    representative: str = Field(..., description="Least-index class member in cycle notation")
    size: int


class ClassListing(BaseModel):
    """G-classes of one normal subgroup."""

    group_name: str
    subgroup_descriptor: str
    group_order: int
    normal_order: int
    classes: List[ClassRow]
    cs_values: List[int]
    center_intersection_order: int
    center_of_normal_order: int


def class_listing(group_name: str, subgroup_descriptor: str, cd: ClassData) -> ClassListing:
    return ClassListing(
        group_name=group_name,
        subgroup_descriptor=subgroup_descriptor,
        group_order=cd.group.order,
        normal_order=cd.normal.order,
        classes=[
            ClassRow(representative=str(cd.group.element(c.representative)), size=c.size)
            for c in cd.classes
        ],
        cs_values=list(cd.cs_values),
        center_intersection_order=len(cd.n_cap_zg),
        center_of_normal_order=len(cd.zn_members),
    )


def format_class_listing(listing: ClassListing) -> str:
    width = max([len("representative")] + [len(row.representative) for row in listing.classes])
    lines = [
        f"{listing.group_name} (order {listing.group_order}), "
        f"{listing.subgroup_descriptor} (order {listing.normal_order})",
        f"  |N ∩ Z(G)| = {listing.center_intersection_order}, "
        f"|Z(N)| = {listing.center_of_normal_order}",
        "  cs_G(N) = {" + ", ".join(str(v) for v in listing.cs_values) + "}",
        f"  {'representative'.ljust(width)}  size",
    ]
    for row in listing.classes:
        lines.append(f"  {row.representative.ljust(width)}  {row.size}")
    if all(v == 1 for v in listing.cs_values):
        lines.append("  graph empty: every class of N is central in G")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------
# Report summaries
# ---------------------------------------------------------


def format_counts(counts: dict, statements: Sequence[str], violations: int) -> str:
    lines = []
    for statement in statements:
        per_status = counts.get(statement, {})
        cells = ", ".join(f"{status}={per_status[status]}" for status in sorted(per_status))
        lines.append(f"{statement}: {cells}")
    lines.append(f"violations: {violations}")
    return "\n".join(lines) + "\n"


def format_search_hit(hit: SearchHit) -> str:
    prime = hit.prime if hit.prime is not None else "-"
    return (
        f"{hit.group_name} / {hit.subgroup_descriptor}: |G|={hit.group_order} "
        f"|N|={hit.normal_order} cs={hit.cs_values} p={prime} "
        f"MainTheorem={hit.main_theorem.status} "
        f"Decomposition={hit.decomposition.status}\n"
    )
