import math

import networkx as nx
import pytest
from ccsgraph_lib.exceptions import InvalidInput, UnknownVertex
from ccsgraph_lib.graph import DisjointSet, build_graph
from hypothesis import given
from hypothesis import strategies as st

size_sets = st.sets(st.integers(min_value=2, max_value=240), max_size=12)


def as_networkx(graph):
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges())
    return g


# ---------------------------------------------------------
# Construction
# ---------------------------------------------------------


class TestBuildGraph:
    """Vertices, edges and input validation."""

    def test_duplicates_collapse(self):
        """Test repeated sizes give one vertex each."""
        graph = build_graph([6, 4, 6, 9, 4])
        assert graph.vertices == (4, 6, 9)
        assert len(graph) == 3

    @pytest.mark.parametrize("sizes", [[1, 2], [0, 3], [-4]])
    def test_rejects_small_values(self, sizes):
        """Test vertices must exceed 1."""
        with pytest.raises(InvalidInput):
            build_graph(sizes)

    def test_unknown_vertex(self):
        """Test neighborhood queries on a missing vertex."""
        graph = build_graph([2, 3])
        with pytest.raises(UnknownVertex):
            graph.neighbors(5)
        assert 5 not in graph
        assert 2 in graph

    def test_edges(self):
        """Test edges are listed once with the smaller vertex first."""
        assert build_graph([4, 6, 9]).edges() == [(4, 6), (6, 9)]


# ---------------------------------------------------------
# Predicates
# ---------------------------------------------------------


class TestPredicates:
    """Regularity, completeness and components on small cases."""

    def test_coprime_pair(self):
        """Test {2, 3}: two isolated vertices."""
        graph = build_graph([2, 3])
        assert not graph.is_connected()
        assert graph.component_count() == 2
        assert graph.is_regular()
        assert graph.regular_degree() == 0
        assert not graph.is_complete()

    def test_path(self):
        """Test {4, 6, 9}: a path through 6."""
        graph = build_graph([4, 6, 9])
        assert graph.is_connected()
        assert not graph.is_regular()
        assert graph.regular_degree() is None
        assert not graph.is_adjacent(4, 9)
        assert graph.neighbors(6) == {4, 9}
        assert graph.degree(6) == 2

    def test_triangle(self):
        """Test {6, 10, 15}: pairwise non-coprime, so complete and 2-regular."""
        graph = build_graph([6, 10, 15])
        assert graph.is_complete()
        assert graph.regular_degree() == 2
        assert graph.closed_neighborhood(6) == {6, 10, 15}

    def test_empty_graph(self):
        """Test the empty graph is regular, complete and connected with no degree."""
        graph = build_graph([])
        assert graph.is_regular()
        assert graph.is_complete()
        assert graph.is_connected()
        assert graph.component_count() == 0
        assert graph.regular_degree() is None

    def test_single_vertex(self):
        """Test one vertex is 0-regular and complete."""
        graph = build_graph([8])
        assert graph.regular_degree() == 0
        assert graph.is_complete()
        assert graph.is_connected()

    def test_component_vertices(self):
        """Test components as sorted vertex tuples."""
        graph = build_graph([2, 3, 4, 5, 9, 25])
        assert graph.component_vertices() == [(2, 4), (3, 9), (5, 25)]


class TestPartners:
    """Vertices with equal closed neighborhoods."""

    def test_partner_classes(self):
        """Test 2 and 4 are partners beside an isolated 3."""
        graph = build_graph([2, 3, 4])
        assert graph.partner_classes() == [(2, 4), (3,)]
        assert graph.are_partners(2, 4)
        assert not graph.are_partners(2, 3)
        assert not graph.are_partners(2, 2)

    def test_complete_graph_is_one_class(self):
        """Test every vertex of a complete graph is a partner of every other."""
        assert build_graph([6, 10, 15]).partner_classes() == [(6, 10, 15)]


# ---------------------------------------------------------
# Properties
# ---------------------------------------------------------


class TestGraphProperties:
    """Invariants over random vertex sets."""

    @given(size_sets)
    def test_adjacency_is_gcd(self, sizes):
        """Test adjacency is symmetric and exactly gcd > 1 off the diagonal."""
        graph = build_graph(sizes)
        for v in graph.vertices:
            assert not graph.is_adjacent(v, v)
            for w in graph.vertices:
                assert graph.is_adjacent(v, w) == graph.is_adjacent(w, v)
                if v != w:
                    assert graph.is_adjacent(v, w) == (math.gcd(v, w) > 1)

    @given(size_sets)
    def test_components_match_networkx(self, sizes):
        """Test union-find, breadth-first search and networkx agree on components."""
        graph = build_graph(sizes)
        reference = sorted(tuple(sorted(c)) for c in nx.connected_components(as_networkx(graph)))
        assert sorted(graph.component_vertices()) == reference
        assert sorted(graph.components_bfs()) == sorted(graph.components)

    @given(size_sets)
    def test_regular_and_complete_match_networkx(self, sizes):
        """Test degree-based predicates against networkx."""
        graph = build_graph(sizes)
        reference = as_networkx(graph)
        assert graph.is_regular() == (len({d for _, d in reference.degree}) <= 1)
        n = reference.number_of_nodes()
        assert graph.is_complete() == (reference.number_of_edges() == n * (n - 1) // 2)

    @given(size_sets)
    def test_partner_classes_partition(self, sizes):
        """Test partner classes partition the vertices and share closed neighborhoods."""
        graph = build_graph(sizes)
        blocks = graph.partner_classes()
        assert sorted(v for block in blocks for v in block) == list(graph.vertices)
        for block in blocks:
            assert len({graph.closed_neighborhood(v) for v in block}) == 1


class TestDisjointSet:
    """Union-find."""

    def test_groups(self):
        """Test merges yield sorted blocks ordered by least member."""
        forest = DisjointSet(6)
        forest.merge(4, 1)
        forest.merge(5, 2)
        forest.merge(2, 4)
        assert forest.groups() == [[0], [1, 2, 4, 5], [3]]
        assert forest.find_root(1) == forest.find_root(5)
