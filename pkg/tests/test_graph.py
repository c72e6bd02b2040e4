import io
import math

import pytest

import helpers
from rscol.graph import (
    Graph,
    GraphError,
    attach_pendants,
    complete_graph,
    connected_components,
    cycle_graph,
    format_graph,
    girth,
    is_bipartite,
    is_chordal,
    is_tree,
    list_triangles,
    parse_graph,
    path_graph,
    root_at_3plus,
    star_graph,
    subdivide_all_edges,
    to_dot,
)


class TestFromEdgeList:
    def test_dart(self):
        g = helpers.dart()
        assert g.n == 5 and g.m == 6
        assert g.degree(helpers.DART_Y) == 4

    def test_single_vertex(self):
        g = Graph.from_edge_list(1, [])
        assert g.n == 1 and g.m == 0 and g.degree(0) == 0

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
        assert g.m == 2

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph.from_edge_list(3, [(0, 3)])

    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edge_list(3, [(1, 1)])

    def test_adjacency_sorted_and_symmetric(self, rng):
        for _ in range(25):
            g = helpers.random_graph(rng.randint(1, 12), 0.4, rng)
            for v in range(g.n):
                nbrs = list(g.neighbours(v))
                assert nbrs == sorted(nbrs)
                assert all(v in g.neighbours(w) for w in nbrs)

    def test_handshake(self, rng):
        for _ in range(25):
            g = helpers.random_graph(rng.randint(1, 12), 0.4, rng)
            assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


class TestDegreeAndTrees:
    def test_dart_degrees(self):
        g = helpers.dart()
        assert [g.degree(v) for v in range(5)] == [1, 4, 3, 2, 2]

    def test_path_internal_degree(self):
        assert path_graph(4).degree(1) == 2

    def test_is_tree(self):
        assert is_tree(path_graph(7))
        assert not is_tree(helpers.dart())
        assert not is_tree(Graph.from_edge_list(4, [(0, 1), (2, 3)]))

    def test_components(self):
        g = Graph.from_edge_list(5, [(0, 1), (3, 4)])
        assert connected_components(g) == [[0, 1], [2], [3, 4]]


class TestGirth:
    def test_dart(self):
        assert girth(helpers.dart()) == 3

    def test_tree_is_acyclic(self):
        assert girth(path_graph(9)) == math.inf

    def test_even_and_odd_cycles(self):
        assert girth(cycle_graph(6)) == 6
        assert girth(cycle_graph(7)) == 7

    def test_against_brute_force(self, rng):
        for _ in range(60):
            g = helpers.random_graph(rng.randint(3, 9), 0.35, rng)
            assert girth(g) == helpers.brute_girth(g)


class TestTriangles:
    def test_dart(self):
        y, z, v, w = helpers.DART_Y, helpers.DART_Z, helpers.DART_V, helpers.DART_W
        expected = sorted([tuple(sorted((y, v, z))), tuple(sorted((y, w, z)))])
        assert list_triangles(helpers.dart()) == expected

    def test_tree_has_none(self):
        assert list_triangles(path_graph(6)) == []

    def test_k4_brute_force(self):
        # oracle: scan all vertex triples
        g = complete_graph(4)
        brute = [
            (a, b, c)
            for a in range(4)
            for b in range(a + 1, 4)
            for c in range(b + 1, 4)
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        ]
        assert list_triangles(g) == brute
        assert len(brute) == 4


class TestBipartite:
    def test_triangle(self):
        assert not is_bipartite(cycle_graph(3))

    def test_empty(self):
        assert is_bipartite(Graph.from_edge_list(0, []))
        assert is_bipartite(Graph.from_edge_list(4, []))

    def test_partition_witness(self, rng):
        from rscol.graph import bipartition

        for _ in range(20):
            g = helpers.random_graph(rng.randint(1, 10), 0.3, rng)
            witness = bipartition(g)
            if witness is None:
                assert not is_bipartite(g)
                continue
            left, right = witness
            assert sorted(left + right) == list(range(g.n))
            for side in (set(left), set(right)):
                assert all(w not in side for v in side for w in g.neighbours(v))

    def test_reduction_output_is_bipartite(self):
        from rscol.constructions import sat_to_graph

        gg = sat_to_graph(helpers.unsat_cubic_formula())
        assert is_bipartite(gg.graph)


class TestChordal:
    def test_dart_and_c4(self):
        assert is_chordal(helpers.dart())
        assert not is_chordal(cycle_graph(4))

    def test_trees(self, rng):
        for n in (1, 2, 5, 9):
            assert is_chordal(helpers.random_tree(n, rng))

    def test_against_brute_force(self, rng):
        for _ in range(80):
            g = helpers.random_graph(rng.randint(1, 8), 0.4, rng)
            assert is_chordal(g) == helpers.brute_is_chordal(g), list(g.edges())


class TestRooting:
    def test_worked_tree_rooted_at_top(self):
        tree = root_at_3plus(helpers.worked_tree(), root=helpers.WORKED_TREE_ROOT)
        assert tree.root == helpers.WORKED_TREE_ROOT
        assert tree.parent[tree.root] == -1
        # parent/children arrays reconstruct exactly the tree's edge set
        rebuilt = sorted(
            (min(v, p), max(v, p)) for v, p in enumerate(tree.parent) if p != -1
        )
        assert rebuilt == sorted(helpers.worked_tree().edges())

    def test_star_centre(self):
        tree = root_at_3plus(star_graph(3))
        assert tree.root == 0

    def test_path_has_no_root(self):
        with pytest.raises(GraphError, match="no 3-plus vertex"):
            root_at_3plus(path_graph(5))

    def test_default_root_is_lowest_3plus(self):
        tree = root_at_3plus(helpers.worked_tree())
        assert tree.root == 2  # vertex C

    def test_children_consistent_with_adjacency(self, rng):
        for _ in range(20):
            g = helpers.random_tree(rng.randint(4, 20), rng)
            if g.max_degree() < 3:
                continue
            tree = root_at_3plus(g)
            for v in range(g.n):
                expected = [w for w in g.neighbours(v) if tree.parent[w] == v]
                assert sorted(tree.children[v]) == sorted(expected)
                for child in tree.children[v]:
                    assert tree.parent[child] == v

    def test_non_tree_rejected(self):
        with pytest.raises(GraphError):
            root_at_3plus(helpers.dart())


class TestSurgery:
    def test_attach_pendants_star(self):
        g = attach_pendants(Graph.from_edge_list(1, []), 0, 3)
        assert g.n == 4 and g.degree(0) == 3

    def test_attach_pendants_c4(self):
        g = attach_pendants(cycle_graph(4), 0, 1)
        assert g.degree(0) == 3
        assert girth(g) == 4  # girth preserved
        assert [g.degree(v) for v in range(1, 4)] == [2, 2, 2]

    def test_subdivide_k3_gives_c6(self):
        g, names = subdivide_all_edges(cycle_graph(3))
        assert g.n == 6 and g.m == 6
        assert girth(g) == 6
        assert len(names) == 3

    def test_subdivide_single_edge_gives_p3(self):
        g, names = subdivide_all_edges(Graph.from_edge_list(2, [(0, 1)]))
        assert is_tree(g) and g.n == 3
        assert g.degree(names[(0, 1)]) == 2

    def test_subdivide_counts_and_bipartite(self, rng):
        for _ in range(20):
            base = helpers.random_graph(rng.randint(1, 9), 0.4, rng)
            g, _ = subdivide_all_edges(base)
            assert g.n == base.n + base.m
            assert g.m == 2 * base.m
            assert is_bipartite(g)


class TestFileFormat:
    def test_roundtrip(self, rng):
        g = helpers.random_graph(9, 0.4, rng)
        text = format_graph(g, comment="round trip")
        again = parse_graph(io.StringIO(text))
        assert again == g

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(GraphError, match=":2"):
            parse_graph(io.StringIO("p edge 3 1\ne 1 9\n"))
        with pytest.raises(GraphError, match=":1"):
            parse_graph(io.StringIO("e 1 2\n"))
        with pytest.raises(GraphError, match="declared"):
            parse_graph(io.StringIO("p edge 3 2\ne 1 2\n"))

    def test_dot_export(self):
        text = to_dot(helpers.dart())
        assert text.count(" -- ") == 6
