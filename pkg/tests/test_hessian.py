import io

import numpy as np
import pytest

import helpers
from rscol.colouring import Colouring, is_rs
from rscol.graph import Graph, path_graph, star_graph
from rscol.hessian import (
    PatternError,
    SeedGrouping,
    SparsityPattern,
    compress,
    greedy_distance_two_colouring,
    greedy_rs_colouring,
    parse_matrix_market,
    pattern_to_graph,
    read_dense_csv,
    recover,
    write_dense_csv,
)
from rscol.solver import rs_chromatic_number


def random_pattern_matrix(n, density, rng):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    pattern = SparsityPattern.from_pairs(n, pairs)
    h = np.zeros((n, n))
    for i, j in pairs:
        value = rng.uniform(-10, 10)
        h[i, j] = h[j, i] = value
    for i in range(n):
        h[i, i] = rng.uniform(-10, 10)
    return pattern, h


class TestPattern:
    def test_arrowhead_is_star(self):
        p = SparsityPattern.from_pairs(5, [(0, j) for j in range(1, 5)])
        g = pattern_to_graph(p)
        assert g == star_graph(4)

    def test_tridiagonal_is_path(self):
        p = SparsityPattern.from_pairs(6, [(i, i + 1) for i in range(5)])
        assert pattern_to_graph(p) == path_graph(6)

    def test_diagonal_only(self):
        p = SparsityPattern.from_pairs(4, [])
        assert pattern_to_graph(p).m == 0

    def test_from_dense_rejects_asymmetric(self):
        with pytest.raises(PatternError):
            SparsityPattern.from_dense(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_rejects_diagonal_pairs(self):
        with pytest.raises(PatternError):
            SparsityPattern.from_pairs(3, [(1, 1)])


class TestGreedy:
    def test_path_natural(self):
        g = path_graph(6)
        c = greedy_rs_colouring(g, "natural")
        assert is_rs(g, c)
        assert c.k <= 3
        assert rs_chromatic_number(g) == 3

    def test_star_largest_degree_first(self):
        c = greedy_rs_colouring(star_graph(4), "largest_degree_first")
        assert c.k == 2
        assert c[0] == 0

    def test_edgeless(self):
        c = greedy_rs_colouring(Graph.from_edge_list(4, []))
        assert set(c.colours) == {0}

    def test_middle_vertex_coloured_last(self):
        # both endpoints first would strand the middle without the look-ahead
        g = Graph.from_edge_list(3, [(0, 2), (1, 2)])
        c = greedy_rs_colouring(g, "natural")
        assert is_rs(g, c)

    def test_always_rs_and_bracketed(self, rng):
        for _ in range(120):
            n = rng.randint(1, 10)
            g = helpers.random_graph(n, 0.35, rng)
            for order in ("natural", "largest_degree_first"):
                c = greedy_rs_colouring(g, order)
                assert is_rs(g, c)
                d2 = greedy_distance_two_colouring(g, order)
                assert rs_chromatic_number(g) <= c.k <= d2.k

    def test_unknown_order(self):
        with pytest.raises(ValueError):
            greedy_rs_colouring(path_graph(2), "zigzag")

    def test_larger_instances_stay_total(self, rng):
        for n, p in ((150, 0.05), (120, 0.2)):
            g = helpers.random_graph(n, p, rng)
            for order in ("natural", "largest_degree_first"):
                c = greedy_rs_colouring(g, order)
                assert is_rs(g, c)


class TestCompress:
    def _grouping(self, g, order="natural"):
        return SeedGrouping.from_colouring(g, greedy_rs_colouring(g, order))

    def test_identity_matrix(self):
        p = SparsityPattern.from_pairs(4, [(0, 1), (2, 3)])
        g = pattern_to_graph(p)
        s = self._grouping(g)
        b = compress(np.eye(4), s, p)
        for v in range(4):
            for col in range(s.k):
                assert b[v, col] == (1.0 if s.colouring[v] == col else 0.0)

    def test_tridiagonal_entry_sums(self):
        p = SparsityPattern.from_pairs(6, [(i, i + 1) for i in range(5)])
        g = pattern_to_graph(p)
        c = Colouring.of([0, 1, 2, 0, 1, 2], k=3)
        s = SeedGrouping.from_colouring(g, c)
        h = np.diag(np.arange(1.0, 7.0))
        for i in range(5):
            h[i, i + 1] = h[i + 1, i] = 0.5
        b = compress(h, s, p)
        # row 1: colour-0 column collects h[1,0] + h[1,3] = 0.5 + 0
        assert b[1, 0] == pytest.approx(0.5)
        assert b[1, 1] == pytest.approx(2.0)

    def test_all_singletons_is_permutation(self):
        p = SparsityPattern.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        g = pattern_to_graph(p)
        s = SeedGrouping.from_colouring(g, Colouring.of([0, 1, 2], k=3))
        h = np.array([[2.0, 1.0, 3.0], [1.0, 5.0, 4.0], [3.0, 4.0, 7.0]])
        b = compress(h, s, p)
        assert np.array_equal(b, h)  # identity grouping keeps columns in place

    def test_rejects_asymmetric(self):
        p = SparsityPattern.from_pairs(2, [(0, 1)])
        s = self._grouping(pattern_to_graph(p))
        with pytest.raises(PatternError):
            compress(np.array([[1.0, 2.0], [3.0, 1.0]]), s, p)

    def test_rejects_pattern_violation(self):
        p = SparsityPattern.from_pairs(3, [(0, 1)])
        s = self._grouping(pattern_to_graph(p))
        h = np.array([[1.0, 0.5, 0.25], [0.5, 1.0, 0.0], [0.25, 0.0, 1.0]])
        with pytest.raises(PatternError):
            compress(h, s, p)


class TestRecover:
    def test_roundtrip_random(self, rng):
        for _ in range(60):
            n = rng.randint(1, 30)
            pattern, h = random_pattern_matrix(n, rng.uniform(0.05, 0.3), rng)
            g = pattern_to_graph(pattern)
            order = rng.choice(["natural", "largest_degree_first"])
            s = SeedGrouping.from_colouring(g, greedy_rs_colouring(g, order))
            b = compress(h, s, pattern)
            out = recover(b, pattern, s)
            assert np.abs(out - h).max() <= 1e-12

    def test_diagonal_matrix_single_colour(self):
        p = SparsityPattern.from_pairs(5, [])
        g = pattern_to_graph(p)
        s = SeedGrouping.from_colouring(g, greedy_rs_colouring(g))
        assert s.k == 1
        h = np.diag([1.0, 2.0, 3.0, 4.0, 5.0])
        assert np.array_equal(recover(compress(h, s, p), p, s), h)

    def test_arrowhead_reads_from_leaf_rows(self):
        # centre coloured 0, leaves 1: each off-diagonal sits alone in the
        # leaf row's colour-0 column
        p = SparsityPattern.from_pairs(5, [(0, j) for j in range(1, 5)])
        g = pattern_to_graph(p)
        c = Colouring.of([0, 1, 1, 1, 1], k=2)
        s = SeedGrouping.from_colouring(g, c)
        h = np.eye(5)
        for j in range(1, 5):
            h[0, j] = h[j, 0] = float(j)
        b = compress(h, s, p)
        for j in range(1, 5):
            assert b[j, 0] == float(j)
        assert np.array_equal(recover(b, p, s), h)

    def test_rejects_non_rs_grouping(self):
        p = SparsityPattern.from_pairs(3, [(0, 1), (1, 2)])
        bad = SeedGrouping(Colouring.of([0, 1, 0], k=2), ((0, 2), (1,)))
        with pytest.raises(ValueError):
            recover(np.zeros((3, 2)), p, bad)

    def test_grouping_constructor_validates(self):
        p = SparsityPattern.from_pairs(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            SeedGrouping.from_colouring(pattern_to_graph(p), Colouring.of([0, 1, 0], k=2))

    def test_direct_recovery_uniqueness(self, rng):
        # every vertex has at most one neighbour in each lower class
        for _ in range(40):
            g = helpers.random_graph(rng.randint(1, 12), 0.3, rng)
            c = greedy_rs_colouring(g)
            for v in range(g.n):
                lower = [c[u] for u in g.neighbours(v) if c[u] < c[v]]
                assert len(lower) == len(set(lower))


class TestMatrixMarket:
    def test_symmetric_real(self):
        text = "%%MatrixMarket matrix coordinate real symmetric\n3 3 4\n1 1 2.0\n2 2 3.0\n2 1 -1.5\n3 3 1.0\n"
        m = parse_matrix_market(io.StringIO(text))
        assert m[0, 1] == -1.5 and m[1, 0] == -1.5

    def test_pattern_kind(self):
        text = "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 1\n"
        m = parse_matrix_market(io.StringIO(text))
        assert m[1, 0] == 1.0 and m[0, 1] == 1.0

    def test_general_must_be_structurally_symmetric(self):
        text = "%%MatrixMarket matrix coordinate real general\n2 2 1\n2 1 5.0\n"
        with pytest.raises(PatternError, match="symmetric"):
            parse_matrix_market(io.StringIO(text))

    def test_header_required(self):
        with pytest.raises(PatternError, match="header"):
            parse_matrix_market(io.StringIO("3 3 0\n"))

    def test_entry_count_checked(self):
        text = "%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 1.0\n"
        with pytest.raises(PatternError, match="declared"):
            parse_matrix_market(io.StringIO(text))

    def test_csv_roundtrip(self, tmp_path, rng):
        m = np.array([[1.25, -2.0], [0.0, 4.5]])
        path = str(tmp_path / "m.csv")
        write_dense_csv(m, path)
        assert np.array_equal(read_dense_csv(path), m)
