"""Shared instances, generators, and independent oracles for the test suite.

Oracles here deliberately re-derive results by brute force or by a different
formulation than the library code they check.
"""

from __future__ import annotations

import heapq
import itertools
import random

from rscol.colouring import Colouring
from rscol.graph import Graph

# -- named instances ---------------------------------------------------------

# vertex order x, y, z, v, w
DART_EDGES = [(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)]
DART_X, DART_Y, DART_Z, DART_V, DART_W = range(5)


def dart() -> Graph:
    return Graph.from_edge_list(5, DART_EDGES)


def dart_colouring() -> Colouring:
    # x, z -> 1; y -> 0; v, w -> 2
    return Colouring.of([1, 0, 1, 2, 2], k=3)


# worked-example tree, labels A..N = 0..13, root N = 13
WORKED_TREE_EDGES = [
    (0, 2), (1, 2), (2, 4), (3, 4), (4, 6), (5, 6), (6, 7),
    (7, 8), (8, 13), (9, 13), (13, 12), (10, 12), (12, 11),
]
WORKED_TREE_ROOT = 13


def worked_tree() -> Graph:
    return Graph.from_edge_list(14, WORKED_TREE_EDGES)


def worked_tree_caterpillar() -> Graph:
    # same tree in its caterpillar drawing: spine v1..v7 = 0..6, leaves 7..13
    edges = [(i, i + 1) for i in range(6)]
    edges += [(7, 0), (6, 13), (0, 8), (1, 9), (2, 10), (5, 11), (6, 12)]
    return Graph.from_edge_list(14, edges)


def unsat_cubic_formula():
    """The four-clause formula whose gadget has 40 vertices; it has no
    exactly-one-true assignment."""
    from rscol.constructions import PositiveCnf

    return PositiveCnf.of(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


# -- independent rs oracle ----------------------------------------------------


def rs_violations_by_paths(g: Graph, c: Colouring) -> bool:
    """Direct scan over all 3-vertex paths; independent of the per-class
    counting formulation in the library."""
    for u, v in g.edges():
        if c[u] == c[v]:
            return False
    for y in range(g.n):
        for x in g.neighbours(y):
            for z in g.neighbours(y):
                if x < z and c[x] == c[z] and c[y] > c[x]:
                    return False
    return True


def brute_force_min_colours(g: Graph, accept) -> int:
    """Smallest k such that some total k-colouring passes `accept`, by
    enumerating all assignments (tiny graphs only)."""
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if accept(g, Colouring.of(assignment, k=k)):
                return k
    return max(g.n, 1)


def brute_force_exists(g: Graph, k: int, accept, pre=None) -> bool:
    for assignment in itertools.product(range(k), repeat=g.n):
        if pre is not None and any(
            p is not None and p != a for p, a in zip(pre, assignment)
        ):
            continue
        if accept(g, Colouring.of(assignment, k=k)):
            return True
    return False


def brute_max_independent_set_size(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        for subset in itertools.combinations(range(g.n), r):
            members = set(subset)
            if all(w not in members for v in subset for w in g.neighbours(v)):
                return r
    return best


def brute_girth(g: Graph):
    """Shortest cycle by DFS over all simple cycles (tiny graphs only)."""
    import math

    best = math.inf

    def walk(start, current, visited):
        nonlocal best
        for w in g.neighbours(current):
            if w == start and len(visited) >= 3:
                best = min(best, len(visited))
            elif w > start and w not in visited:
                walk(start, w, visited | {w})

    for s in range(g.n):
        walk(s, s, {s})
    return best


def brute_is_chordal(g: Graph) -> bool:
    """No induced cycle of length > 3, by enumerating vertex subsets."""
    for size in range(4, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            inside = set(subset)
            degs = []
            for v in subset:
                d = sum(1 for w in g.neighbours(v) if w in inside)
                degs.append(d)
            if all(d == 2 for d in degs) and _is_connected_subset(g, inside):
                return False
    return True


def _is_connected_subset(g: Graph, subset) -> bool:
    start = next(iter(subset))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbours(u):
            if w in subset and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == subset


# -- tree generation ------------------------------------------------------------


def tree_from_prufer(seq, n: int) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def all_labelled_trees(n: int):
    """Every labelled tree on n vertices, via all Pruefer sequences."""
    if n <= 2:
        yield Graph.from_edge_list(n, tree_from_prufer((), n))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield Graph.from_edge_list(n, tree_from_prufer(seq, n))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree (random Pruefer sequence)."""
    if n <= 2:
        return Graph.from_edge_list(n, tree_from_prufer((), n))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_edge_list(n, tree_from_prufer(seq, n))


def ahu_canonical_form(g: Graph) -> str:
    """Isomorphism-canonical encoding of a tree, rooted at its centre(s)."""
    n = g.n
    if n == 1:
        return "()"
    adj = g.adjacency()
    deg = [len(a) for a in adj]
    alive = [True] * n
    layer = [v for v in range(n) if deg[v] <= 1]
    removed = 0
    while removed + len(layer) < n:
        removed += len(layer)
        nxt = []
        for v in layer:
            alive[v] = False
            for w in adj[v]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt

    def encode(root: int) -> str:
        parent = [-1] * n
        seen = bytearray(n)
        seen[root] = 1
        order = [root]
        for u in order:
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    parent[w] = u
                    order.append(w)
        enc = [""] * n
        for u in reversed(order):
            kids = sorted(enc[w] for w in adj[u] if parent[w] == u)
            enc[u] = "(" + "".join(kids) + ")"
        return enc[root]

    return min(encode(c) for c in layer)


# -- random graph families ----------------------------------------------------------


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edge_list(n, edges)


def random_connected_chordal(n: int, rng: random.Random) -> Graph:
    """Iterated simplicial-vertex addition: each new vertex attaches to a
    clique inside an existing vertex's closed neighbourhood."""
    adj: dict[int, set[int]] = {0: set()}
    for v in range(1, n):
        u = rng.randrange(v)
        clique = {u}
        candidates = list(adj[u])
        rng.shuffle(candidates)
        for w in candidates:
            if rng.random() < 0.5 and all(w in adj[x] for x in clique):
                clique.add(w)
        adj[v] = set()
        for x in clique:
            adj[v].add(x)
            adj[x].add(v)
    return Graph.from_edge_list(n, [(u, w) for u in adj for w in adj[u] if u < w])


def random_cobipartite(n: int, rng: random.Random):
    """Two cliques with random cross edges; returns (graph, side_a, side_b)."""
    na = rng.randint(1, n - 1)
    side_a, side_b = tuple(range(na)), tuple(range(na, n))
    edges = [(u, v) for u in range(na) for v in range(u + 1, na)]
    edges += [(u, v) for u in range(na, n) for v in range(u + 1, n)]
    for u in side_a:
        for v in side_b:
            if rng.random() < 0.4:
                edges.append((u, v))
    return Graph.from_edge_list(n, edges), side_a, side_b


def random_split(n: int, rng: random.Random):
    """Random split graph; returns (graph, clique_side, independent_side)."""
    nc = rng.randint(0, n)
    clique = tuple(range(nc))
    independent = tuple(range(nc, n))
    edges = [(u, v) for u in clique for v in clique if u < v]
    for u in clique:
        for v in independent:
            if rng.random() < 0.45:
                edges.append((u, v))
    return Graph.from_edge_list(n, edges), clique, independent


def random_planted_cnf(rng: random.Random, num_vars: int, num_clauses: int):
    """Positive 3-CNF with a planted exactly-one-true assignment and every
    variable in at most three clauses (keeps the gadget subcubic)."""
    from rscol.constructions import PositiveCnf

    while True:
        assignment = {x: rng.random() < 0.35 for x in range(1, num_vars + 1)}
        true_vars = [x for x, b in assignment.items() if b]
        false_vars = [x for x, b in assignment.items() if not b]
        if not true_vars or len(false_vars) < 2:
            continue
        occurrences = {x: 0 for x in assignment}
        clauses: set[tuple[int, ...]] = set()
        for _ in range(400):
            if len(clauses) == num_clauses:
                break
            t = rng.choice(true_vars)
            pair = rng.sample(false_vars, 2)
            clause = tuple(sorted([t] + pair))
            if clause in clauses or any(occurrences[x] >= 3 for x in clause):
                continue
            clauses.add(clause)
            for x in clause:
                occurrences[x] += 1
        if len(clauses) == num_clauses:
            return PositiveCnf.of(num_vars, sorted(clauses)), assignment


def peelable_2_degenerate(g: Graph) -> bool:
    """Repeatedly remove vertices of degree <= 2; succeeds iff 2-degenerate."""
    adj = [set(g.neighbours(v)) for v in range(g.n)]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if len(adj[v]) <= 2]
    removed = 0
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        removed += 1
        for w in adj[v]:
            adj[w].discard(v)
            if alive[w] and len(adj[w]) <= 2:
                stack.append(w)
    return removed == g.n
