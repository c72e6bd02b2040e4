"""Undirected simple graphs and the structural queries the colouring algorithms need.

Vertices are dense 0-based integers.  Graphs are immutable after construction;
every operation that "modifies" a graph returns a new one.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Sequence

VertexId = int

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input (bad endpoint, self-loop, malformed file, ...)."""


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Invariants: no self-loops, no parallel edges, adjacency symmetric,
    each adjacency list sorted ascending.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: list[list[int]]):
        # internal constructor, assumes adj already validated/sorted
        self.n = n
        self._adj = adj

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
        """Build a graph on vertices 0..n-1 from (possibly duplicated) edges."""
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, [sorted(s) for s in adj])

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def degree(self, v: VertexId) -> int:
        return len(self._adj[v])

    def neighbours(self, v: VertexId) -> Sequence[VertexId]:
        return self._adj[v]

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        a = self._adj[u]
        if len(self._adj[v]) < len(a):
            a, v = self._adj[v], u
        return v in a

    def edges(self) -> Iterator[Edge]:
        """All edges (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def adjacency(self) -> list[list[int]]:
        """Mutable copy of the adjacency lists."""
        return [list(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(tuple(a) for a in self._adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    return Graph.from_edge_list(n, edges)


def degree(g: Graph, v: VertexId) -> int:
    return g.degree(v)


# -- connectivity ----------------------------------------------------------


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, ordered by minimum."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbours(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on `vertices`, relabelled densely.

    Returns (subgraph, old_ids) where old_ids[new] = original vertex id.
    """
    old_ids = sorted(vertices)
    index = {v: i for i, v in enumerate(old_ids)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return Graph.from_edge_list(len(old_ids), edges), old_ids


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    order = [0]
    for u in order:  # order grows while we iterate: sequential BFS
        for w in g.neighbours(u):
            if not seen[w]:
                seen[w] = 1
                order.append(w)
    return len(order) == g.n


def is_tree(g: Graph) -> bool:
    """Connected and m = n - 1."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


# -- cycles, triangles, bipartiteness -------------------------------------


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or math.inf if the graph is acyclic.

    BFS from every vertex; every non-tree edge closes a walk of length
    dist[u] + dist[v] + 1 >= girth, and for a root on a shortest cycle some
    edge achieves it exactly.
    """
    best = math.inf
    dist = [0] * g.n
    for root in range(g.n):
        for i in range(g.n):
            dist[i] = -1
        dist[root] = 0
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if 2 * du >= best:  # no shorter cycle can be found from this root
                break
            for w in g.neighbours(u):
                if dist[w] == -1:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent.get(u) != w and parent.get(w) != u:
                    cand = du + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def list_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """Every 3-clique exactly once as (u, v, w) with u < v < w, sorted."""
    out: list[tuple[int, int, int]] = []
    neighbour_sets = [set(g.neighbours(v)) for v in range(g.n)]
    for u, v in g.edges():
        for w in g.neighbours(u):
            if w > v and w in neighbour_sets[v]:
                out.append((u, v, w))
    out.sort()
    return out


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-sided partition witness from BFS two-colouring, or None."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbours(u):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return (
        [v for v in range(g.n) if side[v] == 0],
        [v for v in range(g.n) if side[v] == 1],
    )


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search + simplicial check for a perfect elimination ordering."""
    n = g.n
    if n == 0:
        return True
    # MCS: number vertices n-1..0, always picking the unnumbered vertex with
    # the most numbered neighbours.
    weight = [0] * n
    numbered = [False] * n
    order = [0] * n  # order[i] = vertex in position i of the elimination ordering
    for pos in range(n - 1, -1, -1):
        best, best_w = -1, -1
        for v in range(n):
            if not numbered[v] and weight[v] > best_w:
                best, best_w = v, weight[v]
        numbered[best] = True
        order[pos] = best
        for w in g.neighbours(best):
            if not numbered[w]:
                weight[w] += 1
    position = [0] * n
    for i, v in enumerate(order):
        position[v] = i
    neighbour_sets = [set(g.neighbours(v)) for v in range(n)]
    for i, v in enumerate(order):
        later = [w for w in g.neighbours(v) if position[w] > i]
        if not later:
            continue
        u = min(later, key=lambda w: position[w])
        for w in later:
            if w != u and w not in neighbour_sets[u]:
                return False
    return True


# -- rooted trees ----------------------------------------------------------


@dataclass(frozen=True)
class RootedTree:
    """A tree with parent/children structure from BFS at `root`.

    parent and children are plain lists for speed at the million-vertex
    scale; treat them as read-only.
    """

    graph: Graph
    root: VertexId
    parent: list[int]  # parent[root] = -1
    children: list[list[int]]


def root_tree(g: Graph, root: VertexId) -> RootedTree:
    """Root a tree at an arbitrary vertex via BFS (single pass, validates)."""
    if g.n < 1 or g.m != g.n - 1:
        raise GraphError("input graph is not a tree")
    parent = [-1] * g.n
    seen = bytearray(g.n)
    seen[root] = 1
    order = [root]
    for u in order:
        for w in g.neighbours(u):
            if not seen[w]:
                seen[w] = 1
                parent[w] = u
                order.append(w)
    if len(order) != g.n:
        raise GraphError("input graph is not a tree")
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    return RootedTree(g, root, parent, children)


def root_at_3plus(g: Graph, root: VertexId | None = None) -> RootedTree:
    """Root a tree at a 3-plus vertex (lowest-indexed by default).

    Raises GraphError if the tree has no vertex of degree >= 3 (a path);
    callers must special-case paths.
    """
    if root is None:
        root = next((v for v in range(g.n) if g.degree(v) >= 3), -1)
        if root == -1:
            if not is_tree(g):
                raise GraphError("input graph is not a tree")
            raise GraphError("no 3-plus vertex: tree is a path")
    elif g.degree(root) < 3:
        raise GraphError(f"requested root {root} is not a 3-plus vertex")
    return root_tree(g, root)  # validates tree-ness itself


# -- graph surgery ---------------------------------------------------------


def attach_pendants(g: Graph, v: VertexId, count: int) -> Graph:
    """Add `count` fresh degree-1 vertices adjacent to v; original indices preserved."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    if count < 0:
        raise GraphError("pendant count must be nonnegative")
    edges = list(g.edges())
    edges.extend((v, g.n + i) for i in range(count))
    return Graph.from_edge_list(g.n + count, edges)


def subdivide_all_edges(g: Graph) -> tuple[Graph, dict[Edge, VertexId]]:
    """Replace every edge uv by u-w-v with a fresh w.

    Returns the new graph and the map (u, v) -> w with u < v, so gadget
    builders can name the subdivision vertices.
    """
    new_edges: list[Edge] = []
    names: dict[Edge, VertexId] = {}
    next_id = g.n
    for u, v in g.edges():
        names[(u, v)] = next_id
        new_edges.append((u, next_id))
        new_edges.append((next_id, v))
        next_id += 1
    return Graph.from_edge_list(next_id, new_edges), names


# -- standard families -----------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,p}: centre 0 and `leaves` pendant vertices."""
    return Graph.from_edge_list(leaves + 1, [(0, i + 1) for i in range(leaves)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    edges = [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)]
    return Graph.from_edge_list(n, edges)


# -- file format -----------------------------------------------------------
# "c <comment>" / "p edge <n> <m>" / "e <u> <v>" with 1-based endpoints.


def parse_graph(lines: Iterable[str], source: str = "<graph>") -> Graph:
    n = -1
    edges: list[Edge] = []
    declared_m = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n != -1:
                raise GraphError(f"{source}:{lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"{source}:{lineno}: expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"{source}:{lineno}: non-integer counts") from None
        elif parts[0] == "e":
            if n == -1:
                raise GraphError(f"{source}:{lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphError(f"{source}:{lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"{source}:{lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"{source}:{lineno}: endpoint outside 1..{n}")
            if u == v:
                raise GraphError(f"{source}:{lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"{source}:{lineno}: unknown line type {parts[0]!r}")
    if n == -1:
        raise GraphError(f"{source}: missing problem line")
    if len(edges) != declared_m:
        raise GraphError(f"{source}: declared {declared_m} edges, found {len(edges)}")
    return Graph.from_edge_list(n, edges)


def read_graph_file(path: str) -> Graph:
    with open(path) as fh:
        return parse_graph(fh, source=path)


def format_graph(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"c {line}")
    out.append(f"p edge {g.n} {g.m}")
    for u, v in g.edges():
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def write_graph_file(g: Graph, path_or_file: str | IO[str], comment: str | None = None) -> None:
    text = format_graph(g, comment)
    if isinstance(path_or_file, str):
        with open(path_or_file, "w") as fh:
            fh.write(text)
    else:
        path_or_file.write(text)


def to_dot(g: Graph, name: str = "G") -> str:
    """DOT export for visual inspection; one line per edge, no layout attributes."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n) if g.degree(v) == 0)
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
