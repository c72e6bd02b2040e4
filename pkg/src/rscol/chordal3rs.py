"""O(n^3) 3-rs-colourability tester for chordal graphs.

A triangle whose three corners are all 3-plus vertices (type I) certifies
non-colourability.  A triangle with a degree-2 corner (type II) can be
eliminated: drop the corner and attach two pendants at each remaining corner,
preserving 3-rs colourability both ways.  Once triangle-free, a connected
chordal graph is a tree and the tree tester finishes the job.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    connected_components,
    induced_subgraph,
    is_chordal,
    is_tree,
    list_triangles,
)
from .tree3rs import TreeTestResult, test_3rs_tree


class NotChordalError(ValueError):
    """Input rejected: the graph is not chordal (distinct from a NO decision)."""


@dataclass(frozen=True)
class TriangleKind:
    """type I: all three corners are 3-plus; type II carries a degree-2 corner."""

    is_type1: bool
    low_degree_vertex: int | None = None


def classify_triangle(g: Graph, t: tuple[int, int, int]) -> TriangleKind:
    u, v, w = t
    if not (g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)):
        raise ValueError(f"{t} is not a triangle")
    low = [x for x in sorted(t) if g.degree(x) == 2]
    if low:
        return TriangleKind(False, low[0])
    return TriangleKind(True)


def eliminate_type2_triangle(g: Graph, t: tuple[int, int, int], w: int) -> Graph:
    """Remove the degree-2 corner w of triangle t and attach two pendants at
    each of the other two corners.

    Dense ids force a renumbering: surviving vertices keep their relative
    order (indices above w shift down by one) and the four pendants are
    appended at the end, two at u then two at v (u < v).
    """
    if w not in t:
        raise ValueError(f"vertex {w} is not a corner of {t}")
    if g.degree(w) != 2:
        raise ValueError(f"vertex {w} has degree {g.degree(w)}, need 2")
    u, v = sorted(x for x in t if x != w)
    if sorted(g.neighbours(w)) != [u, v]:
        raise ValueError(f"neighbours of {w} are not the other corners of {t}")

    def relabel(x: int) -> int:
        return x if x < w else x - 1

    edges = [(relabel(a), relabel(b)) for a, b in g.edges() if w not in (a, b)]
    n = g.n - 1
    edges += [(relabel(u), n), (relabel(u), n + 1), (relabel(v), n + 2), (relabel(v), n + 3)]
    return Graph.from_edge_list(n + 4, edges)


@dataclass
class EliminationTrace:
    """Record of one component's triangle-elimination run."""

    final_tree: Graph | None  # None when a type-I triangle stopped the run
    type1_triangle: tuple[int, int, int] | None = None
    eliminations: int = 0
    triangle_counts: list[int] = field(default_factory=list)
    intermediates: list[Graph] = field(default_factory=list)


def eliminate_triangles(g: Graph, keep_intermediates: bool = False) -> EliminationTrace:
    """Run the elimination loop on a connected graph until it is triangle-free
    or a type-I triangle appears.  Triangles are rescanned after every step
    because eliminations change degrees."""
    trace = EliminationTrace(None)
    current = g
    while True:
        triangles = list_triangles(current)
        trace.triangle_counts.append(len(triangles))
        if not triangles:
            trace.final_tree = current
            return trace
        type2: tuple[tuple[int, int, int], int] | None = None
        for t in triangles:
            kind = classify_triangle(current, t)
            if kind.is_type1:
                trace.type1_triangle = t
                return trace
            if type2 is None:
                type2 = (t, kind.low_degree_vertex)  # lexicographically smallest
        t, w = type2
        current = eliminate_type2_triangle(current, t, w)
        trace.eliminations += 1
        if keep_intermediates:
            trace.intermediates.append(current)


@dataclass
class ChordalTestResult:
    colourable: bool
    reason: str | None = None
    component_results: list[TreeTestResult | None] = field(default_factory=list)
    final_trees: list[Graph] = field(default_factory=list)


def test_3rs_chordal(g: Graph, collect_trees: bool = False) -> ChordalTestResult:
    """Decide 3-rs colourability of a chordal graph; decision is the AND over
    connected components.  Non-chordal input raises NotChordalError."""
    if not is_chordal(g):
        raise NotChordalError("input graph is not chordal")
    result = ChordalTestResult(True)
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        if is_tree(sub):
            tree = sub
        else:
            trace = eliminate_triangles(sub)
            if trace.type1_triangle is not None:
                result.colourable = False
                if result.reason is None:
                    result.reason = (
                        f"type-I triangle {trace.type1_triangle} in component at {comp[0]}"
                    )
                result.component_results.append(None)
                continue
            tree = trace.final_tree
        if collect_trees:
            result.final_trees.append(tree)
        tree_result = test_3rs_tree(tree)
        result.component_results.append(tree_result)
        if not tree_result.colourable:
            result.colourable = False
            if result.reason is None:
                result.reason = f"component at {comp[0]}: {tree_result.reason_text()}"
    return result
