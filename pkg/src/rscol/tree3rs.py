"""Linear-time 3-rs-colourability tester for trees.

The tester classifies rooted subtrees (classes I..VII) and branches
(classes A..F) bottom-up.  Class A branches and class I subtrees certify
non-colourability; everything else combines via two lookup tables.  Degree-2
chains are walked iteratively so stack depth stays O(number of 3-plus
vertices) even on million-vertex paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, GraphError, RootedTree, is_tree


class BranchClass(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"


class SubtreeClass(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"


def path_3rs_feasible(n: int, i: int, j: int) -> bool:
    """Can the n-vertex path be 3-rs coloured with colours i, j on its endpoints?

    False exactly for (n=2, i=j), (n=3, i=j=0), (n=4, i!=j), (n=6, i=j=0).
    """
    if n < 2:
        raise ValueError(f"path length must be at least 2 vertices, got {n}")
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError("endpoint colours must be binary")
    if n == 2:
        return i != j
    if n == 3:
        return not (i == 0 and j == 0)
    if n == 4:
        return i == j
    if n == 6:
        return not (i == 0 and j == 0)
    return True


# Branch class by (class of the rooted subtree below, up-distance of the branch).
# Entries are constant for up-distance >= 10 (saturation); the whole table is
# pinned by the oracle-equivalence suites, including the deep rows.
_B = BranchClass
_BRANCH_TABLE: dict[SubtreeClass, tuple[BranchClass, ...]] = {
    # up-distance:     1     2     3     4     5     6     7     8     9   >=10
    SubtreeClass.II: (_B.C, _B.D, _B.B, _B.E, _B.D, _B.F, _B.E, _B.F, _B.F, _B.F),
    SubtreeClass.III: (_B.A, _B.B, _B.C, _B.D, _B.B, _B.E, _B.D, _B.F, _B.E, _B.F),
    SubtreeClass.IV: (_B.B, _B.E, _B.D, _B.F, _B.E, _B.F, _B.F, _B.F, _B.F, _B.F),
    SubtreeClass.V: (_B.C, _B.F, _B.E, _B.F, _B.F, _B.F, _B.F, _B.F, _B.F, _B.F),
    SubtreeClass.VI: (_B.E, _B.F, _B.F, _B.F, _B.F, _B.F, _B.F, _B.F, _B.F, _B.F),
    SubtreeClass.VII: (_B.F,) * 10,
}


def branch_class_lookup(subtree: SubtreeClass, up_distance: int) -> BranchClass:
    """Class of the branch made of a `subtree`-class rooted subtree and a path
    of length `up_distance`.  A class I subtree always yields a class A branch."""
    if up_distance < 1:
        raise ValueError("up-distance must be at least 1")
    if subtree is SubtreeClass.I:
        return BranchClass.A
    return _BRANCH_TABLE[subtree][min(up_distance, 10) - 1]


def subtree_class_from_state(
    colour_v: int, c_count: int, e_count: int, is_leaf: bool = False
) -> SubtreeClass:
    """Class of a rooted subtree from the forced colour at its root and the
    numbers of class C / class E branches below it.

    colour_v is 0 when some class B branch forced colour 0 (any C/D branch then
    conflicts before this is called), 1 when a C or D branch forced colour 1,
    and -1 when nothing did.  Returning SubtreeClass.I signals rejection: the
    containing tree is not 3-rs colourable.
    """
    if is_leaf:
        return SubtreeClass.VII
    if colour_v == 0:
        return SubtreeClass.II
    if colour_v == 1:
        ce = c_count + e_count
        if ce == 0:
            return SubtreeClass.IV
        if ce == 1:
            return SubtreeClass.III
        return SubtreeClass.I
    if e_count == 0:
        return SubtreeClass.VI
    if e_count == 1:
        return SubtreeClass.V
    return SubtreeClass.II


@dataclass
class TraversalState:
    """Per-run working arrays of the traversal (private to a run)."""

    colour: list[int]  # -1 unset, else 0/1
    up_distance: list[int]
    classC_count: list[int]
    classE_count: list[int]
    dist: int = 0
    visited: int = 0

    @staticmethod
    def for_tree(n: int) -> TraversalState:
        return TraversalState([-1] * n, [0] * n, [0] * n, [0] * n)


def try_to_colour(state: TraversalState, v: int, col: int) -> bool:
    """Force colour `col` at v; False on conflict with an earlier forced colour."""
    cur = state.colour[v]
    if cur == -1:
        state.colour[v] = col
        return True
    return cur == col


@dataclass
class TreeTestResult:
    colourable: bool
    reason: str | None = None  # "class_a_branch" | "class_i_subtree" | "colour_conflict"
    reason_vertex: int | None = None
    visited: int = 0
    state: TraversalState | None = field(default=None, repr=False)

    def reason_text(self) -> str | None:
        if self.reason is None:
            return None
        label = {
            "class_a_branch": "class A branch at vertex",
            "class_i_subtree": "class I subtree at vertex",
            "colour_conflict": "colour conflict at vertex",
        }[self.reason]
        return f"{label} {self.reason_vertex}"


def test_3rs_tree(t: Graph | RootedTree) -> TreeTestResult:
    """Decide 3-rs colourability of a tree.

    Accepts a Graph (must be a tree) or an already rooted tree.  Trees without
    a 3-plus vertex are paths and always colourable.  Decision-only: witnesses
    come from the exact solver.
    """
    if isinstance(t, RootedTree):
        g, root = t.graph, t.root
        if g.degree(root) < 3:
            if g.max_degree() < 3:
                return TreeTestResult(True, visited=0)  # a path
            raise GraphError("rooted input must use a 3-plus root")
    else:
        g = t
        if g.n < 1 or g.m != g.n - 1:
            raise GraphError("input graph is not a tree")
        root = next((v for v in range(g.n) if g.degree(v) >= 3), -1)
        if root == -1:
            if not is_tree(g):
                raise GraphError("input graph is not a tree")
            return TreeTestResult(True, visited=0)  # a path

    # Single post-order pass; frames carry their own parent so no BFS rooting
    # pass is needed.  m = n-1 was checked above, so visiting all n vertices
    # exactly once certifies tree-ness; a cycle would push `visited` past n.
    n = g.n
    neighbours = g.neighbours
    state = TraversalState.for_tree(n)
    colour = state.colour
    ccount = state.classC_count
    ecount = state.classE_count
    updist = state.up_distance
    visited = 1  # the root

    # frame: [vertex, parent of vertex, up_distance, position in adjacency list]
    frames: list[list[int]] = [[root, -1, 0, 0]]
    pending: BranchClass | None = None  # branch class flowing to frames[-1]

    def fail(kind: str, v: int) -> TreeTestResult:
        state.visited = visited
        return TreeTestResult(False, kind, v, visited, state)

    while frames:
        frame = frames[-1]
        v = frame[0]
        if pending is not None:
            bc = pending
            pending = None
            if bc is BranchClass.C:
                ccount[v] += 1
                if not try_to_colour(state, v, 1):
                    return fail("colour_conflict", v)
            elif bc is BranchClass.E:
                ecount[v] += 1
            elif bc is BranchClass.B:
                if not try_to_colour(state, v, 0):
                    return fail("colour_conflict", v)
            elif bc is BranchClass.D:
                if not try_to_colour(state, v, 1):
                    return fail("colour_conflict", v)
        adj_v = neighbours(v)
        idx = frame[3]
        pv = frame[1]
        while idx < len(adj_v) and adj_v[idx] == pv:
            idx += 1
        if idx < len(adj_v):
            w = adj_v[idx]
            frame[3] = idx + 1
            # walk the degree-2 chain below v until a leaf or 3-plus vertex
            p = v
            d = 1
            visited += 1
            adj_w = neighbours(w)
            while len(adj_w) == 2:
                a, b = adj_w
                p, w = w, (b if a == p else a)
                d += 1
                visited += 1
                adj_w = neighbours(w)
            if visited > n:
                raise GraphError("input graph is not a tree")
            updist[w] = d
            if len(adj_w) == 1:  # leaf: class VII subtree, classify its branch now
                pending = branch_class_lookup(SubtreeClass.VII, d)
            else:
                frames.append([w, p, d, 0])
        else:
            frame[3] = idx
            cls = subtree_class_from_state(colour[v], ccount[v], ecount[v])
            if cls is SubtreeClass.I:
                return fail("class_i_subtree", v)
            frames.pop()
            if not frames:
                if visited != n:
                    raise GraphError("input graph is not a tree")
                state.visited = visited
                return TreeTestResult(True, visited=visited, state=state)
            bc = branch_class_lookup(cls, frame[2])
            if bc is BranchClass.A:
                return fail("class_a_branch", v)
            pending = bc
    raise AssertionError("unreachable")
