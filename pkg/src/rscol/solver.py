"""Desk-scale exact decision/optimization solvers for rs, star and ordered colourings.

These are the ground truth the fast testers are measured against; they favour
correctness and strong propagation over raw speed.  Intended scale: up to
roughly 40 vertices for 3-rs decisions, ~10 vertices for the chromatic numbers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

from .colouring import Colouring, PartialColouring, is_ordered, is_rs, is_star
from .graph import Graph


class BudgetExceededError(RuntimeError):
    """A solve ran out of its node or wall-clock budget."""


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int = 10_000_000
    time_limit: float = 120.0  # seconds

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_limit <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = SolveBudget()


class SolveStatus(Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass
class SolveResult:
    status: SolveStatus
    witness: Colouring | None = None
    nodes: int = 0


class _BudgetHit(Exception):
    pass


class _Search:
    """Backtracking over vertex colour assignments with a pluggable feasibility rule.

    Vertex selection is dynamic: most coloured neighbours first, then highest
    degree, then lowest index.  The rs rule is checked incrementally via
    per-vertex counts of neighbours in each colour class.
    """

    def __init__(self, g: Graph, k: int, budget: SolveBudget):
        self.g = g
        self.k = k
        self.budget = budget
        self.adj = [list(g.neighbours(v)) for v in range(g.n)]
        self.colour = [-1] * g.n
        # cnt[v][c] = number of neighbours of v currently coloured c
        self.cnt = [[0] * k for _ in range(g.n)]
        self.satur = [0] * g.n  # number of coloured neighbours
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit

    def place(self, v: int, col: int) -> None:
        self.colour[v] = col
        for u in self.adj[v]:
            self.cnt[u][col] += 1
            self.satur[u] += 1
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _BudgetHit
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise _BudgetHit

    def unplace(self, v: int, col: int) -> None:
        self.colour[v] = -1
        for u in self.adj[v]:
            self.cnt[u][col] -= 1
            self.satur[u] -= 1

    def next_vertex(self) -> int:
        best, key = -1, (-1, -1, 0)
        for v in range(self.g.n):
            if self.colour[v] == -1:
                cand = (self.satur[v], len(self.adj[v]), -v)
                if cand > key:
                    best, key = v, cand
        return best

    def rs_feasible(self, v: int, col: int) -> bool:
        if col == self.k - 1 and len(self.adj[v]) >= self.k:
            return False  # top colour forces at most one neighbour per lower class
        cnt_v = self.cnt[v]
        if cnt_v[col]:
            return False  # monochromatic edge
        for i in range(col):
            if cnt_v[i] > 1:
                return False  # v would have two neighbours in a lower class
        colour = self.colour
        for u in self.adj[v]:
            cu = colour[u]
            if cu > col and self.cnt[u][col]:
                return False  # u would gain a second neighbour coloured col
        return True


def _as_partial(g: Graph, k: int, pre: PartialColouring | None) -> list[tuple[int, int]]:
    if pre is None:
        return []
    if len(pre.colours) != g.n:
        raise ValueError(f"precolouring covers {len(pre.colours)} vertices, graph has {g.n}")
    if pre.k > k:
        raise ValueError(f"precolouring budget {pre.k} exceeds k={k}")
    return [(v, c) for v, c in enumerate(pre.colours) if c is not None]


def _run_rs(
    g: Graph,
    k: int,
    pre: PartialColouring | None,
    budget: SolveBudget,
    on_witness: Callable[[Colouring], bool],
) -> SolveResult:
    """Shared engine: on_witness returns True to stop at this witness."""
    s = _Search(g, k, budget)
    try:
        for v, c in _as_partial(g, k, pre):
            if not s.rs_feasible(v, c):
                return SolveResult(SolveStatus.NO, nodes=s.nodes)
            s.place(v, c)
        remaining = s.colour.count(-1)

        def search(depth: int) -> bool:
            if depth == remaining:
                witness = Colouring(tuple(s.colour), k)
                return on_witness(witness)
            v = s.next_vertex()
            for col in range(k):
                if s.rs_feasible(v, col):
                    s.place(v, col)
                    if search(depth + 1):
                        return True
                    s.unplace(v, col)
            return False

        found = search(0)
    except _BudgetHit:
        return SolveResult(SolveStatus.BUDGET_EXCEEDED, nodes=s.nodes)
    if found:
        witness = Colouring(tuple(s.colour), k)
        assert is_rs(g, witness)
        assert pre is None or pre.is_extended_by(witness)
        return SolveResult(SolveStatus.YES, witness=witness, nodes=s.nodes)
    return SolveResult(SolveStatus.NO, nodes=s.nodes)


def decide_k_rs(
    g: Graph,
    k: int,
    pre: PartialColouring | None = None,
    budget: SolveBudget = DEFAULT_BUDGET,
) -> SolveResult:
    """Is there a k-rs colouring of g extending `pre`?

    NO means exhaustive refutation; budget exhaustion is reported distinctly.
    """
    if k < 1:
        return SolveResult(SolveStatus.NO if g.n else SolveStatus.YES)
    return _run_rs(g, k, pre, budget, on_witness=lambda w: True)


def enumerate_k_rs(
    g: Graph,
    k: int,
    pre: PartialColouring | None = None,
    budget: SolveBudget = DEFAULT_BUDGET,
) -> Iterator[Colouring]:
    """Yield every k-rs colouring of g extending `pre` (desk scale only).

    Raises BudgetExceededError if the exhaustive walk runs out of budget.
    """
    found: list[Colouring] = []

    def collect(w: Colouring) -> bool:
        found.append(w)
        return False  # keep searching

    result = _run_rs(g, k, pre, budget, on_witness=collect)
    if result.status is SolveStatus.BUDGET_EXCEEDED:
        raise BudgetExceededError(f"enumeration exceeded budget after {result.nodes} nodes")
    yield from found


def _chromatic(
    g: Graph,
    decide: Callable[[int], SolveResult],
    verifier: Callable[[Graph, Colouring], bool],
) -> int:
    for k in range(1, g.n + 1):
        result = decide(k)
        if result.status is SolveStatus.BUDGET_EXCEEDED:
            raise BudgetExceededError(f"budget exhausted while deciding k={k}")
        if result.status is SolveStatus.YES:
            assert result.witness is not None and verifier(g, result.witness)
            return k
    return max(g.n, 1) if g.n else 0


def rs_chromatic_number(g: Graph, budget: SolveBudget = DEFAULT_BUDGET) -> int:
    """Least k such that g is k-rs colourable (k = n always works)."""
    if g.n == 0:
        return 0
    return _chromatic(g, lambda k: decide_k_rs(g, k, budget=budget), is_rs)


# -- star colouring ------------------------------------------------------------


def decide_k_star(
    g: Graph,
    k: int,
    budget: SolveBudget = DEFAULT_BUDGET,
    symmetry_breaking: bool = True,
) -> SolveResult:
    """Is there a k-star colouring of g?

    Colour classes are unordered for star colourings, so colour-symmetry
    breaking (new vertex limited to used colours + 1) is sound here; rs and
    ordered colourings attach meaning to colour values and get none.
    """
    if k < 1:
        return SolveResult(SolveStatus.NO if g.n else SolveStatus.YES)
    s = _Search(g, k, budget)
    colour, adj = s.colour, s.adj

    def creates_bicoloured_p4(v: int, col: int) -> bool:
        # all 4-vertex paths through v using only coloured vertices
        for a in adj[v]:
            ca = colour[a]
            if ca == -1:
                continue
            for b in adj[a]:
                cb = colour[b]
                if b == v or cb == -1:
                    continue
                for d in adj[b]:
                    cd = colour[d]
                    if d == a or d == v or cd == -1:
                        continue
                    # path v,a,b,d
                    if cb == col and ca == cd and ca != col:
                        return True
                # path d,v,a,b with v internal: handled when d was placed or below
            for b in adj[v]:
                cb = colour[b]
                if b == a or cb == -1:
                    continue
                if ca != cb:
                    continue
                # path a,v,b + one more step from b
                for d in adj[b]:
                    cd = colour[d]
                    if d == v or d == a or cd == -1:
                        continue
                    if cd == col and ca != col:
                        return True
        return False

    def feasible(v: int, col: int) -> bool:
        if s.cnt[v][col]:
            return False
        return not creates_bicoloured_p4(v, col)

    try:
        used = 0

        def search(depth: int, used: int) -> bool:
            if depth == g.n:
                return True
            v = s.next_vertex()
            limit = min(k, used + 1) if symmetry_breaking else k
            for col in range(limit):
                if feasible(v, col):
                    s.place(v, col)
                    if search(depth + 1, max(used, col + 1)):
                        return True
                    s.unplace(v, col)
            return False

        found = search(0, used)
    except _BudgetHit:
        return SolveResult(SolveStatus.BUDGET_EXCEEDED, nodes=s.nodes)
    if found:
        witness = Colouring(tuple(colour), k)
        assert is_star(g, witness)
        return SolveResult(SolveStatus.YES, witness=witness, nodes=s.nodes)
    return SolveResult(SolveStatus.NO, nodes=s.nodes)


def star_chromatic_number(g: Graph, budget: SolveBudget = DEFAULT_BUDGET) -> int:
    if g.n == 0:
        return 0
    return _chromatic(g, lambda k: decide_k_star(g, k, budget=budget), is_star)


# -- ordered colouring ----------------------------------------------------------


def decide_k_ordered(g: Graph, k: int, budget: SolveBudget = DEFAULT_BUDGET) -> SolveResult:
    """Is there a k-ordered colouring (vertex ranking with k ranks)?"""
    if k < 1:
        return SolveResult(SolveStatus.NO if g.n else SolveStatus.YES)
    s = _Search(g, k, budget)
    colour, adj = s.colour, s.adj

    def feasible(v: int, col: int) -> bool:
        if s.cnt[v][col]:
            return False
        # Assigning col to v may close a low path between two vertices of some
        # colour q >= col; such a violation never heals, so prune it now.
        colour[v] = col
        try:
            for q in range(col, k):
                # component of v within assigned vertices of colour <= q
                stack, seen = [v], {v}
                hits = 1 if col == q else 0
                while stack:
                    u = stack.pop()
                    for w in adj[u]:
                        cw = colour[w]
                        if w not in seen and 0 <= cw <= q:
                            seen.add(w)
                            if cw == q:
                                hits += 1
                                if hits > 1:
                                    return False
                            stack.append(w)
        finally:
            colour[v] = -1
        return True

    try:

        def search(depth: int) -> bool:
            if depth == g.n:
                return True
            v = s.next_vertex()
            for col in range(k):
                if feasible(v, col):
                    s.place(v, col)
                    if search(depth + 1):
                        return True
                    s.unplace(v, col)
            return False

        found = search(0)
    except _BudgetHit:
        return SolveResult(SolveStatus.BUDGET_EXCEEDED, nodes=s.nodes)
    if found:
        witness = Colouring(tuple(colour), k)
        assert is_ordered(g, witness)
        return SolveResult(SolveStatus.YES, witness=witness, nodes=s.nodes)
    return SolveResult(SolveStatus.NO, nodes=s.nodes)


def ordered_chromatic_number(g: Graph, budget: SolveBudget = DEFAULT_BUDGET) -> int:
    if g.n == 0:
        return 0
    return _chromatic(g, lambda k: decide_k_ordered(g, k, budget=budget), is_ordered)


# -- maximum independent set ------------------------------------------------------


def max_independent_set(g: Graph, budget: SolveBudget = DEFAULT_BUDGET) -> list[int]:
    """A maximum independent set, by branch and bound."""
    adj = [set(g.neighbours(v)) for v in range(g.n)]
    best: list[int] = []
    nodes = 0
    deadline = time.monotonic() + budget.time_limit

    def grow(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget.max_nodes or (nodes % 4096 == 0 and time.monotonic() > deadline):
            raise _BudgetHit
        if len(chosen) + len(candidates) <= len(best):
            return
        if not candidates:
            best = list(chosen)
            return
        v = max(candidates, key=lambda u: sum(1 for w in candidates if w in adj[u]))
        rest = [u for u in candidates if u != v]
        grow(chosen + [v], [u for u in rest if u not in adj[v]])
        grow(chosen, rest)

    try:
        grow([], list(range(g.n)))
    except _BudgetHit:
        raise BudgetExceededError(f"MIS search exceeded budget after {nodes} nodes") from None
    return sorted(best)
