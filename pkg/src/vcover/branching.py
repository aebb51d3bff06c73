"""Exact branching solver for Weighted Vertex Cover.

At each search node isolated vertices are dropped.  If no vertex has degree
three or more the remainder is a disjoint union of paths and cycles and is
solved exactly by :func:`solve_degree_le2`.  Otherwise the solver branches on
the lowest-index vertex of maximum degree: either it joins the cover, or all
of its neighbours do.

The analysis measure is ``k + l`` with ``l`` the number of fractional-weight
vertices; every branch lowers it by at least one on one side and three on the
other, giving the search-tree bound ``BRANCHING_BASE ** (k + l)``.  The solver
itself spends real weights; the measure only appears in :class:`BranchStats`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .core import CoverSolution, WeightedGraph, WeightLike, as_weight

#: Real root of x**3 = x**2 + 1, the branching number of T(k) = T(k-1) + T(k-3).
BRANCHING_BASE = 1.4655712319


@dataclass
class BranchStats:
    nodes_expanded: int = 0
    initial_k: Fraction = Fraction(0)
    initial_l: int = 0
    initial_l_below_one: int = 0

    def measure_bound(self, below_one: bool = False) -> float:
        l = self.initial_l_below_one if below_one else self.initial_l
        return BRANCHING_BASE ** (float(self.initial_k) + l)


@dataclass(frozen=True)
class DecisionResult:
    answer: bool
    witness: Optional[CoverSolution]
    stats: object = None


def fractional_count(graph: WeightedGraph, below_one: bool = False) -> int:
    """Number of vertices with non-integer weight.

    With ``below_one`` only fractional weights smaller than 1 are counted.
    """
    return sum(1 for w in graph.weights
               if w.denominator != 1 and (not below_one or w < 1))


# ---------------------------------------------------------------------------
# max degree <= 2

def _path_cover(weights: Sequence[Fraction], force_first: bool = False,
                force_last: bool = False) -> tuple[Fraction, list[int]]:
    """Min-weight cover of a path given by its weights, as positions."""
    # cost[i][s]: cheapest cover of positions 0..i with i chosen iff s == 1;
    # None marks an infeasible state.  pred[i][s] is the state taken at i-1.
    cost: list[list[Optional[Fraction]]] = []
    pred: list[list[int]] = []
    for i, w in enumerate(weights):
        if i == 0:
            out: Optional[Fraction] = None if force_first else Fraction(0)
            cost.append([out, w])
            pred.append([0, 0])
            continue
        prev_out, prev_in = cost[-1]
        take_from = 0 if prev_out is not None and (prev_in is None or prev_out <= prev_in) else 1
        cost.append([prev_in, cost[-1][take_from] + w])
        pred.append([1, take_from])
    if force_last:
        cost[-1][0] = None
    out, take = cost[-1]
    s = 0 if out is not None and (take is None or out <= take) else 1
    total = cost[-1][s]
    chosen = []
    for i in range(len(weights) - 1, -1, -1):
        if s:
            chosen.append(i)
        s = pred[i][s]
    return total, chosen[::-1]


def solve_degree_le2(graph: WeightedGraph) -> CoverSolution:
    """Minimum-weight cover of a graph whose vertices all have degree <= 2."""
    adj = graph.adjacency
    for v in range(graph.n):
        if len(adj[v]) > 2:
            raise ValueError(f"vertex {v} has degree {len(adj[v])} > 2")
    w = graph.weights
    seen: set[int] = set()
    cover: list[int] = []
    # paths first (start at endpoints), then what remains is cycles
    for start in range(graph.n):
        if start in seen or len(adj[start]) != 1:
            continue
        order = _walk(adj, start)
        seen.update(order)
        _, picks = _path_cover([w[v] for v in order])
        cover.extend(order[i] for i in picks)
    for start in range(graph.n):
        if start in seen or not adj[start]:
            continue
        order = _walk(adj, start)
        seen.update(order)
        cover.extend(_cycle_cover(order, w))
    return CoverSolution.for_graph(graph, cover)


def _walk(adj, start: int) -> list[int]:
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [y for y in sorted(adj[cur]) if y != prev and y != start]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _cycle_cover(order: list[int], w) -> list[int]:
    first, rest = order[0], order[1:]
    weights = [w[v] for v in rest]
    # first vertex in the cover: the rest is a free path
    with_cost, with_picks = _path_cover(weights)
    with_cost += w[first]
    # first vertex out: both of its cycle neighbours are forced in
    without_cost, without_picks = _path_cover(weights, force_first=True, force_last=True)
    if with_cost <= without_cost:
        return [first] + [rest[i] for i in with_picks]
    return [rest[i] for i in without_picks]


# ---------------------------------------------------------------------------
# branching

def branch_decide(graph: WeightedGraph, k: WeightLike) -> DecisionResult:
    """Is there a vertex cover of weight at most ``k``?  Witness on YES."""
    k = as_weight(k)
    if k < 0:
        raise ValueError("budget must be non-negative")
    stats = BranchStats(initial_k=k, initial_l=fractional_count(graph),
                        initial_l_below_one=fractional_count(graph, below_one=True))
    # labels only map induced subgraphs back; search over plain indices
    if graph.labels != tuple(range(graph.n)):
        graph = WeightedGraph(graph.weights, graph.edges, check=False)
    adj = graph.adjacency
    w = graph.weights

    def search(alive: frozenset[int], budget: Fraction) -> Optional[frozenset[int]]:
        stats.nodes_expanded += 1
        alive = frozenset(v for v in alive if adj[v] & alive)
        if not alive:
            return frozenset()
        degree = {v: len(adj[v] & alive) for v in alive}
        top = max(degree.values())
        if top <= 2:
            sub = graph.induced_subgraph(alive)
            sol = solve_degree_le2(sub)
            if sol.total_weight > budget:
                return None
            return frozenset(sub.labels[i] for i in sol.vertices)
        v = min(u for u in alive if degree[u] == top)
        if w[v] <= budget:
            found = search(alive - {v}, budget - w[v])
            if found is not None:
                return found | {v}
        nbrs = adj[v] & alive
        cost = sum((w[u] for u in nbrs), Fraction(0))
        if cost <= budget:
            found = search(alive - nbrs, budget - cost)
            if found is not None:
                return found | nbrs
        return None

    found = search(frozenset(range(graph.n)), k)
    if found is None:
        return DecisionResult(False, None, stats)
    return DecisionResult(True, CoverSolution.for_graph(graph, found), stats)


class ScalingChoice(NamedTuple):
    index: int
    bound: Fraction
    fallback: bool


def best_scaling(weights: Sequence[WeightLike], k: WeightLike) -> ScalingChoice:
    """Pick the weight to scale by so that ``k / w_i + (i - 1)`` is smallest.

    ``weights`` must be ascending; ``index`` is 1-based into that list.  Only
    weights of at least 1 are safe candidates; when none exists the smallest
    weight is used and ``fallback`` is set.
    """
    ws = [as_weight(x) for x in weights]
    if not ws:
        raise ValueError("best_scaling needs at least one weight")
    if any(a > b for a, b in zip(ws, ws[1:])):
        raise ValueError("weights must be sorted ascending")
    k = as_weight(k)
    candidates = [i for i, x in enumerate(ws, start=1) if x >= 1]
    if not candidates:
        return ScalingChoice(1, k / ws[0], True)
    best = min(candidates, key=lambda i: (k / ws[i - 1] + (i - 1), i))
    return ScalingChoice(best, k / ws[best - 1] + (best - 1), False)
