"""Red-Blue Vertex Cover on trees.

Unweighted form: find a cover with at most ``K`` vertices of which at most
``K_R`` are red.  Two forcing rules shrink the instance first: a vertex with
more than ``K`` neighbours, or with more than ``K_R`` red neighbours, cannot
be left out (all its neighbours would have to go in).  Committed vertices are
deleted, leaving a forest, which a rooted tree DP then decides.

The DP keeps, for each vertex and each of the states "in the cover" / "out of
the cover", the smallest subtree cover size for every exact red count
``r <= K_R``.  Children are folded in one at a time with a min-plus knapsack
over ``r``.

Weighted form: same tree DP, but each state carries a :class:`ParetoFront`
of achievable ``(total weight, red weight)`` pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

from .branching import DecisionResult
from .core import CoverSolution, RedBlueTree, as_weight

INF = math.inf


@dataclass(frozen=True)
class RbInstance:
    """Unweighted red-blue instance.

    ``committed`` holds vertices already forced into the cover by the
    reductions; they are deleted from the tree and their cost is already
    subtracted from ``K`` and ``K_R``.
    """

    tree: RedBlueTree
    K: int
    K_R: int
    committed: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.K < 0 or self.K_R < 0:
            raise ValueError("budgets must be non-negative")

    def active_neighbors(self, v: int) -> frozenset[int]:
        return self.tree.adjacency[v] - self.committed

    def commit(self, v: int) -> Union[RbInstance, NoInstance]:
        K = self.K - 1
        K_R = self.K_R - (1 if self.tree.is_red(v) else 0)
        if K < 0 or K_R < 0:
            return NoInstance(v)
        return RbInstance(self.tree, K, K_R, self.committed | {v})


@dataclass(frozen=True)
class WrbInstance:
    tree: RedBlueTree
    k: Fraction
    k_R: Fraction

    def __post_init__(self) -> None:
        if self.tree.weights is None:
            raise ValueError("weighted red-blue needs a weighted tree")
        object.__setattr__(self, "k", as_weight(self.k))
        object.__setattr__(self, "k_R", as_weight(self.k_R))
        if self.k < 0 or self.k_R < 0:
            raise ValueError("budgets must be non-negative")


@dataclass(frozen=True)
class Committed:
    vertex: int
    instance: RbInstance


@dataclass(frozen=True)
class NoInstance:
    vertex: int


class NotApplicable:
    def __repr__(self) -> str:
        return "NotApplicable"


NOT_APPLICABLE = NotApplicable()
ReductionResult = Union[Committed, NoInstance, NotApplicable]


def _apply(instance: RbInstance, v: int) -> ReductionResult:
    after = instance.commit(v)
    if isinstance(after, NoInstance):
        return after
    return Committed(v, after)


def rb_reduce_high_degree(instance: RbInstance) -> ReductionResult:
    for v in range(instance.tree.n):
        if v not in instance.committed and len(instance.active_neighbors(v)) > instance.K:
            return _apply(instance, v)
    return NOT_APPLICABLE


def rb_reduce_red_neighbors(instance: RbInstance) -> ReductionResult:
    tree = instance.tree
    for v in range(tree.n):
        if v in instance.committed:
            continue
        reds = sum(1 for u in instance.active_neighbors(v) if tree.is_red(u))
        if reds > instance.K_R:
            return _apply(instance, v)
    return NOT_APPLICABLE


def rb_reduce(instance: RbInstance) -> Union[RbInstance, NoInstance]:
    """Apply both forcing rules until neither fires."""
    while True:
        for rule in (rb_reduce_high_degree, rb_reduce_red_neighbors):
            result = rule(instance)
            if isinstance(result, NoInstance):
                return result
            if isinstance(result, Committed):
                instance = result.instance
                break
        else:
            return instance


def compositions_count(l: int, K_R: int) -> int:
    """Number of ways to write ``K_R`` as an ordered sum of ``l`` non-negative integers."""
    if l < 1:
        raise ValueError("need at least one part")
    if K_R < 0:
        return 0
    return math.comb(K_R + l - 1, l - 1)


# ---------------------------------------------------------------------------
# rooted forest traversal

def _rooted_forest(tree: RedBlueTree, removed: frozenset[int]
                   ) -> tuple[list[int], list[list[int]], list[int]]:
    """Roots, children lists and a post-order over the forest ``tree - removed``.

    Each component is rooted at its lowest-index vertex; children ascend.
    """
    n = tree.n
    children: list[list[int]] = [[] for _ in range(n)]
    roots: list[int] = []
    order: list[int] = []
    seen = set(removed)
    for root in range(n):
        if root in seen:
            continue
        roots.append(root)
        seen.add(root)
        stack = [root]
        pre: list[int] = []
        while stack:
            x = stack.pop()
            pre.append(x)
            for y in sorted(tree.adjacency[x]):
                if y not in seen:
                    seen.add(y)
                    children[x].append(y)
                    stack.append(y)
        order.extend(reversed(pre))
    return roots, children, order


# ---------------------------------------------------------------------------
# unweighted DP

@dataclass
class RbDpStats:
    cells: int = 0
    cell_bound: int = 0


def _minplus(a: list[float], b: list[float]) -> tuple[list[float], list[int]]:
    """Truncated min-plus convolution plus the split chosen for each entry."""
    size = len(a)
    out = [INF] * size
    split = [-1] * size
    for i, x in enumerate(a):
        if x == INF:
            continue
        for j in range(size - i):
            y = b[j]
            if x + y < out[i + j]:
                out[i + j] = x + y
                split[i + j] = i
    return out, split


def _rb_dp(tree: RedBlueTree, removed: frozenset[int], K_R: int, stats: RbDpStats):
    """Tables ``table[v][state][r]`` for the forest ``tree - removed``.

    ``state`` 1 means ``v`` is in the cover.  Also returns what is needed to
    rebuild a witness: the per-state fold history of every vertex.
    """
    width = K_R + 1
    roots, children, order = _rooted_forest(tree, removed)
    table: dict[int, tuple[list[float], list[float]]] = {}
    # history[v][state] = list of (prefix_before, split, child_pick) per child
    history: dict[int, tuple[list, list]] = {}
    computed: set[tuple[int, int]] = set()

    for v in order:
        red = 1 if tree.is_red(v) else 0
        out = [INF] * width
        out[0] = 0
        take = [INF] * width
        if red < width:
            take[red] = 1
        hist_out: list = []
        hist_take: list = []
        for c in children[v]:
            c_out, c_take = table[c]
            # parent out: child must be in
            new_out, split = _minplus(out, c_take)
            hist_out.append((split, None))
            out = new_out
            # parent in: child free, take the cheaper state per red count
            best = [min(x, y) for x, y in zip(c_out, c_take)]
            pick = [1 if c_take[r] <= c_out[r] else 0 for r in range(width)]
            new_take, split = _minplus(take, best)
            hist_take.append((split, pick))
            take = new_take
        for state in (0, 1):
            assert (v, state) not in computed
            computed.add((v, state))
        stats.cells += 2 * width
        table[v] = (out, take)
        history[v] = (hist_out, hist_take)
    return roots, children, table, history


def _rebuild(v: int, state: int, r: int, children, table, history, tree, acc: list[int]) -> None:
    stack = [(v, state, r)]
    while stack:
        v, state, r = stack.pop()
        if state:
            acc.append(v)
        hist = history[v][state]
        kids = children[v]
        for c, (split, pick) in zip(reversed(kids), reversed(hist)):
            prev_r = split[r]
            child_r = r - prev_r
            child_state = 1 if pick is None else pick[child_r]
            stack.append((c, child_state, child_r))
            r = prev_r


def rb_decide(instance: RbInstance, use_reductions: bool = True) -> DecisionResult:
    tree = instance.tree
    stats = RbDpStats()
    if use_reductions:
        reduced = rb_reduce(instance)
        if isinstance(reduced, NoInstance):
            return DecisionResult(False, None, stats)
        instance = reduced
    K, K_R = instance.K, instance.K_R
    active = tree.n - len(instance.committed)
    stats.cell_bound = active * 2 * (K_R + 1)

    roots, children, table, history = _rb_dp(tree, instance.committed, K_R, stats)

    # fold the components together like children of a virtual root
    width = K_R + 1
    total = [INF] * width
    total[0] = 0
    steps = []
    for root in roots:
        c_out, c_take = table[root]
        best = [min(x, y) for x, y in zip(c_out, c_take)]
        pick = [1 if c_take[r] <= c_out[r] else 0 for r in range(width)]
        total, split = _minplus(total, best)
        steps.append((root, split, pick))

    r_best = min(range(width), key=lambda r: (total[r], r))
    if total[r_best] > K:
        return DecisionResult(False, None, stats)
    cover: list[int] = list(instance.committed)
    r = r_best
    for root, split, pick in reversed(steps):
        prev_r = split[r]
        child_r = r - prev_r
        _rebuild(root, pick[child_r], child_r, children, table, history, tree, cover)
        r = prev_r
    return DecisionResult(True, CoverSolution.for_tree(tree, cover), stats)


# ---------------------------------------------------------------------------
# weighted DP

@dataclass(frozen=True)
class ParetoFront:
    """Mutually non-dominated ``(total, red, cover)`` points.

    Points are sorted by total weight ascending with red weight strictly
    descending.  Points outside the budgets are dropped as they can never
    become feasible again.
    """

    points: tuple[tuple[Fraction, Fraction, frozenset[int]], ...]
    k: Optional[Fraction] = field(default=None, compare=False)
    k_R: Optional[Fraction] = field(default=None, compare=False)

    @classmethod
    def build(cls, points: Iterable[tuple[Fraction, Fraction, frozenset[int]]],
              k: Optional[Fraction] = None, k_R: Optional[Fraction] = None) -> ParetoFront:
        kept = []
        best_red = None
        for total, red, cover in sorted(points, key=lambda p: (p[0], p[1], sorted(p[2]))):
            if (k is not None and total > k) or (k_R is not None and red > k_R):
                continue
            if best_red is None or red < best_red:
                kept.append((total, red, cover))
                best_red = red
        front = cls(tuple(kept), k, k_R)
        if __debug__:
            front.check()
        return front

    def check(self) -> None:
        for (t1, r1, _), (t2, r2, _) in zip(self.points, self.points[1:]):
            if not (t1 < t2 and r1 > r2):
                raise AssertionError(f"dominated point in front: {(t1, r1)} vs {(t2, r2)}")

    def merge(self, other: ParetoFront) -> ParetoFront:
        """Pointwise sums of one point from each front (disjoint subtrees)."""
        return ParetoFront.build(
            ((t1 + t2, r1 + r2, c1 | c2)
             for t1, r1, c1 in self.points for t2, r2, c2 in other.points),
            self.k, self.k_R)

    def union(self, other: ParetoFront) -> ParetoFront:
        return ParetoFront.build(self.points + other.points, self.k, self.k_R)

    def __len__(self) -> int:
        return len(self.points)


@dataclass
class WrbStats:
    merges: int = 0
    max_front: int = 0


def wrb_decide(instance: WrbInstance) -> DecisionResult:
    tree, k, k_R = instance.tree, instance.k, instance.k_R
    w = tree.weights
    stats = WrbStats()
    roots, children, order = _rooted_forest(tree, frozenset())
    fronts: dict[int, tuple[ParetoFront, ParetoFront]] = {}
    zero = Fraction(0)
    for v in order:
        red_w = w[v] if tree.is_red(v) else zero
        out = ParetoFront.build([(zero, zero, frozenset())], k, k_R)
        take = ParetoFront.build([(w[v], red_w, frozenset([v]))], k, k_R)
        for c in children[v]:
            c_out, c_take = fronts.pop(c)
            out = out.merge(c_take)
            take = take.merge(c_out.union(c_take))
            stats.merges += 2
            stats.max_front = max(stats.max_front, len(out), len(take))
        fronts[v] = (out, take)
    out, take = fronts[roots[0]]
    final = out.union(take)
    if not final.points:
        return DecisionResult(False, None, stats)
    cover = final.points[0][2]
    return DecisionResult(True, CoverSolution.for_tree(tree, cover), stats)
