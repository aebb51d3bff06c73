"""Buss-style kernelization for Weighted Vertex Cover.

Two rules are applied until neither fires:

* an isolated vertex is deleted, budget unchanged;
* a vertex whose neighbourhood weighs more than the budget must be in every
  cover within budget, so it is committed and its weight paid.

Afterwards a YES instance has at most ``(k / min(w))**2`` edges, which gives
the NO certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import WeightedGraph, WeightLike, as_weight


@dataclass(frozen=True)
class KernelOutcome:
    """Result of a kernelization.

    Vertex sets are expressed in the *labels* of the input graph (for a graph
    built directly, labels are its own indices).  ``kernel.labels`` maps the
    kernel's vertices back the same way.
    """

    is_no: bool
    kernel: Optional[WeightedGraph] = None
    committed: frozenset[int] = frozenset()
    remaining_budget: Optional[Fraction] = None
    removed_isolated: frozenset[int] = frozenset()
    reason: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    @classmethod
    def no(cls, reason: str, **extra) -> KernelOutcome:
        return cls(is_no=True, reason=reason, extra=extra)


def remove_isolated(graph: WeightedGraph) -> tuple[WeightedGraph, frozenset[int]]:
    isolated = [v for v in range(graph.n) if graph.degree(v) == 0]
    if not isolated:
        return graph, frozenset()
    keep = [v for v in range(graph.n) if graph.degree(v) > 0]
    return graph.induced_subgraph(keep), graph.to_labels(isolated)


def heavy_neighborhood_rule(graph: WeightedGraph, k: WeightLike
                            ) -> Optional[tuple[int, WeightedGraph, Fraction]]:
    """Commit the lowest-index vertex whose neighbourhood outweighs ``k``.

    Returns ``(v, G - v, k - w(v))`` with ``v`` an index into ``graph``, or
    ``None`` when no vertex qualifies.  The new budget may be negative.
    """
    k = as_weight(k)
    for v in range(graph.n):
        if graph.weight_of(graph.neighbors(v)) > k:
            rest = graph.induced_subgraph(u for u in range(graph.n) if u != v)
            return v, rest, k - graph.weights[v]
    return None


def edge_bound(budget: Fraction, graph: WeightedGraph) -> Optional[Fraction]:
    """``(budget / min(w))**2`` over ``graph``; ``None`` for an empty graph."""
    if graph.n == 0:
        return None
    return (budget / min(graph.weights)) ** 2


def buss_kernelize(graph: WeightedGraph, k: WeightLike) -> KernelOutcome:
    k = as_weight(k)
    if k < 0:
        raise ValueError("budget must be non-negative")
    budget = k
    committed: set[int] = set()
    isolated: set[int] = set()
    current = graph
    while True:
        current, dropped = remove_isolated(current)
        isolated |= dropped
        hit = heavy_neighborhood_rule(current, budget)
        if hit is None:
            break
        v, rest, budget = hit
        committed.add(current.labels[v])
        if budget < 0:
            return KernelOutcome.no("committing a forced vertex exceeds the budget",
                                    committed=frozenset(committed))
        current = rest

    bound = edge_bound(budget, current)
    if bound is not None and current.m > bound:
        return KernelOutcome.no(f"{current.m} edges exceed the kernel bound {bound}",
                                committed=frozenset(committed))
    return KernelOutcome(
        is_no=False,
        kernel=current,
        committed=frozenset(committed),
        remaining_budget=budget,
        removed_isolated=frozenset(isolated),
    )
