"""LP relaxation of Weighted Vertex Cover and what it buys.

The relaxation is solved exactly through the bipartite double cover: every
vertex ``v`` gets a left copy and a right copy, every edge ``uv`` becomes the
two edges ``(u_L, v_R)`` and ``(v_L, u_R)``, and a minimum-weight vertex cover
of that bipartite graph is read off a minimum s-t cut.  Averaging the two
copies, ``x_v = ([v_L chosen] + [v_R chosen]) / 2``, gives an optimal LP
solution with every value in ``{0, 1/2, 1}``.

From that solution come the three-way partition, the kernel on the
half-valued vertices, and the cover ``V_half | V_1`` of weight at most twice
the optimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .buss import KernelOutcome
from .core import CoverSolution, WeightedGraph, WeightLike, as_weight
from .flow import FlowNetwork

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class HalfIntegralSolution:
    values: tuple[Fraction, ...]
    objective: Fraction


@dataclass(frozen=True)
class NttPartition:
    v0: frozenset[int]
    v1: frozenset[int]
    v_half: frozenset[int]


def solve_vc_lp(graph: WeightedGraph) -> HalfIntegralSolution:
    n = graph.n
    if graph.m == 0:
        return HalfIntegralSolution((Fraction(0),) * n, Fraction(0))
    scale = math.lcm(*(w.denominator for w in graph.weights))
    cap = [int(w * scale) for w in graph.weights]
    infinite = 2 * sum(cap) + 1

    # node layout: source, left copies 1..n, right copies n+1..2n, sink
    source, sink = 0, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    for v in range(n):
        net.add_edge(source, 1 + v, cap[v])
    for u, v in graph.edges:
        net.add_edge(1 + u, 1 + n + v, infinite)
        net.add_edge(1 + v, 1 + n + u, infinite)
    for v in range(n):
        net.add_edge(1 + n + v, sink, cap[v])
    cut = net.max_flow(source, sink)
    reach = net.source_side(source)

    # min cover of the bipartite graph: unreachable left copies, reachable right copies
    values = tuple(
        Fraction((1 + v not in reach) + (1 + n + v in reach), 2) for v in range(n))
    objective = Fraction(cut, 2 * scale)
    assert objective == sum((w * x for w, x in zip(graph.weights, values)), Fraction(0))
    return HalfIntegralSolution(values, objective)


def partition(solution: HalfIntegralSolution) -> NttPartition:
    xs = solution.values
    return NttPartition(
        v0=frozenset(v for v, x in enumerate(xs) if x < HALF),
        v1=frozenset(v for v, x in enumerate(xs) if x > HALF),
        v_half=frozenset(v for v, x in enumerate(xs) if x == HALF),
    )


def ntt_kernelize(graph: WeightedGraph, k: WeightLike) -> KernelOutcome:
    """Keep only the half-valued vertices; commit the ones valued 1.

    The LP optimum lower-bounds every cover, so an objective above ``k`` is
    already a NO certificate.
    """
    k = as_weight(k)
    if k < 0:
        raise ValueError("budget must be non-negative")
    solution = solve_vc_lp(graph)
    parts = partition(solution)
    if solution.objective > k:
        return KernelOutcome.no(f"LP lower bound {solution.objective} exceeds k={k}",
                                lp_objective=solution.objective)
    remaining = k - graph.weight_of(parts.v1)
    if remaining < 0:
        return KernelOutcome.no("vertices with LP value 1 exceed the budget",
                                lp_objective=solution.objective)
    return KernelOutcome(
        is_no=False,
        kernel=graph.induced_subgraph(parts.v_half),
        committed=graph.to_labels(parts.v1),
        remaining_budget=remaining,
        extra={"lp_objective": solution.objective,
               "discarded": graph.to_labels(parts.v0)},
    )


def two_approx(graph: WeightedGraph) -> CoverSolution:
    parts = partition(solve_vc_lp(graph))
    return CoverSolution.for_graph(graph, parts.v1 | parts.v_half)


def max_affordable_count(graph: WeightedGraph, k: WeightLike) -> int:
    """Largest ``d`` such that some ``d`` vertex weights sum to at most ``k``.

    Diagnostic only: ``2 * d`` is an alternative bound on the kernel size.
    """
    k = as_weight(k)
    total = Fraction(0)
    d = 0
    for w in sorted(graph.weights):
        total += w
        if total > k:
            break
        d += 1
    return d
