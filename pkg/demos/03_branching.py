"""
Exact search and its node count
===============================

``branch_decide`` branches on a maximum-degree vertex (take it, or take all
its neighbours) and finishes paths and cycles with a linear DP.  The number of
search nodes is compared with ``1.4656 ** (k + l)``, ``l`` being the number of
fractional weights.
"""

from fractions import Fraction

from vcover import BRANCHING_BASE, best_scaling, branch_decide, scale_instance
from vcover.bench import bench_suite, max_ratio, run_bench

suite = bench_suite(20, seed=7)
name, graph, k = suite[0]
result = branch_decide(graph, k)
print(f"{name}: n={graph.n} m={graph.m} k={k} ->", "YES" if result.answer else "NO")
if result.answer:
    print("  cover", sorted(result.witness.vertices), "weight", result.witness.total_weight)
print("  nodes", result.stats.nodes_expanded,
      "bound", round(result.stats.measure_bound(), 1))

rows = run_bench(suite)
print(f"max nodes / {BRANCHING_BASE}^(k+l) over {len(rows)} runs: {max_ratio(rows):.4f}")

# Rescaling the weights changes the measure, never the answer.
weights = sorted(graph.weights)
choice = best_scaling(weights, k)
factor = 1 / weights[choice.index - 1]
scaled, k2 = scale_instance(graph, k, factor)
print(f"scale by {factor}: bound value {choice.bound}, answer unchanged:",
      branch_decide(scaled, k2).answer == result.answer)

# A budget a hair below the optimum flips the answer.
opt = result.witness.total_weight if result.answer else None
if opt:
    print("just below:", branch_decide(graph, opt - Fraction(1, 100)).answer)
