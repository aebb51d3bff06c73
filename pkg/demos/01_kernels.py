"""
Shrinking a weighted vertex cover instance
==========================================

Two ways to cut an instance down before solving it: the Buss rules, which
only look at neighbourhood weights, and the LP-based kernel, which keeps
just the vertices whose LP value is one half.
"""

from fractions import Fraction

from vcover import WeightedGraph, buss_kernelize, ntt_kernelize, solve_vc_lp
from vcover.oracle import brute_min_vc

# A star with a cheap centre glued to a weighted triangle, plus one loner.
graph = WeightedGraph(
    [1, 1, 1, 1, Fraction(3, 2), 2, Fraction(5, 2), 1],
    [(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (4, 6)],
)
k = Fraction(9, 2)
print("optimum:", brute_min_vc(graph).optimum_weight)

# With k=3, vertex 4 is forced first (its neighbours weigh 9/2), then the
# shrinking budget forces more vertices until it goes negative.
outcome = buss_kernelize(graph, Fraction(3))
print("buss, k=3:", outcome.reason, sorted(outcome.extra["committed"]))

# At the optimum no vertex is forced; only the isolated vertex 7 goes.
outcome = buss_kernelize(graph, k)
print(f"buss, k={k}:", "NO" if outcome.is_no else
      f"committed {sorted(outcome.committed)}, kernel on {list(outcome.kernel.labels)}")

# The LP relaxation is half-integral; values are exact fractions.
solution = solve_vc_lp(graph)
print("LP values:", [str(x) for x in solution.values], "objective", solution.objective)

outcome = ntt_kernelize(graph, k)
print("LP kernel keeps", list(outcome.kernel.labels),
      "commits", sorted(outcome.committed),
      "budget left", outcome.remaining_budget)
