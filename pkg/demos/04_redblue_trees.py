"""
Red-blue vertex cover on trees
==============================

A second budget caps how many red vertices (or how much red weight) the
cover may use.  The unweighted version is a knapsack over red counts on the
rooted tree; the weighted version keeps Pareto fronts of
``(total weight, red weight)``.
"""

from fractions import Fraction

from vcover import RbInstance, RedBlueTree, WrbInstance, rb_decide, wrb_decide
from vcover.generate import GeneratorConfig, generate_instance
from vcover.oracle import brute_rb

#      0(B)
#     /    \
#   1(R)   2(R)
#   / \      \
# 3(B) 4(B)  5(B)
tree = RedBlueTree("BRRBBB", [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
for K, K_R in [(2, 2), (2, 1), (3, 1), (4, 0)]:
    r = rb_decide(RbInstance(tree, K, K_R))
    witness = sorted(r.witness.vertices) if r.answer else "-"
    print(f"K={K} K_R={K_R}: {'YES' if r.answer else 'NO '} {witness}"
          f"  (oracle {brute_rb(tree, K, K_R)}, cells {r.stats.cells})")

weighted = generate_instance(GeneratorConfig(
    seed=5, n=40, model="tree", fractional_fraction=0.5, red_fraction=0.4))
total = sum(weighted.weights)
for share in (Fraction(1, 3), Fraction(1, 2)):
    r = wrb_decide(WrbInstance(weighted, total * share, total * share / 4))
    print(f"n=40, k={float(total * share):.2f}: {'YES' if r.answer else 'NO'},"
          f" largest front {r.stats.max_front}")
