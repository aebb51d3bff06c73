"""
Rounding the LP: a cover within a factor two
============================================

Every vertex with LP value at least one half goes into the cover.  On odd
cycles with unit weights the LP puts 1/2 everywhere, which is where the
factor two is nearly reached.
"""

from vcover import WeightedGraph, is_vertex_cover, two_approx
from vcover.oracle import brute_min_vc


def cycle(n):
    return WeightedGraph([1] * n, [(i, (i + 1) % n) for i in range(n)])


for n in (3, 5, 7, 9, 11):
    g = cycle(n)
    approx = two_approx(g)
    opt = brute_min_vc(g).optimum_weight
    assert is_vertex_cover(g, approx.vertices)
    print(f"C_{n}: approx {approx.total_weight}, optimum {opt}, "
          f"ratio {float(approx.total_weight / opt):.3f}")

# A single unit edge is the tight case: both endpoints get 1/2.
edge = WeightedGraph([1, 1], [(0, 1)])
print("K_2 ratio:", two_approx(edge).total_weight / brute_min_vc(edge).optimum_weight)
