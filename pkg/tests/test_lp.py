import itertools
from fractions import Fraction as F

import pytest

from vcover.core import WeightedGraph, is_vertex_cover, min_weight
from vcover.lp import (max_affordable_count, ntt_kernelize, partition, solve_vc_lp,
                       two_approx)
from vcover.oracle import brute_lp_half, brute_min_vc

from corpus import graph_corpus

EDGE_11 = WeightedGraph([1, 1], [(0, 1)])
EDGE_13 = WeightedGraph([1, 3], [(0, 1)])
TRIANGLE = WeightedGraph([1, 1, 1], [(0, 1), (1, 2), (0, 2)])
EDGELESS = WeightedGraph([1, 2])
HALF = F(1, 2)


def half_grid_min(g):
    """Independent check by plain itertools enumeration of {0, 1/2, 1}^n."""
    best = None
    for xs in itertools.product((0, HALF, 1), repeat=g.n):
        if all(xs[u] + xs[v] >= 1 for u, v in g.edges):
            val = sum(w * x for w, x in zip(g.weights, xs))
            best = val if best is None or val < best else best
    return best


def test_single_edge_unit():
    sol = solve_vc_lp(EDGE_11)
    assert sol.values == (HALF, HALF) and sol.objective == 1
    assert half_grid_min(EDGE_11) == 1


def test_single_edge_unbalanced():
    sol = solve_vc_lp(EDGE_13)
    assert sol.values == (1, 0) and sol.objective == 1
    assert half_grid_min(EDGE_13) == 1


def test_triangle():
    sol = solve_vc_lp(TRIANGLE)
    assert sol.values == (HALF,) * 3 and sol.objective == F(3, 2)
    assert half_grid_min(TRIANGLE) == F(3, 2)


def test_edgeless():
    sol = solve_vc_lp(EDGELESS)
    assert sol.values == (0, 0) and sol.objective == 0


def test_partition_examples():
    p = partition(solve_vc_lp(EDGE_11))
    assert p.v_half == {0, 1} and not p.v0 and not p.v1
    p = partition(solve_vc_lp(EDGE_13))
    assert p.v1 == {0} and p.v0 == {1}
    assert partition(solve_vc_lp(EDGELESS)).v0 == {0, 1}


def test_ntt_kernel_examples():
    out = ntt_kernelize(EDGE_13, 1)
    assert not out.is_no and out.committed == {0} and out.kernel.n == 0
    assert out.remaining_budget == 0
    assert brute_min_vc(TRIANGLE).optimum_weight == 2
    assert ntt_kernelize(TRIANGLE, 1).is_no
    out = ntt_kernelize(EDGELESS, 0)
    assert not out.is_no and out.kernel.n == 0 and out.committed == set()
    with pytest.raises(ValueError):
        ntt_kernelize(EDGE_13, -1)


def test_two_approx_examples():
    a = two_approx(TRIANGLE)
    assert a.vertices == {0, 1, 2} and a.total_weight == 3 <= 2 * 2
    a = two_approx(EDGE_13)
    assert a.vertices == {0} and a.total_weight == 1
    assert two_approx(EDGELESS).vertices == set()


def test_half_integral_feasible_optimal_on_corpus():
    for g in graph_corpus(80, 8, seed=31):
        sol = solve_vc_lp(g)
        assert all(x in (0, HALF, 1) for x in sol.values)
        assert all(sol.values[u] + sol.values[v] >= 1 for u, v in g.edges)
        assert sol.objective == sum(w * x for w, x in zip(g.weights, sol.values))
        assert sol.objective == half_grid_min(g) == brute_lp_half(g)


def test_ntt_kernel_safety_on_corpus():
    for g in graph_corpus(80, 9, seed=32):
        opt = brute_min_vc(g).optimum_weight
        for k in (opt, opt - HALF, opt + 1):
            if k < 0:
                continue
            out = ntt_kernelize(g, k)
            if out.is_no:
                assert opt > k
                continue
            kopt = brute_min_vc(out.kernel).optimum_weight
            assert (kopt <= out.remaining_budget) == (opt <= k)
            if out.kernel.n:
                assert out.kernel.n <= 2 * out.remaining_budget / min_weight(out.kernel)


def test_max_affordable_count():
    g = WeightedGraph([3, 1, 2, 5])
    assert max_affordable_count(g, 3) == 2
    assert max_affordable_count(g, F(1, 2)) == 0
    assert max_affordable_count(g, 11) == 4


def test_approx_on_corpus():
    for g in graph_corpus(60, 9, seed=33):
        a = two_approx(g)
        assert is_vertex_cover(g, a.vertices)
        assert a.total_weight <= 2 * brute_min_vc(g).optimum_weight
