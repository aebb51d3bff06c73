from fractions import Fraction as F

import pytest

from vcover.core import RedBlueTree, WeightedGraph, is_vertex_cover
from vcover.oracle import (OracleSizeError, brute_lp_half, brute_min_vc, brute_rb,
                           brute_wrb)

from corpus import graph_corpus

EDGE_13 = WeightedGraph([1, 3], [(0, 1)])
TRIANGLE = WeightedGraph([1, 1, 1], [(0, 1), (1, 2), (0, 2)])
EDGELESS = WeightedGraph([1, 2, 3])
PATH_BRB = RedBlueTree("BRB", [(0, 1), (1, 2)])


def test_min_vc_examples():
    assert brute_min_vc(EDGE_13).optimum_weight == 1
    assert brute_min_vc(EDGE_13).all_optimal_covers == [frozenset({0})]
    tri = brute_min_vc(TRIANGLE)
    assert tri.optimum_weight == 2
    assert sorted(map(sorted, tri.all_optimal_covers)) == [[0, 1], [0, 2], [1, 2]]
    assert brute_min_vc(EDGELESS).all_optimal_covers == [frozenset()]
    assert brute_min_vc(WeightedGraph([])).optimum_weight == 0


def test_lp_half_examples():
    assert brute_lp_half(TRIANGLE) == F(3, 2)
    assert brute_lp_half(EDGE_13) == 1
    assert brute_lp_half(EDGELESS) == 0


def test_rb_examples():
    assert brute_rb(PATH_BRB, 1, 0) is False
    assert brute_rb(PATH_BRB, 1, 1) is True
    assert brute_rb(RedBlueTree("R", []), 0, 0) is True


def test_wrb_examples():
    t = RedBlueTree("RB", [(0, 1)], [2, 3])
    assert brute_wrb(t, 2, 1) is False
    assert brute_wrb(t, 2, 2) is True
    assert brute_wrb(RedBlueTree("B", [], [F(7, 2)]), 0, 0) is True


def test_size_guards(monkeypatch):
    with pytest.raises(OracleSizeError):
        brute_lp_half(WeightedGraph([1] * 13))
    with pytest.raises(OracleSizeError):
        brute_min_vc(WeightedGraph([1] * 21))
    big_tree = RedBlueTree("B" * 17, [(i, i + 1) for i in range(16)])
    with pytest.raises(OracleSizeError):
        brute_rb(big_tree, 5, 5)
    monkeypatch.setenv("VCOVER_ORACLE_MAX_N", "4")
    with pytest.raises(OracleSizeError):
        brute_min_vc(WeightedGraph([1] * 5))


def test_self_consistency():
    for g in graph_corpus(60, 9, seed=11):
        opt = brute_min_vc(g)
        assert opt.all_optimal_covers
        for s in opt.all_optimal_covers:
            assert is_vertex_cover(g, s)
            assert g.weight_of(s) == opt.optimum_weight
        assert brute_lp_half(g) <= opt.optimum_weight
