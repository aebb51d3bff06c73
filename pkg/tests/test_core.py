from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcover.core import (CoverSolution, InvalidGraphError, RedBlueTree, WeightedGraph,
                         is_vertex_cover, min_weight, scale_instance, validate)

from strategies import graphs, weights


def path(ws):
    return WeightedGraph(ws, [(i, i + 1) for i in range(len(ws) - 1)])


TRIANGLE = WeightedGraph([1, 1, 1], [(0, 1), (1, 2), (0, 2)])


class TestValidate:
    def test_single_edge_ok(self):
        validate(WeightedGraph([1, 1], [(0, 1)], check=False))

    def test_self_loop(self):
        with pytest.raises(InvalidGraphError, match="self-loop"):
            validate(WeightedGraph([1], [(0, 0)], check=False))

    def test_zero_weight(self):
        with pytest.raises(InvalidGraphError, match="non-positive"):
            validate(WeightedGraph([0, 1], [(0, 1)], check=False))

    def test_duplicate_edge(self):
        with pytest.raises(InvalidGraphError, match="duplicate"):
            validate(WeightedGraph([1, 1], [(0, 1), (1, 0)], check=False))

    def test_out_of_range(self):
        with pytest.raises(InvalidGraphError, match="outside"):
            WeightedGraph([1, 1], [(0, 2)])

    def test_constructor_validates(self):
        with pytest.raises(InvalidGraphError):
            WeightedGraph([1], [(0, 0)])

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            WeightedGraph([0.5], [])


@pytest.mark.parametrize("ws, expected", [
    ([1, F(3, 2), 2], F(1)),
    ([F(1, 3), F(1, 2)], F(1, 3)),
    ([5], F(5)),
])
def test_min_weight(ws, expected):
    assert min_weight(WeightedGraph(ws)) == expected


def test_min_weight_empty():
    with pytest.raises(ValueError):
        min_weight(WeightedGraph([]))


def test_is_vertex_cover_examples():
    assert is_vertex_cover(TRIANGLE, {0, 1})
    p = path([1, 1, 1])
    assert is_vertex_cover(p, {0, 2})
    assert not is_vertex_cover(p, {0})
    with pytest.raises(ValueError):
        is_vertex_cover(p, {3})


def test_adjacency_symmetric():
    g = WeightedGraph([1] * 4, [(0, 1), (2, 1), (3, 0)])
    for u in range(4):
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


class TestScale:
    def test_halving(self):
        g, k = scale_instance(WeightedGraph([2, 4, 6]), 6, F(1, 2))
        assert g.weights == (1, 2, 3) and k == 3

    def test_identity(self):
        g0 = path([1, F(3, 2)])
        g, k = scale_instance(g0, F(5, 2), 1)
        assert g == g0 and k == F(5, 2)

    def test_thirds(self):
        g, k = scale_instance(WeightedGraph([F(1, 3)]), 1, 3)
        assert g.weights == (1,) and k == 3

    @pytest.mark.parametrize("factor", [0, -1])
    def test_bad_factor(self, factor):
        with pytest.raises(ValueError):
            scale_instance(TRIANGLE, 1, factor)


@given(graphs(max_n=7), st.data())
def test_cover_iff_complement_independent(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))) if g.n else st.just(set()))
    rest = set(range(g.n)) - s
    independent = not any(u in rest and v in rest for u, v in g.edges)
    assert is_vertex_cover(g, s) == independent


@settings(max_examples=50)
@given(graphs(max_n=6), weights, weights)
def test_scaling_preserves_every_budget_comparison(g, k, factor):
    scaled, k2 = scale_instance(g, k, factor)
    for mask in range(1 << g.n):
        s = [v for v in range(g.n) if mask >> v & 1]
        assert (g.weight_of(s) <= k) == (scaled.weight_of(s) <= k2)


@given(weights, weights)
def test_exact_arithmetic(a, b):
    assert (a + b) - b == a


def test_cover_solution_recomputes():
    t = RedBlueTree("RBR", [(0, 1), (1, 2)], [2, 3, F(1, 2)])
    sol = CoverSolution.for_tree(t, {0, 2})
    assert sol.total_weight == F(5, 2) and sol.red_weight == F(5, 2) and sol.red_count == 2
    unweighted = CoverSolution.for_tree(RedBlueTree("RB", [(0, 1)]), {0, 1})
    assert unweighted.total_weight == 2 and unweighted.red_count == 1


class TestRedBlueTree:
    def test_valid(self):
        t = RedBlueTree("BRB", [(0, 1), (1, 2)])
        assert t.n == 3 and t.is_red(1) and not t.is_red(0)

    def test_cycle_rejected(self):
        with pytest.raises(InvalidGraphError):
            RedBlueTree("BBB", [(0, 1), (1, 2), (0, 2)])

    def test_disconnected_rejected(self):
        with pytest.raises(InvalidGraphError, match="connected"):
            RedBlueTree("BBBB", [(0, 1), (0, 1), (2, 3)])

    def test_bad_color(self):
        with pytest.raises(InvalidGraphError, match="color"):
            RedBlueTree("BG", [(0, 1)])

    def test_nonpositive_weight(self):
        with pytest.raises(InvalidGraphError):
            RedBlueTree("BB", [(0, 1)], [1, 0])


def test_induced_subgraph_tracks_labels():
    g = path([1, 2, 3, 4])
    sub = g.induced_subgraph([1, 3, 2])
    assert sub.labels == (1, 2, 3)
    assert sub.weights == (2, 3, 4)
    assert sorted(sub.edges) == [(0, 1), (1, 2)]
    assert sub.induced_subgraph([0, 2]).labels == (1, 3)
