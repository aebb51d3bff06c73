"""Exact-rational graph and tree types shared by every solver.

Weights are :class:`fractions.Fraction` values throughout; nothing in the
package ever rounds.  Vertices are dense integer indices ``0 .. n-1`` and all
iteration happens in ascending index order.

Graphs are immutable.  Reductions build new graphs with
:meth:`WeightedGraph.induced_subgraph`, which renumbers the kept vertices
densely and records the original ids in ``labels`` so results on a kernel can
be mapped back to the instance it came from.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

Weight = Fraction
WeightLike = Union[Fraction, int, str]

RED = "R"
BLUE = "B"


class InvalidGraphError(ValueError):
    """Raised when a graph or tree violates a structural invariant."""


def as_weight(value: WeightLike) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point weights are not accepted; use Fraction or 'p/q'")
    return Fraction(value)


class WeightedGraph:
    """Simple undirected graph with positive rational vertex weights.

    ``edges`` are stored as sorted pairs in the order given.  Construction
    validates by default; pass ``check=False`` to build a graph that
    :func:`validate` can then reject.
    """

    __slots__ = ("weights", "edges", "labels", "_adj")

    def __init__(
        self,
        weights: Iterable[WeightLike],
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Iterable[int]] = None,
        *,
        check: bool = True,
    ) -> None:
        self.weights: tuple[Fraction, ...] = tuple(as_weight(w) for w in weights)
        self.edges: tuple[tuple[int, int], ...] = tuple(
            (u, v) if u <= v else (v, u) for u, v in edges)
        n = len(self.weights)
        self.labels: tuple[int, ...] = tuple(range(n)) if labels is None else tuple(labels)
        if len(self.labels) != n:
            raise InvalidGraphError("labels must have one entry per vertex")
        self._adj: Optional[tuple[frozenset[int], ...]] = None
        if check:
            validate(self)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        if self._adj is None:
            nbrs: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.edges:
                nbrs[u].add(v)
                nbrs[v].add(u)
            self._adj = tuple(frozenset(s) for s in nbrs)
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def weight_of(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vertices), Fraction(0))

    def induced_subgraph(self, keep: Iterable[int]) -> WeightedGraph:
        """Subgraph on ``keep``, renumbered densely in ascending order."""
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return WeightedGraph(
            [self.weights[v] for v in kept],
            edges,
            [self.labels[v] for v in kept],
            check=False,
        )

    def to_labels(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.labels[v] for v in vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self.weights == other.weights
                and sorted(self.edges) == sorted(other.edges)
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.weights, frozenset(self.edges), self.labels))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


def validate(graph: WeightedGraph) -> None:
    """Raise :class:`InvalidGraphError` naming the first violated invariant."""
    n = graph.n
    for v, w in enumerate(graph.weights):
        if w <= 0:
            raise InvalidGraphError(f"non-positive weight {w} on vertex {v}")
    seen: set[tuple[int, int]] = set()
    for u, v in graph.edges:
        if u < 0 or v >= n:
            raise InvalidGraphError(f"edge {{{u},{v}}} has an endpoint outside [0, {n})")
        if u == v:
            raise InvalidGraphError(f"self-loop on vertex {u}")
        if (u, v) in seen:
            raise InvalidGraphError(f"duplicate edge {{{u},{v}}}")
        seen.add((u, v))


def min_weight(graph: WeightedGraph) -> Fraction:
    if graph.n == 0:
        raise ValueError("min_weight of an empty graph")
    return min(graph.weights)


def is_vertex_cover(graph: WeightedGraph, s: Iterable[int]) -> bool:
    chosen = set(s)
    for v in chosen:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} is not in the graph")
    return all(u in chosen or v in chosen for u, v in graph.edges)


def scale_instance(graph: WeightedGraph, k: WeightLike, factor: WeightLike
                   ) -> tuple[WeightedGraph, Fraction]:
    """Multiply every weight and the budget by ``factor`` (> 0)."""
    factor = as_weight(factor)
    if factor <= 0:
        raise ValueError("scaling factor must be positive")
    scaled = WeightedGraph([w * factor for w in graph.weights], graph.edges,
                           graph.labels, check=False)
    return scaled, as_weight(k) * factor


@dataclass(frozen=True)
class RedBlueTree:
    """A tree with an R/B color per vertex and optional positive weights."""

    colors: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    weights: Optional[tuple[Fraction, ...]] = None
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, colors: Iterable[str], edges: Iterable[tuple[int, int]],
                 weights: Optional[Iterable[WeightLike]] = None) -> None:
        object.__setattr__(self, "colors", tuple(colors))
        object.__setattr__(self, "edges", tuple((u, v) if u <= v else (v, u) for u, v in edges))
        object.__setattr__(self, "weights",
                           None if weights is None else tuple(as_weight(w) for w in weights))
        _check_tree(self)
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.colors)

    def is_red(self, v: int) -> bool:
        return self.colors[v] == RED

    def as_graph(self) -> WeightedGraph:
        """The underlying weighted graph (unit weights when unweighted)."""
        weights = self.weights if self.weights is not None else [1] * self.n
        return WeightedGraph(weights, self.edges)


def _check_tree(tree: RedBlueTree) -> None:
    n = tree.n
    if n == 0:
        raise InvalidGraphError("a tree needs at least one vertex")
    for v, c in enumerate(tree.colors):
        if c not in (RED, BLUE):
            raise InvalidGraphError(f"vertex {v} has color {c!r}, expected 'R' or 'B'")
    if tree.weights is not None:
        if len(tree.weights) != n:
            raise InvalidGraphError("weights must have one entry per vertex")
        for v, w in enumerate(tree.weights):
            if w <= 0:
                raise InvalidGraphError(f"non-positive weight {w} on vertex {v}")
    if len(tree.edges) != n - 1:
        raise InvalidGraphError(f"a tree on {n} vertices has {n - 1} edges, got {len(tree.edges)}")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in tree.edges:
        if u < 0 or v >= n:
            raise InvalidGraphError(f"edge {{{u},{v}}} has an endpoint outside [0, {n})")
        if u == v:
            raise InvalidGraphError(f"self-loop on vertex {u}")
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        for y in nbrs[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != n:
        raise InvalidGraphError("graph is not connected, so it is not a tree")


@dataclass(frozen=True)
class CoverSolution:
    vertices: frozenset[int]
    total_weight: Fraction
    red_weight: Optional[Fraction] = None
    red_count: Optional[int] = None

    @classmethod
    def for_graph(cls, graph: WeightedGraph, vertices: Iterable[int]) -> CoverSolution:
        vs = frozenset(vertices)
        return cls(vs, graph.weight_of(vs))

    @classmethod
    def for_tree(cls, tree: RedBlueTree, vertices: Iterable[int]) -> CoverSolution:
        vs = frozenset(vertices)
        reds = [v for v in vs if tree.is_red(v)]
        if tree.weights is None:
            return cls(vs, Fraction(len(vs)), Fraction(len(reds)), len(reds))
        w = tree.weights
        return cls(vs, sum((w[v] for v in vs), Fraction(0)),
                   sum((w[v] for v in reds), Fraction(0)), len(reds))


def weights_from_mapping(n: int, weights: Mapping[int, WeightLike]) -> list[Fraction]:
    """Dense weight list from a vertex->weight mapping; every vertex must appear."""
    missing = [v for v in range(n) if v not in weights]
    if missing:
        raise InvalidGraphError(f"missing weight for vertex {missing[0]}")
    return [as_weight(weights[v]) for v in range(n)]
