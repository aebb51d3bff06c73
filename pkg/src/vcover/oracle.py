"""Exhaustive ground-truth solvers.

These enumerate every subset (or every ``{0, 1/2, 1}`` assignment) with numpy
and share no code with the solvers they are used to check.  Weights are scaled
to integers by the common denominator so every comparison is exact.

The size guards can be tightened (never loosened) with the environment
variable ``VCOVER_ORACLE_MAX_N``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import RedBlueTree, WeightedGraph

MAX_N_MIN_VC = 20
MAX_N_LP_HALF = 12
MAX_N_REDBLUE = 16


class OracleSizeError(ValueError):
    pass


def _guard(n: int, limit: int) -> None:
    env = os.environ.get("VCOVER_ORACLE_MAX_N")
    if env:
        limit = min(limit, int(env))
    if n > limit:
        raise OracleSizeError(f"oracle refuses n={n} (limit {limit})")


def _integer_weights(weights) -> tuple[np.ndarray, int]:
    """Integer weights and the common denominator they were scaled by."""
    scale = math.lcm(*(w.denominator for w in weights)) if weights else 1
    ints = [int(w * scale) for w in weights]
    dtype = np.int64 if sum(ints) * 2 < 2**62 else object
    return np.array(ints, dtype=dtype), scale


def _bits(n: int) -> np.ndarray:
    """Row ``s`` holds the bits of subset ``s`` (ascending binary order)."""
    masks = np.arange(1 << n, dtype=np.int64)
    return ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int8)


def _covers(bits: np.ndarray, edges) -> np.ndarray:
    ok = np.ones(bits.shape[0], dtype=bool)
    for u, v in edges:
        ok &= (bits[:, u] | bits[:, v]).astype(bool)
    return ok


@dataclass(frozen=True)
class OracleOptimum:
    optimum_weight: Fraction
    all_optimal_covers: list[frozenset[int]]


def brute_min_vc(graph: WeightedGraph) -> OracleOptimum:
    n = graph.n
    _guard(n, MAX_N_MIN_VC)
    if n == 0:
        return OracleOptimum(Fraction(0), [frozenset()])
    bits = _bits(n)
    ok = _covers(bits, graph.edges)
    w, scale = _integer_weights(graph.weights)
    cost = bits.astype(w.dtype) @ w
    best = cost[ok].min()
    rows = np.flatnonzero(ok & (cost == best))
    covers = [frozenset(np.flatnonzero(bits[r]).tolist()) for r in rows]
    return OracleOptimum(Fraction(int(best), scale), covers)


def brute_lp_half(graph: WeightedGraph) -> Fraction:
    """Minimum of sum w(v) x_v over feasible x in {0, 1/2, 1}^n."""
    n = graph.n
    _guard(n, MAX_N_LP_HALF)
    if n == 0:
        return Fraction(0)
    # doubled values y = 2x in {0, 1, 2}; edge constraint y_u + y_v >= 2
    idx = np.arange(3**n, dtype=np.int64)
    y = ((idx[:, None] // (3 ** np.arange(n, dtype=np.int64))) % 3).astype(np.int8)
    ok = np.ones(y.shape[0], dtype=bool)
    for u, v in graph.edges:
        ok &= (y[:, u] + y[:, v]) >= 2
    w, scale = _integer_weights(graph.weights)
    cost = y.astype(w.dtype) @ w
    return Fraction(int(cost[ok].min()), 2 * scale)


def brute_rb(tree: RedBlueTree, K: int, K_R: int) -> bool:
    """Is there a cover with at most ``K`` vertices, at most ``K_R`` of them red?"""
    n = tree.n
    _guard(n, MAX_N_REDBLUE)
    bits = _bits(n)
    ok = _covers(bits, tree.edges)
    red = np.array([tree.is_red(v) for v in range(n)], dtype=np.int64)
    size = bits.sum(axis=1)
    reds = bits.astype(np.int64) @ red
    return bool(np.any(ok & (size <= K) & (reds <= K_R)))


def brute_wrb(tree: RedBlueTree, k, k_R) -> bool:
    """Is there a cover of total weight <= k and red weight <= k_R?"""
    if tree.weights is None:
        raise ValueError("weighted red-blue oracle needs a weighted tree")
    n = tree.n
    _guard(n, MAX_N_REDBLUE)
    k, k_R = Fraction(k), Fraction(k_R)
    bits = _bits(n)
    ok = _covers(bits, tree.edges)
    scale = math.lcm(*(w.denominator for w in tree.weights), k.denominator, k_R.denominator)
    w = np.array([int(x * scale) for x in tree.weights], dtype=np.int64)
    red_w = np.where([tree.is_red(v) for v in range(n)], w, 0)
    total = bits.astype(np.int64) @ w
    red_total = bits.astype(np.int64) @ red_w
    return bool(np.any(ok & (total <= int(k * scale)) & (red_total <= int(k_R * scale))))
