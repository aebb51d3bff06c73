"""Seeded random instance generation."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .core import RedBlueTree, WeightedGraph, as_weight
from .instances import serialize_instance

MODELS = ("gnm", "tree", "path", "cycle", "star")


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    n: int
    model: str = "gnm"
    m: Optional[int] = None
    weight_low: Fraction = Fraction(1)
    weight_high: Fraction = Fraction(5)
    fractional_fraction: float = 0.0
    red_fraction: float = 0.0
    colored: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight_low", as_weight(self.weight_low))
        object.__setattr__(self, "weight_high", as_weight(self.weight_high))
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; choose from {MODELS}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 < self.weight_low <= self.weight_high:
            raise ValueError("need 0 < weight_low <= weight_high")
        if self.model == "gnm":
            if self.m is None:
                raise ValueError("gnm model needs m")
            if not 0 <= self.m <= self.n * (self.n - 1) // 2:
                raise ValueError(f"m={self.m} exceeds the simple-graph maximum for n={self.n}")
        if self.model == "cycle" and self.n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if self.model == "tree" and self.n < 1:
            raise ValueError("a tree needs at least 1 vertex")


def _weight(rng: random.Random, low: Fraction, high: Fraction, fractional: bool) -> Fraction:
    if fractional:
        q = rng.choice((2, 3, 4, 5))
        numerators = [p for p in range(math.ceil(low * q), math.floor(high * q) + 1) if p % q]
        if numerators:
            return Fraction(rng.choice(numerators), q)
    lo, hi = math.ceil(low), math.floor(high)
    if lo > hi:
        # no integer in range; fall back to a denominator that fits
        for q in (2, 3, 4, 5):
            ps = list(range(math.ceil(low * q), math.floor(high * q) + 1))
            if ps:
                return Fraction(rng.choice(ps), q)
        return low
    return Fraction(rng.randint(lo, hi))


def _edges(rng: random.Random, config: GeneratorConfig) -> list[tuple[int, int]]:
    n = config.n
    if config.model == "gnm":
        pairs = list(itertools.combinations(range(n), 2))
        return sorted(rng.sample(pairs, config.m))
    if config.model == "tree":
        return [(rng.randrange(v), v) for v in range(1, n)]
    if config.model == "path":
        return [(v, v + 1) for v in range(n - 1)]
    if config.model == "cycle":
        return [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)]
    return [(0, v) for v in range(1, n)]


def generate_instance(config: GeneratorConfig) -> Union[WeightedGraph, RedBlueTree]:
    rng = random.Random(config.seed)
    edges = _edges(rng, config)
    weights = [_weight(rng, config.weight_low, config.weight_high,
                       rng.random() < config.fractional_fraction)
               for _ in range(config.n)]
    if config.colored or config.red_fraction > 0:
        colors = ["R" if rng.random() < config.red_fraction else "B" for _ in range(config.n)]
        return RedBlueTree(colors, edges, weights)
    return WeightedGraph(weights, edges)


def generate(config: GeneratorConfig) -> str:
    """Instance text for ``config``; identical configs give identical bytes."""
    return serialize_instance(generate_instance(config))
