"""Node counts of the branching solver against its analytical bound."""

from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .branching import BRANCHING_BASE, branch_decide, fractional_count
from .core import WeightedGraph
from .generate import GeneratorConfig, generate_instance
from .instances import format_rational
from .lp import solve_vc_lp

COLUMNS = ("instance", "k", "l", "nodes_expanded", "bound")


@dataclass(frozen=True)
class BenchRow:
    instance: str
    k: Fraction
    l: int
    nodes_expanded: int
    bound: float

    @property
    def ratio(self) -> float:
        return self.nodes_expanded / self.bound


def bench_suite(count: int, seed: int = 0, n_range: tuple[int, int] = (8, 16)
                ) -> list[tuple[str, WeightedGraph, Fraction]]:
    """``count`` seeded gnm graphs mixing integer and fractional weights.

    The budget is the LP lower bound rounded up, so most runs have to search
    rather than fail on the first prune.
    """
    rng = random.Random(seed)
    suite = []
    for i in range(count):
        n = rng.randint(*n_range)
        m = rng.randint(n, min(3 * n, n * (n - 1) // 2))
        config = GeneratorConfig(seed=rng.getrandbits(63), n=n, model="gnm", m=m,
                                 weight_low=Fraction(1, 2), weight_high=Fraction(3),
                                 fractional_fraction=0.4)
        graph = generate_instance(config)
        k = Fraction(math.ceil(solve_vc_lp(graph).objective))
        suite.append((f"bench-{seed}-{i:03d}", graph, k))
    return suite


def run_bench(suite: Iterable[tuple[str, WeightedGraph, Fraction]]) -> list[BenchRow]:
    rows = []
    for name, graph, k in suite:
        result = branch_decide(graph, k)
        l = fractional_count(graph)
        rows.append(BenchRow(name, k, l, result.stats.nodes_expanded,
                             BRANCHING_BASE ** (float(k) + l)))
    return rows


def max_ratio(rows: list[BenchRow]) -> Optional[float]:
    return max((r.ratio for r in rows), default=None)


def to_csv(rows: list[BenchRow]) -> str:
    """CSV with the fixed columns; a trailing ``# max_ratio,<value>`` line summarizes."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        writer.writerow([r.instance, format_rational(r.k), r.l, r.nodes_expanded, repr(r.bound)])
    if rows:
        buf.write(f"# max_ratio,{max_ratio(rows)!r}\n")
    return buf.getvalue()


def read_max_ratio(text: str) -> float:
    """Max nodes/bound ratio recorded in a CSV written by :func:`to_csv`."""
    for line in text.splitlines():
        if line.startswith("# max_ratio,"):
            return float(line.split(",", 1)[1])
    rows = list(csv.DictReader(l for l in text.splitlines() if not l.startswith("#")))
    return max(int(r["nodes_expanded"]) / float(r["bound"]) for r in rows)
