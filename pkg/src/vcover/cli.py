"""Command-line front end.

Every solver subcommand reads an instance file (``-`` for stdin) and prints a
single JSON report.  Exit status: 0 for YES or success, 1 for NO, 2 for an
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Optional

from . import bench as bench_mod
from .branching import best_scaling, branch_decide
from .buss import KernelOutcome, buss_kernelize
from .core import scale_instance
from .generate import MODELS, GeneratorConfig, generate
from .instances import parse_instance, parse_rational
from .lp import ntt_kernelize, partition, solve_vc_lp, two_approx
from .oracle import brute_lp_half, brute_min_vc, brute_rb, brute_wrb
from .redblue import RbInstance, WrbInstance, rb_decide, wrb_decide

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _json_value(x: Any) -> Any:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (set, frozenset)):
        return sorted(_json_value(v) for v in x)
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


@dataclass
class RunReport:
    instance_id: str
    subcommand: str
    result: dict = field(default_factory=dict)
    witness: Optional[list[int]] = None
    stats: Optional[dict] = None
    wall_time_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(_json_value(asdict(self)), sort_keys=True)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read(path: str, kind: str):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_instance(text, kind=kind)


def _kernel_result(outcome: KernelOutcome) -> dict:
    if outcome.is_no:
        return {"answer": "NO", "reason": outcome.reason}
    return {
        "answer": "REDUCED",
        "committed": outcome.committed,
        "remaining_budget": outcome.remaining_budget,
        "removed_isolated": outcome.removed_isolated,
        "kernel_vertices": list(outcome.kernel.labels),
        "kernel_edges": [[outcome.kernel.labels[u], outcome.kernel.labels[v]]
                         for u, v in outcome.kernel.edges],
    }


def cmd_solve(args) -> tuple[dict, Optional[list[int]], Optional[dict], int]:
    graph = _read(args.instance, "graph")
    k = args.k
    factor = Fraction(1)
    if args.scale == "auto" and graph.n:
        choice = best_scaling(sorted(graph.weights), k)
        factor = 1 / sorted(graph.weights)[choice.index - 1]
    elif args.scale not in ("auto", "none"):
        factor = _rational(args.scale)
    solved_graph, solved_k = scale_instance(graph, k, factor)
    result = branch_decide(solved_graph, solved_k)
    out = {"answer": "YES" if result.answer else "NO", "k": k, "scale": factor}
    witness = None
    if result.witness is not None:
        witness = sorted(result.witness.vertices)
        out["weight"] = graph.weight_of(witness)
    stats = None
    if args.stats:
        st = result.stats
        stats = {"nodes_expanded": st.nodes_expanded, "initial_k": st.initial_k,
                 "initial_l": st.initial_l, "initial_l_below_one": st.initial_l_below_one,
                 "measure_bound": st.measure_bound(),
                 "measure_bound_below_one": st.measure_bound(below_one=True)}
    return out, witness, stats, EXIT_YES if result.answer else EXIT_NO


def cmd_kernel_buss(args):
    outcome = buss_kernelize(_read(args.instance, "graph"), args.k)
    return _kernel_result(outcome), None, None, EXIT_NO if outcome.is_no else EXIT_YES


def cmd_kernel_ntt(args):
    outcome = ntt_kernelize(_read(args.instance, "graph"), args.k)
    return _kernel_result(outcome), None, None, EXIT_NO if outcome.is_no else EXIT_YES


def cmd_lp(args):
    graph = _read(args.instance, "graph")
    sol = solve_vc_lp(graph)
    parts = partition(sol)
    out = {"objective": sol.objective, "values": list(sol.values),
           "v0": parts.v0, "v1": parts.v1, "v_half": parts.v_half}
    return out, None, None, EXIT_YES


def cmd_approx2(args):
    graph = _read(args.instance, "graph")
    cover = two_approx(graph)
    return {"weight": cover.total_weight}, sorted(cover.vertices), None, EXIT_YES


def _check_redblue_args(args) -> None:
    unweighted = args.K is not None or args.KR is not None
    weighted = args.k is not None or args.kr is not None
    if unweighted == weighted:
        raise ValueError("give either --K and --KR (unweighted) or --k and --kr (weighted)")
    if unweighted and (args.K is None or args.KR is None):
        raise ValueError("unweighted red-blue needs both --K and --KR")
    if weighted and (args.k is None or args.kr is None):
        raise ValueError("weighted red-blue needs both --k and --kr")


def cmd_redblue(args):
    _check_redblue_args(args)
    tree = _read(args.instance, "tree")
    if args.K is not None:
        result = rb_decide(RbInstance(tree, args.K, args.KR))
    else:
        result = wrb_decide(WrbInstance(tree, args.k, args.kr))
    stats = asdict(result.stats)
    out: dict = {"answer": "YES" if result.answer else "NO"}
    witness = None
    if result.witness is not None:
        witness = sorted(result.witness.vertices)
        out.update(size=len(witness), total_weight=result.witness.total_weight,
                   red_count=result.witness.red_count, red_weight=result.witness.red_weight)
    return out, witness, stats, EXIT_YES if result.answer else EXIT_NO


def cmd_oracle(args):
    if args.problem == "vc":
        graph = _read(args.instance, "graph")
        opt = brute_min_vc(graph)
        out = {"optimum": opt.optimum_weight, "optimal_covers": len(opt.all_optimal_covers)}
        if args.k is not None:
            out["answer"] = "YES" if opt.optimum_weight <= args.k else "NO"
            code = EXIT_YES if opt.optimum_weight <= args.k else EXIT_NO
        else:
            code = EXIT_YES
        return out, sorted(opt.all_optimal_covers[0]), None, code
    if args.problem == "lp":
        return {"objective": brute_lp_half(_read(args.instance, "graph"))}, None, None, EXIT_YES
    _check_redblue_args(args)
    if (args.problem == "rb") != (args.K is not None):
        raise ValueError("oracle rb takes --K/--KR, oracle wrb takes --k/--kr")
    tree = _read(args.instance, "tree")
    if args.problem == "rb":
        answer = brute_rb(tree, args.K, args.KR)
    else:
        answer = brute_wrb(tree, args.k, args.kr)
    return {"answer": "YES" if answer else "NO"}, None, None, EXIT_YES if answer else EXIT_NO


def cmd_gen(args) -> int:
    config = GeneratorConfig(seed=args.seed, n=args.n, model=args.model, m=args.m,
                             weight_low=args.weight_low, weight_high=args.weight_high,
                             fractional_fraction=args.fractional_fraction,
                             red_fraction=args.red_fraction, colored=args.colored)
    text = generate(config)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_bench(args) -> int:
    suite = bench_mod.bench_suite(args.count, seed=args.seed)
    rows = bench_mod.run_bench(suite)
    text = bench_mod.to_csv(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.baseline and rows:
        with open(args.baseline, encoding="utf-8") as fh:
            baseline = bench_mod.read_max_ratio(fh.read())
        if bench_mod.max_ratio(rows) > 4 * baseline:
            print(f"regression: max ratio {bench_mod.max_ratio(rows)} > 4 x {baseline}",
                  file=sys.stderr)
            return EXIT_NO
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vcover", description="Weighted and red-blue vertex cover solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_instance(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("instance", help="instance file, or - for stdin")
        return p

    p = with_instance("solve", "exact branching decision")
    p.add_argument("--k", type=_rational, required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--scale", default="none", help="auto, none, or a rational factor")
    p = with_instance("kernel-buss", "Buss kernelization")
    p.add_argument("--k", type=_rational, required=True)
    p = with_instance("kernel-ntt", "LP-based kernelization")
    p.add_argument("--k", type=_rational, required=True)
    with_instance("lp", "half-integral LP relaxation")
    with_instance("approx2", "2-approximate cover from the LP")
    redblue = with_instance("redblue", "red-blue vertex cover on a tree")
    oracle = sub.add_parser("oracle", help="brute-force cross-checks")
    oracle.add_argument("problem", choices=("vc", "lp", "rb", "wrb"))
    oracle.add_argument("instance")
    for p in (redblue, oracle):
        p.add_argument("--K", type=int, help="cover size budget (unweighted)")
        p.add_argument("--KR", type=int, help="red vertex budget (unweighted)")
        p.add_argument("--k", type=_rational, help="weight budget")
        p.add_argument("--kr", type=_rational, help="red weight budget (weighted red-blue)")

    p = sub.add_parser("gen", help="seeded instance generator")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--model", choices=MODELS, default="gnm")
    p.add_argument("--m", type=int)
    p.add_argument("--weight-low", type=_rational, default=Fraction(1))
    p.add_argument("--weight-high", type=_rational, default=Fraction(5))
    p.add_argument("--fractional-fraction", type=float, default=0.0)
    p.add_argument("--red-fraction", type=float, default=0.0)
    p.add_argument("--colored", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("bench", help="branching node counts vs the analytical bound")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--baseline", help="committed CSV to gate the max ratio against (4x)")
    p.add_argument("-o", "--output")
    return parser


COMMANDS = {
    "solve": cmd_solve,
    "kernel-buss": cmd_kernel_buss,
    "kernel-ntt": cmd_kernel_ntt,
    "lp": cmd_lp,
    "approx2": cmd_approx2,
    "redblue": cmd_redblue,
    "oracle": cmd_oracle,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "bench":
            return cmd_bench(args)
        start = time.perf_counter()
        result, witness, stats, code = COMMANDS[args.command](args)
        report = RunReport(
            instance_id=args.instance,
            subcommand=args.command if args.command != "oracle" else f"oracle-{args.problem}",
            result=result, witness=witness, stats=stats,
            wall_time_ms=(time.perf_counter() - start) * 1000.0,
        )
        print(report.to_json())
        return code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
