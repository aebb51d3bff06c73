"""Weighted and red-blue vertex cover: kernels, LP relaxation, exact solvers."""

from .branching import (BRANCHING_BASE, BranchStats, DecisionResult, best_scaling,
                        branch_decide, fractional_count, solve_degree_le2)
from .buss import KernelOutcome, buss_kernelize, heavy_neighborhood_rule, remove_isolated
from .core import (CoverSolution, InvalidGraphError, RedBlueTree, WeightedGraph,
                   is_vertex_cover, min_weight, scale_instance, validate)
from .instances import InstanceFormatError, parse_instance, serialize_instance
from .lp import (HalfIntegralSolution, NttPartition, ntt_kernelize, partition,
                 solve_vc_lp, two_approx)
from .redblue import (ParetoFront, RbInstance, WrbInstance, compositions_count,
                      rb_decide, rb_reduce_high_degree, rb_reduce_red_neighbors,
                      wrb_decide)

__all__ = [
    "BRANCHING_BASE", "BranchStats", "CoverSolution", "DecisionResult",
    "HalfIntegralSolution", "InstanceFormatError", "InvalidGraphError",
    "KernelOutcome", "NttPartition", "ParetoFront", "RbInstance", "RedBlueTree",
    "WeightedGraph", "WrbInstance", "best_scaling", "branch_decide",
    "buss_kernelize", "compositions_count", "fractional_count",
    "heavy_neighborhood_rule", "is_vertex_cover", "min_weight",
    "ntt_kernelize", "parse_instance", "partition", "rb_decide",
    "rb_reduce_high_degree", "rb_reduce_red_neighbors", "remove_isolated",
    "scale_instance", "serialize_instance", "solve_degree_le2", "solve_vc_lp",
    "two_approx", "validate", "wrb_decide",
]
