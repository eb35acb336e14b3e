"""Exact and approximate solvers for Directed Steiner Tree and
Dominating Set on sparse graphs, with reduction-based instance
generators and brute-force oracles for verification."""

from .approx import ds_approx
from .augment import AugmentQuery, min_augmenting_set
from .branching import (
    BranchState,
    SolverConfig,
    compute_partition,
    dst_solve,
    solve_driver,
)
from .domset import DsInstance, DsState, ds_compute_state, ds_solve, verify_domset
from .generators import (
    PsiInstance,
    SetCoverInstance,
    gen_domset_from_setcover,
    gen_dst_from_domset,
    gen_dst_from_setcover_2deg,
    gen_dst_from_setcover_logdeg,
    gen_random_sparse,
    gen_setcover_from_psi,
)
from .graphs import (
    DegeneracyResult,
    Digraph,
    Graph,
    contract_set,
    degeneracy,
    short_circuit,
    strongly_connected_components,
)
from .instances import (
    DstInstance,
    ReducedInstance,
    Solution,
    reduce_instance,
    source_terminals,
    verify_dst,
)
from .oracles import (
    OracleSizeError,
    brute_force_domset,
    brute_force_dst,
    brute_force_setcover,
)
from .stats import SolveStats, SolverTimeout

__all__ = [
    "AugmentQuery",
    "BranchState",
    "DegeneracyResult",
    "Digraph",
    "DsInstance",
    "DsState",
    "DstInstance",
    "Graph",
    "OracleSizeError",
    "PsiInstance",
    "ReducedInstance",
    "SetCoverInstance",
    "Solution",
    "SolveStats",
    "SolverConfig",
    "SolverTimeout",
    "brute_force_domset",
    "brute_force_dst",
    "brute_force_setcover",
    "compute_partition",
    "contract_set",
    "degeneracy",
    "ds_approx",
    "ds_compute_state",
    "ds_solve",
    "dst_solve",
    "gen_domset_from_setcover",
    "gen_dst_from_domset",
    "gen_dst_from_setcover_2deg",
    "gen_dst_from_setcover_logdeg",
    "gen_random_sparse",
    "gen_setcover_from_psi",
    "min_augmenting_set",
    "reduce_instance",
    "short_circuit",
    "solve_driver",
    "source_terminals",
    "strongly_connected_components",
    "verify_domset",
    "verify_dst",
]
