"""Brute-force reference solvers.

These deliberately share no code path with the real solvers: they
enumerate candidate sets in increasing cardinality (lexicographic within
a cardinality, so failures reproduce) and keep the first feasible one.
Intended for tiny instances only; a workload guard refuses anything
larger instead of silently truncating the search.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

from .domset import DsInstance, verify_domset
from .generators import SetCoverInstance
from .instances import DstInstance, Solution, verify_dst

# maximum number of candidate sets an oracle call may enumerate
ENUMERATION_LIMIT = 1 << 24


class OracleSizeError(Exception):
    """Raised when a brute-force call would exceed the enumeration guard."""


def _check_workload(n_candidates: int, k: int, what: str) -> None:
    total = sum(comb(n_candidates, i) for i in range(min(k, n_candidates) + 1))
    if total > ENUMERATION_LIMIT:
        raise OracleSizeError(
            f"{what}: {total} candidate sets exceeds the oracle guard "
            f"({ENUMERATION_LIMIT}); this oracle is for tiny instances only"
        )


def brute_force_dst(inst: DstInstance) -> Solution:
    """Exhaustive minimum Directed Steiner Tree solution within budget."""
    candidates = inst.non_terminals()
    _check_workload(len(candidates), inst.k, "brute_force_dst")
    for size in range(min(inst.k, len(candidates)) + 1):
        for combo in combinations(candidates, size):
            sol = Solution(vertices=frozenset(combo))
            if verify_dst(inst, sol):
                return sol
    return Solution.infeasible()


def brute_force_domset(inst: DsInstance) -> Solution:
    """Exhaustive minimum dominating set within budget."""
    vertices = range(inst.g.n)
    _check_workload(inst.g.n, inst.k, "brute_force_domset")
    for size in range(min(inst.k, inst.g.n) + 1):
        for combo in combinations(vertices, size):
            if verify_domset(inst.g, set(combo)):
                return Solution(vertices=frozenset(combo))
    return Solution.infeasible()


def brute_force_setcover(sc: SetCoverInstance) -> tuple[int, ...] | None:
    """Smallest family of set indices covering the whole universe.

    Returns ``None`` when even the whole family leaves an element
    uncovered.  Unlike the graph oracles this one ignores the budget;
    callers compare optima directly.
    """
    sets = sc.sets
    universe = frozenset(range(sc.n_elems))
    covered = frozenset().union(*sets) if sets else frozenset()
    if not universe <= covered:
        return None
    _check_workload(len(sets), len(sets), "brute_force_setcover")
    for size in range(len(sets) + 1):
        for combo in combinations(range(len(sets)), size):
            if universe <= frozenset().union(*(sets[i] for i in combo), frozenset()):
                return combo
    raise AssertionError("unreachable: the full family covers the universe")
