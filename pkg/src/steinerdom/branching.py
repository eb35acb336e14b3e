"""Measure-driven branching solver for Directed Steiner Tree.

The solver works on reduced instances (acyclic terminal subdigraph) and
maintains a partial solution Y.  Non-terminals are split by a degree
bound db into heavy vertices (dominating at least db+1 undominated
source terminals) and light ones; undominated source terminals split
into those with a heavy in-neighbor and the rest.  The algorithm either
cuts off (too many terminals that only light vertices can dominate),
finishes with the exact augmenting-set subroutine (no heavy vertices
left), or picks the undominated source terminal with the fewest heavy
in-neighbors and branches on taking each of them or deleting them all.

Progress is witnessed by the measure mu = db*(k - |Y|) - |Wl|: taking a
vertex drops it by at least db, deleting by at least one.  With stats
enabled this drop is asserted at every node.

The root is treated as a permanently selected zero-cost vertex: a source
terminal with an arc from the root needs no solution vertex, so it
counts as dominated from the start.  Otherwise the light-coverage cutoff
would wrongly reject instances whose root feeds terminals directly.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .augment import AugmentQuery, min_augmenting_set
from .graphs import Graph, degeneracy, induced_subdigraph
from .instances import (
    DstInstance,
    ReducedInstance,
    Solution,
    reduce_instance,
)
from .stats import SolveStats, SolverTimeout

MODES = ("auto", "db", "minor-free")


@dataclass(frozen=True)
class SolverConfig:
    """How to run the exact solvers.

    ``mode`` picks the degree bound: ``auto`` uses the degeneracy of the
    (reduced) graph, ``db`` uses the explicit bound, ``minor-free`` uses
    h-2 for inputs promised to exclude a clique on h vertices as a
    topological minor.  ``deterministic`` forces sequential branch order;
    ``parallel`` may explore sibling branches concurrently when
    determinism is off.
    """

    mode: str = "auto"
    db: int | None = None
    h: int | None = None
    deterministic: bool = True
    stats: bool = False
    parallel: bool = False
    time_limit: float | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "db":
            if self.db is None or self.db < 1:
                raise ValueError("mode 'db' needs an explicit degree bound >= 1")
        if self.mode == "minor-free":
            if self.h is None or self.h < 3:
                raise ValueError("mode 'minor-free' needs h >= 3")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")

    def resolve_db(self, g: Graph) -> int:
        """Degree bound for a concrete graph (at least 1)."""
        if self.mode == "db":
            assert self.db is not None
            return self.db
        if self.mode == "minor-free":
            assert self.h is not None
            return self.h - 2
        return max(1, degeneracy(g).d)


@dataclass(frozen=True)
class BranchState:
    """The vertex partition at one node of the branching tree.

    ``y`` is the chosen partial solution, ``t1`` the source terminals
    dominated by y or the root, ``bh``/``bl`` the heavy/light remaining
    non-terminals, ``wh``/``wl`` the undominated source terminals with /
    without a heavy in-neighbor, and ``mu`` the branching measure.
    """

    y: frozenset[int]
    t1: frozenset[int]
    bh: frozenset[int]
    bl: frozenset[int]
    wh: frozenset[int]
    wl: frozenset[int]
    db: int
    mu: int


def compute_partition(ri: ReducedInstance, y: frozenset[int], db: int) -> BranchState:
    """Partition the full reduced graph for a partial solution ``y``."""
    inst = ri.inst
    forbidden = inst.terminals | {inst.root}
    if y & forbidden:
        raise ValueError("y must be disjoint from the terminals and the root")
    return _partition(ri, frozenset(range(inst.d.n)), y, db)


def _partition(ri: ReducedInstance, alive: frozenset[int], y: frozenset[int], db: int) -> BranchState:
    inst = ri.inst
    d = inst.d
    root = inst.root
    t0 = ri.source_terminals
    t1 = frozenset(
        t for t in t0
        if any(p == root or p in y for p in d.in_neighbors(t))
    )
    undominated = t0 - t1
    eligible = alive - inst.terminals - {root} - y
    bh = frozenset(
        v for v in eligible
        if sum(1 for w in d.out_neighbors(v) if w in undominated) >= db + 1
    )
    bl = eligible - bh
    wh = frozenset(
        t for t in undominated
        if any(p in bh for p in d.in_neighbors(t))
    )
    wl = undominated - wh
    mu = db * (inst.k - len(y)) - len(wl)
    return BranchState(y=y, t1=t1, bh=bh, bl=bl, wh=wh, wl=wl, db=db, mu=mu)


def dst_solve(
    ri: ReducedInstance,
    cfg: SolverConfig,
    y: frozenset[int] = frozenset(),
    stats: SolveStats | None = None,
) -> Solution:
    """Smallest solution of ``ri`` containing ``y``, within budget.

    Follows the branching described in the module docstring.  With
    ``cfg.deterministic`` two runs return the identical set; otherwise a
    parallel run may return any optimal-size solution.
    """
    inst = ri.inst
    forbidden = inst.terminals | {inst.root}
    if y & forbidden:
        raise ValueError("y must be disjoint from the terminals and the root")
    if not all(0 <= v < inst.d.n for v in y):
        raise ValueError("y contains unknown vertices")
    db = cfg.resolve_db(inst.d.underlying_undirected())
    if cfg.stats and stats is None:
        stats = SolveStats()
    if stats is not None:
        stats.db_used = db
    deadline = None
    if cfg.time_limit is not None:
        deadline = time.monotonic() + cfg.time_limit
    solver = _DstSolver(ri, db, cfg, stats, deadline)
    alive = frozenset(range(inst.d.n))
    if cfg.parallel and not cfg.deterministic:
        return solver.solve_root_parallel(alive, y)
    return solver.solve(alive, y, 0, None, 0)


def solve_driver(
    inst: DstInstance,
    cfg: SolverConfig,
    stats: SolveStats | None = None,
) -> Solution:
    """Reduce, solve, and report the solution in original vertex ids."""
    ri = reduce_instance(inst)
    sol = dst_solve(ri, cfg, frozenset(), stats)
    if not sol.feasible:
        return sol
    return Solution(vertices=ri.to_original(sol.vertices))


def _merge_stats(into: SolveStats, src: SolveStats | None) -> None:
    if src is None:
        return
    into.nodes += src.nodes
    into.max_dw = max(into.max_dw, src.max_dw)
    into.max_depth = max(into.max_depth, src.max_depth)
    into.base_budget += src.base_budget
    into.base_undominatable += src.base_undominatable
    into.base_exact += src.base_exact
    into.measure_violations += src.measure_violations


class _DstSolver:
    """Recursive worker; pure apart from the stats collector."""

    def __init__(self, ri, db, cfg, stats, deadline):
        self.ri = ri
        self.inst = ri.inst
        self.db = db
        self.cfg = cfg
        self.stats = stats
        self.deadline = deadline

    def solve(self, alive, y, depth, parent_mu, required_drop) -> Solution:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolverTimeout
        inst, db, stats = self.inst, self.db, self.stats
        part = _partition(self.ri, alive, y, db)
        if stats is not None:
            stats.nodes += 1
            stats.max_depth = max(stats.max_depth, depth)
            if parent_mu is not None and part.mu > parent_mu - required_drop:
                stats.measure_violations += 1
                raise AssertionError(
                    f"measure failed to drop: {parent_mu} -> {part.mu} "
                    f"(required drop {required_drop})"
                )
        if len(y) > inst.k:
            if stats is not None:
                stats.base_budget += 1
            return Solution.infeasible()
        if len(part.wl) > db * (inst.k - len(y)):
            if stats is not None:
                stats.base_undominatable += 1
            return Solution.infeasible()
        if not part.bh:
            if stats is not None:
                stats.base_exact += 1
            return self._exact_base(alive, y, part)
        v = min(part.wh, key=lambda t: (self._dw(t, part.bh), t))
        preds = sorted(p for p in inst.d.in_neighbors(v) if p in part.bh)
        if stats is not None:
            stats.max_dw = max(stats.max_dw, len(preds))
        best = Solution.infeasible()
        for u in preds:
            cand = self.solve(alive, y | {u}, depth + 1, part.mu, db)
            if cand.better_than(best):
                best = cand
        cand = self.solve(alive - frozenset(preds), y, depth + 1, part.mu, 1)
        if cand.better_than(best):
            best = cand
        return best

    def solve_root_parallel(self, alive, y) -> Solution:
        """Explore the root's branches concurrently, combine by size.

        Each sibling gets an independent solver (own stats collector, so
        no shared mutable state); collectors are merged afterwards.
        """
        inst, db = self.inst, self.db
        part = _partition(self.ri, alive, y, db)
        if len(y) > inst.k or len(part.wl) > db * (inst.k - len(y)) or not part.bh:
            return self.solve(alive, y, 0, None, 0)
        v = min(part.wh, key=lambda t: (self._dw(t, part.bh), t))
        preds = sorted(p for p in inst.d.in_neighbors(v) if p in part.bh)
        if self.stats is not None:
            self.stats.nodes += 1
            self.stats.max_dw = max(self.stats.max_dw, len(preds))
        jobs = [(alive, y | {u}, db) for u in preds]
        jobs.append((alive - frozenset(preds), y, 1))
        workers = []
        for _ in jobs:
            child_stats = SolveStats() if self.stats is not None else None
            workers.append(_DstSolver(self.ri, db, self.cfg, child_stats, self.deadline))

        def run(pair):
            worker, (job_alive, job_y, drop) = pair
            return worker.solve(job_alive, job_y, 1, part.mu, drop)

        with ThreadPoolExecutor() as pool:
            results = list(pool.map(run, zip(workers, jobs)))
        if self.stats is not None:
            for worker in workers:
                _merge_stats(self.stats, worker.stats)
        best = Solution.infeasible()
        for cand in results:
            if cand.better_than(best):
                best = cand
        return best

    def _dw(self, t: int, bh: frozenset[int]) -> int:
        return sum(1 for p in self.inst.d.in_neighbors(t) if p in bh)

    def _exact_base(self, alive, y, part) -> Solution:
        """No heavy vertices left: one exact augmenting-set query."""
        inst = self.inst
        required = y | (self.ri.source_terminals - part.t1)
        assert not part.wh
        assert required == y | part.wl
        sub, old_ids = induced_subdigraph(inst.d, alive)
        pos = {v: i for i, v in enumerate(old_ids)}
        query = AugmentQuery(
            d=sub,
            root=pos[inst.root],
            free=frozenset(pos[v] for v in inst.terminals | y),
            required=frozenset(pos[v] for v in required),
        )
        extra = min_augmenting_set(query)
        if extra is None:
            return Solution.infeasible()
        total = y | frozenset(old_ids[v] for v in extra)
        if len(total) > inst.k:
            return Solution.infeasible()
        return Solution(vertices=total)
