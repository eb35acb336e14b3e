"""Exact branching solver for Dominating Set.

Shares its skeleton with the Directed Steiner Tree solver: a partial
solution Y splits the rest of the graph into B (already dominated) and W
(not yet), B splits by a degree bound db into heavy vertices (at least
db+1 neighbors still in W) and light ones, and W splits into Wh
(vertices with a neighbor in Bh or W, i.e. still cheaply dominatable)
and the independent remainder Wl whose only neighbors are light.

Branching picks v in Wh with the fewest neighbors in Bh or Wh and tries
adding each vertex of that closed neighborhood intersection to Y, plus
one branch where none of them is taken: the Bh neighbors are deleted and
the edges to the Wh neighbors removed, which pushes v into Wl.  The
measure db*(k - |Y|) - |Wl| drops by db in take branches and by 1 in the
delete branch.

The base case fires when Wh is empty (that also forces Bh empty, since a
heavy vertex would put its W-neighbors into Wh): W is then independent
with light neighbors only, so after moving degree-0 W vertices into Y it
remains to cover W by light vertices, solved exactly by orienting the
light-to-W edges away from a fresh root and asking the augmenting-set
subroutine for a minimum set reaching all of W.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .augment import AugmentQuery, min_augmenting_set
from .graphs import Digraph, Graph
from .instances import Solution
from .stats import SolveStats, SolverTimeout


@dataclass(frozen=True)
class DsInstance:
    """A Dominating Set instance (graph plus budget)."""

    g: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget must be non-negative")


@dataclass(frozen=True)
class DsState:
    """The vertex partition at one node of the branching tree."""

    y: frozenset[int]
    b: frozenset[int]
    w: frozenset[int]
    bh: frozenset[int]
    bl: frozenset[int]
    wh: frozenset[int]
    wl: frozenset[int]
    db: int


def verify_domset(g: Graph, s) -> bool:
    """True iff every vertex is in ``s`` or adjacent to a vertex in ``s``."""
    sset = set(s)
    if any(not (0 <= v < g.n) for v in sset):
        return False
    return all(
        v in sset or any(u in sset for u in g.neighbors(v))
        for v in range(g.n)
    )


def ds_compute_state(g: Graph, y: frozenset[int], db: int) -> DsState:
    """Partition the full graph for a partial solution ``y``."""
    for v in y:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph")
    return _state(g, frozenset(range(g.n)), frozenset(), y, db)


def _state(g: Graph, alive: frozenset[int], removed_edges: frozenset[tuple[int, int]],
           y: frozenset[int], db: int) -> DsState:
    def live_neighbors(v):
        return [
            u for u in g.neighbors(v)
            if u in alive and (min(u, v), max(u, v)) not in removed_edges
        ]

    b = frozenset(
        v for v in alive - y
        if any(u in y for u in live_neighbors(v))
    )
    w = alive - y - b
    bh = frozenset(
        v for v in b
        if sum(1 for u in live_neighbors(v) if u in w) >= db + 1
    )
    bl = b - bh
    wh = frozenset(
        v for v in w
        if any(u in bh or u in w for u in live_neighbors(v))
    )
    wl = w - wh
    return DsState(y=y, b=b, w=w, bh=bh, bl=bl, wh=wh, wl=wl, db=db)


def ds_solve(
    inst: DsInstance,
    db: int,
    y: frozenset[int] = frozenset(),
    stats: SolveStats | None = None,
    deterministic: bool = True,
    parallel: bool = False,
    time_limit: float | None = None,
) -> Solution:
    """Smallest dominating set of size <= k containing ``y``, else infeasible.

    Isolated input vertices are pre-added to ``y`` (they belong to every
    dominating set).  ``db`` is typically the degeneracy of the graph;
    correctness does not depend on the choice, only running time.
    """
    g = inst.g
    if db < 0:
        raise ValueError("degree bound must be non-negative")
    for v in y:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} not in graph")
    if stats is not None:
        stats.db_used = db
    y0 = y | frozenset(v for v in range(g.n) if g.degree(v) == 0)
    deadline = None
    if time_limit is not None:
        deadline = time.monotonic() + time_limit
    solver = _DsSolver(inst, db, stats, deadline)
    alive = frozenset(range(g.n))
    if parallel and not deterministic:
        return solver.solve_root_parallel(alive, y0)
    return solver.solve(alive, frozenset(), y0, 0, None, 0)


class _DsSolver:
    """Recursive worker over a masked view of the graph.

    Masking keeps deletion branches cheap: ``alive`` drops vertices,
    ``removed_edges`` drops single edges (both endpoints stay).  Deleted
    vertices are always dominated by Y already, so solutions of the
    masked graph remain dominating sets of the original.
    """

    def __init__(self, inst, db, stats, deadline):
        self.inst = inst
        self.g = inst.g
        self.db = db
        self.stats = stats
        self.deadline = deadline

    def _live_neighbors(self, v, alive, removed_edges):
        return [
            u for u in self.g.neighbors(v)
            if u in alive and (min(u, v), max(u, v)) not in removed_edges
        ]

    def solve(self, alive, removed_edges, y, depth, parent_mu, required_drop) -> Solution:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolverTimeout
        inst, db, stats = self.inst, self.db, self.stats
        state = _state(self.g, alive, removed_edges, y, db)
        mu = db * (inst.k - len(y)) - len(state.wl)
        if stats is not None:
            stats.nodes += 1
            stats.max_depth = max(stats.max_depth, depth)
            if parent_mu is not None and mu > parent_mu - required_drop:
                stats.measure_violations += 1
                raise AssertionError(
                    f"measure failed to drop: {parent_mu} -> {mu} "
                    f"(required drop {required_drop})"
                )
        if len(y) > inst.k:
            if stats is not None:
                stats.base_budget += 1
            return Solution.infeasible()
        if len(state.wl) > db * (inst.k - len(y)):
            if stats is not None:
                stats.base_undominatable += 1
            return Solution.infeasible()
        if not state.wh:
            if stats is not None:
                stats.base_exact += 1
            return self._exact_base(alive, removed_edges, y, state)
        v = min(
            state.wh,
            key=lambda t: (
                sum(1 for u in self._live_neighbors(t, alive, removed_edges)
                    if u in state.bh or u in state.wh),
                t,
            ),
        )
        live_nv = self._live_neighbors(v, alive, removed_edges)
        heavy_or_high = sorted(u for u in live_nv if u in state.bh or u in state.wh)
        if stats is not None:
            stats.max_dw = max(stats.max_dw, len(heavy_or_high))
        best = Solution.infeasible()
        for u in sorted(heavy_or_high + [v]):
            cand = self.solve(alive, removed_edges, y | {u}, depth + 1, mu, db)
            if cand.better_than(best):
                best = cand
        alive2 = alive - frozenset(u for u in live_nv if u in state.bh)
        removed2 = removed_edges | frozenset(
            (min(u, v), max(u, v)) for u in live_nv if u in state.wh
        )
        cand = self.solve(alive2, removed2, y, depth + 1, mu, 1)
        if cand.better_than(best):
            best = cand
        return best

    def solve_root_parallel(self, alive, y) -> Solution:
        """Concurrent sibling exploration at the root, combined by size."""
        from concurrent.futures import ThreadPoolExecutor

        inst, db = self.inst, self.db
        removed_edges: frozenset[tuple[int, int]] = frozenset()
        state = _state(self.g, alive, removed_edges, y, db)
        mu = db * (inst.k - len(y)) - len(state.wl)
        if len(y) > inst.k or len(state.wl) > db * (inst.k - len(y)) or not state.wh:
            return self.solve(alive, removed_edges, y, 0, None, 0)
        v = min(
            state.wh,
            key=lambda t: (
                sum(1 for u in self._live_neighbors(t, alive, removed_edges)
                    if u in state.bh or u in state.wh),
                t,
            ),
        )
        live_nv = self._live_neighbors(v, alive, removed_edges)
        heavy_or_high = sorted(u for u in live_nv if u in state.bh or u in state.wh)
        jobs = [
            (alive, removed_edges, y | {u}, db)
            for u in sorted(heavy_or_high + [v])
        ]
        alive2 = alive - frozenset(u for u in live_nv if u in state.bh)
        removed2 = frozenset((min(u, v), max(u, v)) for u in live_nv if u in state.wh)
        jobs.append((alive2, removed2, y, 1))
        workers = [
            _DsSolver(self.inst, db, SolveStats() if self.stats is not None else None,
                      self.deadline)
            for _ in jobs
        ]

        def run(pair):
            worker, (job_alive, job_removed, job_y, drop) = pair
            return worker.solve(job_alive, job_removed, job_y, 1, mu, drop)

        with ThreadPoolExecutor() as pool:
            results = list(pool.map(run, zip(workers, jobs)))
        if self.stats is not None:
            from .branching import _merge_stats

            self.stats.nodes += 1
            self.stats.max_dw = max(self.stats.max_dw, len(heavy_or_high))
            for worker in workers:
                _merge_stats(self.stats, worker.stats)
        best = Solution.infeasible()
        for cand in results:
            if cand.better_than(best):
                best = cand
        return best

    def _exact_base(self, alive, removed_edges, y, state) -> Solution:
        """Wh empty: cover the independent remainder by light vertices."""
        assert not state.bh, "a heavy vertex would put its W-neighbors into Wh"
        inst = self.inst
        isolated = frozenset(
            w for w in state.w
            if not self._live_neighbors(w, alive, removed_edges)
        )
        y2 = y | isolated
        remaining = sorted(state.w - isolated)
        if len(y2) > inst.k:
            return Solution.infeasible()
        if not remaining:
            return Solution(vertices=y2)
        light = sorted(state.bl)
        nodes = sorted(light + remaining)
        pos = {v: i for i, v in enumerate(nodes)}
        root = len(nodes)
        arcs = [(root, pos[b]) for b in light]
        rem_set = set(remaining)
        for b in light:
            for u in self._live_neighbors(b, alive, removed_edges):
                if u in rem_set:
                    arcs.append((pos[b], pos[u]))
        targets = frozenset(pos[w] for w in remaining)
        query = AugmentQuery(
            d=Digraph(root + 1, arcs),
            root=root,
            free=targets,
            required=targets,
        )
        extra = min_augmenting_set(query)
        assert extra is not None, "non-isolated W vertices have a light neighbor"
        total = y2 | frozenset(nodes[i] for i in extra)
        if len(total) > inst.k:
            return Solution.infeasible()
        return Solution(vertices=total)
