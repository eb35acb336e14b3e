"""Greedy dominating-set approximation for sparse graphs.

Runs the same partition as the exact solver but never branches: in each
round it picks the undominated vertex v with the fewest neighbors that
are heavy or still cheaply dominatable (the Bh and Wh classes) and adds
that whole neighborhood intersection to the solution, then re-derives
the partition.  Once no such vertex remains, the leftover independent
vertices Wl join the solution.  On a graph of degeneracy d the result is
at most d*d times optimal, computed in O(d n log n).

The partition is maintained incrementally: a vertex changing class
notifies its neighbors, every vertex tracks its count of neighbors in
Bh or Wh, and candidate vertices sit in a heap keyed by (count, id) with
lazy deletion (an entry is stale when its key no longer matches the
current count or the vertex left Wh).  Set evolution is monotone, which
keeps the signal volume linear in the edge count: W-vertices only ever
become dominated, dominated vertices only lose W-neighbors, and light
or chosen vertices never change class again.
"""
from __future__ import annotations

import heapq
from typing import Callable

from .graphs import Graph, csr_adjacency, degeneracy_csr

# vertex classes
_Y, _BH, _BL, _WH, _WL = 0, 1, 2, 3, 4


def ds_approx(
    g: Graph,
    trace: Callable[[int, int, int], None] | None = None,
    audit: bool = False,
) -> frozenset[int]:
    """Dominating set of ``g`` of size at most d*d times the optimum.

    Isolated vertices are pre-added (they belong to every dominating
    set).  ``trace``, if given, is called once per round with the picked
    vertex, its key, and the solution size after the round.  ``audit``
    recomputes the partition from scratch after every round and checks
    the incremental state against it (for tests; quadratic).
    """
    n = g.n
    if n == 0:
        return frozenset()
    indptr, flat = csr_adjacency(g)
    d = degeneracy_csr(n, indptr, flat).d

    deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    status = [_WH if deg[v] > 0 else _Y for v in range(n)]
    chosen = [v for v in range(n) if deg[v] == 0]
    # wdeg: neighbors still in W; cnt: neighbors in Bh or Wh (the heap key,
    # and Wh membership for a W-vertex is exactly cnt > 0)
    wdeg = deg[:]
    cnt = deg[:]
    # the (count, id)-minimal candidate comes from one lazily filtered
    # heap per count value; an entry is stale once its vertex left Wh or
    # its count moved on, and counts only decrease
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    wh_count = 0
    for v in range(n):
        if status[v] == _WH:
            buckets[cnt[v]].append(v)  # ascending ids already form a heap
            wh_count += 1
    push, pop = heapq.heappush, heapq.heappop
    cur = 0

    touched: list[int] = []
    flag = bytearray(n)

    while wh_count:
        while not buckets[cur]:
            cur += 1
        v = pop(buckets[cur])
        if status[v] != _WH or cnt[v] != cur:
            continue
        key = cur
        eligible = [
            u for u in flat[indptr[v]:indptr[v + 1]]
            if status[u] == _BH or status[u] == _WH
        ]
        if audit:
            assert len(eligible) == key, "heap key out of sync with true count"

        # the picked neighborhood joins the solution
        w_leavers = []
        union_leavers = []
        for u in eligible:
            if status[u] == _WH:
                w_leavers.append(u)
                wh_count -= 1
            status[u] = _Y
            chosen.append(u)
            union_leavers.append(u)

        # W-vertices adjacent to a new Y-vertex become dominated
        newly_dominated: list[int] = []
        for u in eligible:
            for w in flat[indptr[u]:indptr[u + 1]]:
                st = status[w]
                if st == _WH and not flag[w]:
                    flag[w] = 1
                    touched.append(w)
                    newly_dominated.append(w)
                elif st == _WL:
                    raise AssertionError("Wl vertices have no Bh or Wh neighbors")
        wh_count -= len(newly_dominated)
        for w in newly_dominated:
            w_leavers.append(w)

        # all W departures first, so the heavy/light split below sees the
        # final W-degrees
        demote_candidates: list[int] = []
        for x in w_leavers:
            for u in flat[indptr[x]:indptr[x + 1]]:
                wdeg[u] -= 1
                if status[u] == _BH and wdeg[u] <= d:
                    demote_candidates.append(u)
        for w in newly_dominated:
            if wdeg[w] >= d + 1:
                status[w] = _BH
            else:
                status[w] = _BL
                union_leavers.append(w)
        for u in demote_candidates:
            if status[u] == _BH and wdeg[u] <= d:
                status[u] = _BL
                union_leavers.append(u)

        # count updates ripple to neighbors; only W-vertices care
        dirty: list[int] = []
        for x in union_leavers:
            for u in flat[indptr[x]:indptr[x + 1]]:
                cnt[u] -= 1
                if status[u] == _WH and not flag[u]:
                    flag[u] = 1
                    touched.append(u)
                    dirty.append(u)
        for u in dirty:
            if status[u] != _WH:
                continue
            cu = cnt[u]
            if cu == 0:
                status[u] = _WL
                wh_count -= 1
                # a vertex entering Wl has no Bh or Wh neighbors left, so
                # these decrements never dirty another W-vertex
                for nb in flat[indptr[u]:indptr[u + 1]]:
                    cnt[nb] -= 1
            else:
                push(buckets[cu], u)
                if cu < cur:
                    cur = cu

        for x in touched:
            flag[x] = 0
        touched.clear()

        if trace is not None:
            trace(v, key, len(chosen))
        if audit:
            _check_state(g, d, status, wdeg, cnt)

    chosen.extend(v for v in range(n) if status[v] == _WL)
    return frozenset(chosen)


def _check_state(g: Graph, d: int, status, wdeg, cnt) -> None:
    """Recompute the partition definitionally and compare (tests only)."""
    n = g.n
    in_y = {v for v in range(n) if status[v] == _Y}
    w_true = {
        v for v in range(n)
        if v not in in_y and not any(u in in_y for u in g.neighbors(v))
    }
    for v in range(n):
        wd = sum(1 for u in g.neighbors(v) if u in w_true)
        assert wdeg[v] == wd, f"wdeg[{v}]: {wdeg[v]} != {wd}"
    bh_true = {
        v for v in range(n)
        if v not in in_y and v not in w_true and wdeg[v] >= d + 1
    }
    wh_true = {
        v for v in w_true
        if any(u in bh_true or u in w_true for u in g.neighbors(v))
    }
    for v in range(n):
        if v in in_y:
            expected = _Y
        elif v in bh_true:
            expected = _BH
        elif v not in w_true:
            expected = _BL
        elif v in wh_true:
            expected = _WH
        else:
            expected = _WL
        assert status[v] == expected, f"status[{v}]: {status[v]} != {expected}"
        c = sum(1 for u in g.neighbors(v) if status[u] in (_BH, _WH))
        assert cnt[v] == c, f"cnt[{v}]: {cnt[v]} != {c}"
