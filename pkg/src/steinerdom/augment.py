"""Minimum augmenting set: the exact subroutine behind both solvers.

Given a digraph, a root, a set of free vertices (usable at no cost) and
a required subset of them, find the smallest set of non-free vertices
whose addition gives the root a directed path to every required vertex.

The search runs a Dreyfus-Wagner style dynamic program over subsets of
the required vertices.  Vertex costs (0 for free vertices and the root,
1 otherwise) are encoded as arc weights by splitting every vertex into
an in-copy and an out-copy joined by an arc carrying the vertex cost;
original arcs become weight-0 arcs between out- and in-copies.  Tables
``cost[X][x]`` hold the cheapest way to connect split-node ``x`` to all
required targets in ``X``, built by the usual merge (split ``X`` at
``x``) and extend (walk a path, one Dijkstra pass per subset) moves,
with backpointers for set recovery.

Everything is deterministic: subsets are scanned in increasing numeric
order, vertices in increasing id, and reconstruction prefers the merge
move over the extend move on ties.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graphs import Digraph, reachable_from

_INF = 1 << 30


@dataclass(frozen=True)
class AugmentQuery:
    """Inputs for :func:`min_augmenting_set`.

    ``free`` vertices cost nothing to route through (the solvers pass
    their terminal set here); ``required`` is the subset of ``free``
    that must end up reachable from ``root``.
    """

    d: Digraph
    root: int
    free: frozenset[int]
    required: frozenset[int]

    def __post_init__(self):
        if not (0 <= self.root < self.d.n):
            raise ValueError("root not in graph")
        if self.root in self.free:
            raise ValueError("root may not be listed as a free vertex")
        for v in self.free:
            if not (0 <= v < self.d.n):
                raise ValueError(f"free vertex {v} not in graph")
        if not self.required <= self.free:
            raise ValueError("required vertices must be a subset of the free set")


def min_augmenting_set(q: AugmentQuery) -> frozenset[int] | None:
    """Smallest vertex set connecting the root to every required vertex.

    Returns a set disjoint from ``free | {root}`` of minimum size such
    that the induced digraph on it plus the free vertices and the root
    contains a path from the root to each required vertex, or ``None``
    when even the full graph has no such paths.  Among minimum-size sets
    the returned one is a deterministic function of the query.
    """
    targets = sorted(q.required)
    if not targets:
        return frozenset()
    reachable = reachable_from(q.d, q.root)
    if not q.required <= reachable:
        return None

    n = q.d.n
    free_or_root = q.free | {q.root}
    # split nodes: in-copy 2v, out-copy 2v+1
    radj: list[list[tuple[int, int]]] = [[] for _ in range(2 * n)]
    for v in range(n):
        radj[2 * v + 1].append((2 * v, 0 if v in free_or_root else 1))
    for u, v in q.d.arcs():
        radj[2 * v].append((2 * u + 1, 0))

    t = len(targets)
    full = (1 << t) - 1
    cost: list[list[int]] = [[] for _ in range(full + 1)]
    parent: list[list[int]] = [[] for _ in range(full + 1)]
    merge_bp: list[list[int]] = [[] for _ in range(full + 1)]

    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            g = [_INF] * (2 * n)
            g[2 * targets[mask.bit_length() - 1]] = 0
            bp = [0] * (2 * n)
        else:
            g = [_INF] * (2 * n)
            bp = [0] * (2 * n)
            # proper non-empty submasks in increasing numeric order
            comp = (mask - 1) & mask
            while comp:
                sub = mask ^ comp
                left, right = cost[sub], cost[comp]
                for x in range(2 * n):
                    val = left[x] + right[x]
                    if val < g[x]:
                        g[x] = val
                        bp[x] = sub
                comp = (comp - 1) & mask
        par = [-1] * (2 * n)
        dist = g
        heap = [(dist[x], x) for x in range(2 * n) if dist[x] < _INF]
        heapq.heapify(heap)
        while heap:
            dy, y = heapq.heappop(heap)
            if dy > dist[y]:
                continue
            for x, w in radj[y]:
                nd = dy + w
                if nd < dist[x]:
                    dist[x] = nd
                    par[x] = y
                    heapq.heappush(heap, (nd, x))
        cost[mask] = dist
        parent[mask] = par
        merge_bp[mask] = bp

    root_out = 2 * q.root + 1
    best = cost[full][root_out]
    assert best < _INF  # reachability was checked up front

    chosen: set[int] = set()
    stack = [(root_out, full)]
    while stack:
        x, mask = stack.pop()
        par = parent[mask]
        while par[x] != -1:
            y = par[x]
            if y == x + 1 and x % 2 == 0:
                v = x // 2
                if v not in free_or_root:
                    chosen.add(v)
            x = y
        if mask & (mask - 1) != 0:
            sub = merge_bp[mask][x]
            stack.append((x, sub))
            stack.append((x, mask ^ sub))

    result = frozenset(chosen)
    assert len(result) == best
    allowed = free_or_root | result
    assert q.required <= reachable_from(q.d, q.root, allowed)
    return result
