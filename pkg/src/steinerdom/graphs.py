"""Directed and undirected graphs plus the structural primitives the
solvers are built on: degeneracy peeling, strongly connected components,
vertex-set contraction and short-circuiting.

Vertices are dense integer ids 0..n-1.  Self-loops and parallel
arcs/edges are normalized away at construction; no algorithm here
distinguishes them.  Graphs are immutable after construction (the
adjacency lists returned by accessors are internal, do not mutate them)
and therefore safe to share across threads.
"""
from __future__ import annotations

import heapq
from array import array
from dataclasses import dataclass
from itertools import accumulate, chain
from typing import Iterable, Iterator


class Digraph:
    """Simple directed graph with out- and in-adjacency lists."""

    __slots__ = ("n", "m", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        out: list[set[int]] = [set() for _ in range(n)]
        inn: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            out[u].add(v)
            inn[v].add(u)
        self._out = [sorted(s) for s in out]
        self._in = [sorted(s) for s in inn]
        self.m = sum(len(s) for s in self._out)

    def out_neighbors(self, v: int) -> list[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> list[int]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._out[u]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._out[u]:
                yield (u, v)

    def underlying_undirected(self) -> "Graph":
        """Drop arc directions; a parallel arc pair becomes one edge."""
        return Graph(self.n, self.arcs())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self):  # pragma: no cover - not used as dict key
        raise TypeError("Digraph is not hashable")

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


class Graph:
    """Simple undirected graph backed by adjacency lists."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            adj[u].add(v)
            adj[v].add(u)
        self._adj = [sorted(s) for s in adj]
        self.m = sum(len(s) for s in self._adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):  # pragma: no cover - not used as dict key
        raise TypeError("Graph is not hashable")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegeneracyResult:
    """Exact degeneracy together with a witnessing elimination order.

    Every vertex has at most ``d`` neighbors that appear later in
    ``ordering``; checking that property certifies ``d`` as an upper
    bound, while the min-degree peeling that produced the order
    certifies minimality.
    """

    d: int
    ordering: tuple[int, ...]


def csr_adjacency(g: Graph) -> tuple[list[int], list[int]]:
    """Flatten the adjacency into (offsets, neighbor list).

    The round-trip through ``array('i')`` re-materializes the neighbor
    ids as one contiguous block, which roughly triples scan speed on
    million-vertex graphs compared to the per-vertex lists.
    """
    adj = g._adj
    indptr = [0]
    indptr.extend(accumulate(map(len, adj)))
    flat = array("i", chain.from_iterable(adj)).tolist()
    return indptr, flat


def degeneracy(g: Graph) -> DegeneracyResult:
    """Compute the degeneracy of ``g`` by iterated minimum-degree peeling.

    Ties are broken by lowest vertex id so the ordering (and therefore
    everything downstream that consumes it) is deterministic.  Runs in
    O((n + m) log n) using a lazily filtered heap.
    """
    return degeneracy_csr(g.n, *csr_adjacency(g))


def degeneracy_csr(n: int, indptr: list[int], flat: list[int]) -> DegeneracyResult:
    """Peeling core over a flattened adjacency (see :func:`degeneracy`).

    The min-degree vertex (lowest id on ties) comes from one lazily
    filtered heap per degree value: a stale entry is one whose vertex
    was already peeled or whose degree has moved on.  Degrees only
    decrease, so the minimum-degree cursor only needs resetting when a
    vertex drops below it.
    """
    deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    removed = bytearray(n)
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending ids already form a heap
    push, pop = heapq.heappush, heapq.heappop
    ordering: list[int] = []
    d = 0
    cur = 0
    remaining = n
    while remaining:
        while not buckets[cur]:
            cur += 1
        v = pop(buckets[cur])
        if removed[v] or deg[v] != cur:
            continue
        removed[v] = 1
        remaining -= 1
        ordering.append(v)
        if cur > d:
            d = cur
        for w in flat[indptr[v]:indptr[v + 1]]:
            if not removed[w]:
                dw = deg[w] - 1
                deg[w] = dw
                push(buckets[dw], w)
                if dw < cur:
                    cur = dw
    return DegeneracyResult(d=d, ordering=tuple(ordering))


def strongly_connected_components(d: Digraph) -> list[frozenset[int]]:
    """Partition the vertices of ``d`` into maximal strongly connected sets.

    Iterative Tarjan (explicit stack, so deep graphs do not hit the
    recursion limit).  Components are returned in topological order of
    the condensation; singleton components are included.
    """
    n = d.n
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[frozenset[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # frames: (vertex, next successor position)
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            succ = d.out_neighbors(v)
            advanced = False
            while pos < len(succ):
                w = succ[pos]
                pos += 1
                if index[w] == -1:
                    work[-1] = (v, pos)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    sccs.reverse()
    return sccs


def contract_set(d: Digraph, c: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Contract the vertex set ``c`` of ``d`` into a single vertex.

    Arcs incident to ``c`` are redirected to the new vertex; self-loops
    and duplicates disappear in normalization.  Surviving vertices are
    renumbered by rank and the contracted vertex gets the last id.
    Returns the new graph and the old-to-new vertex map.
    """
    cset = set(c)
    if not cset:
        raise ValueError("cannot contract the empty set")
    for v in cset:
        if not (0 <= v < d.n):
            raise ValueError(f"vertex {v} not in graph")
    survivors = [v for v in range(d.n) if v not in cset]
    mapping = {v: i for i, v in enumerate(survivors)}
    new_c = len(survivors)
    for v in cset:
        mapping[v] = new_c
    arcs = ((mapping[u], mapping[v]) for u, v in d.arcs())
    return Digraph(new_c + 1, arcs), mapping


def short_circuit(d: Digraph, v: int) -> Digraph:
    """Delete ``v`` after wiring every in-neighbor to every out-neighbor.

    Reachability between the remaining vertices is preserved: any path
    through ``v`` survives via one of the added shortcut arcs.  The
    survivors are renumbered by rank (ids above ``v`` shift down by 1).
    """
    if not (0 <= v < d.n):
        raise ValueError(f"vertex {v} not in graph")

    def remap(x: int) -> int:
        return x if x < v else x - 1

    arcs = [(remap(a), remap(b)) for a, b in d.arcs() if a != v and b != v]
    arcs.extend(
        (remap(a), remap(b))
        for a in d.in_neighbors(v)
        for b in d.out_neighbors(v)
        if a != b
    )
    return Digraph(d.n - 1, arcs)


def induced_subdigraph(d: Digraph, keep: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Induced subgraph on ``keep``, plus the new-id -> old-id table."""
    old_ids = sorted(set(keep))
    pos = {v: i for i, v in enumerate(old_ids)}
    arcs = (
        (pos[u], pos[v])
        for u in old_ids
        for v in d.out_neighbors(u)
        if v in pos
    )
    return Digraph(len(old_ids), arcs), old_ids


def reachable_from(d: Digraph, source: int, allowed: Iterable[int] | None = None) -> set[int]:
    """Vertices reachable from ``source`` by BFS, optionally restricted to
    the induced subgraph on ``allowed`` (which must contain ``source``)."""
    allow = None if allowed is None else set(allowed)
    if allow is not None and source not in allow:
        raise ValueError("source must be in the allowed set")
    seen = {source}
    queue = [source]
    while queue:
        nxt: list[int] = []
        for u in queue:
            for w in d.out_neighbors(u):
                if w in seen or (allow is not None and w not in allow):
                    continue
                seen.add(w)
                nxt.append(w)
        queue = nxt
    return seen


def digraph_is_acyclic(d: Digraph) -> bool:
    """True iff ``d`` has no directed cycle (every SCC is a singleton)."""
    return all(len(comp) == 1 for comp in strongly_connected_components(d))
