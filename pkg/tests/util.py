"""Shared builders for seeded random test instances."""
from __future__ import annotations

import random
from itertools import combinations

from steinerdom import (
    Digraph,
    DsInstance,
    DstInstance,
    Graph,
    SetCoverInstance,
)
from steinerdom.graphs import reachable_from


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    rng = random.Random(seed)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n, arcs)


def random_setcover(seed: int, max_elems: int = 6, max_sets: int = 6) -> SetCoverInstance:
    """Random instance with every element covered and non-empty sets."""
    rng = random.Random(seed)
    n_elems = rng.randint(1, max_elems)
    m = rng.randint(1, max_sets)
    sets = [
        frozenset(rng.sample(range(n_elems), rng.randint(1, n_elems)))
        for _ in range(m)
    ]
    covered = set().union(*sets)
    missing = [e for e in range(n_elems) if e not in covered]
    if missing:
        i = rng.randrange(m)
        sets[i] = sets[i] | frozenset(missing)
    return SetCoverInstance(n_elems=n_elems, sets=tuple(sets), k=m)


def random_dst_with_terminal_cycles(seed: int, max_n: int = 12) -> DstInstance | None:
    """Random instance whose terminal subdigraph contains a cycle, or None.

    Dense arcs and a large terminal fraction make cycles likely; the
    caller scans seeds and keeps the hits.
    """
    rng = random.Random(seed)
    n = rng.randint(4, max_n)
    arcs = [
        (u, v) for u in range(n) for v in range(n)
        if u != v and rng.random() < rng.choice([0.2, 0.35])
    ]
    d = Digraph(n, arcs)
    t_count = rng.randint(2, n - 1)
    terminals = frozenset(rng.sample(range(n), t_count))
    root = rng.choice([v for v in range(n) if v not in terminals])
    inst = DstInstance(d=d, root=root, terminals=terminals, k=rng.randint(0, 4))
    if _terminal_cycle_exists(inst):
        return inst
    return None


def _terminal_cycle_exists(inst: DstInstance) -> bool:
    terms = inst.terminals
    for t in terms:
        stack = [u for u in inst.d.out_neighbors(t) if u in terms]
        seen = set(stack)
        while stack:
            u = stack.pop()
            if u == t:
                return True
            for w in inst.d.out_neighbors(u):
                if w in terms and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return False


def random_ds_instance(seed: int, max_n: int = 14, max_k: int = 4) -> DsInstance:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    g = random_graph(n, rng.choice([0.15, 0.25, 0.4]), seed * 31 + 7)
    return DsInstance(g=g, k=rng.randint(0, max_k))


def brute_force_augment_size(d, root, free, required) -> int | None:
    """Reference for the augmenting-set subroutine: sets by increasing size."""
    candidates = [v for v in range(d.n) if v not in free and v != root]
    for size in range(len(candidates) + 1):
        for combo in combinations(candidates, size):
            allowed = free | {root} | set(combo)
            if required <= reachable_from(d, root, allowed):
                return size
    return None
