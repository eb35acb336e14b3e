"""Directed Steiner Tree problem model and preprocessing.

An instance asks for at most ``k`` non-terminals whose addition lets the
root reach every terminal inside the induced digraph.  The one
preprocessing rule contracts every strongly connected component of the
terminal-induced subdigraph with two or more vertices down to a single
terminal; afterwards the terminal subdigraph is acyclic and reaching the
source terminals (those with no terminal in-neighbor) suffices.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import (
    Digraph,
    digraph_is_acyclic,
    induced_subdigraph,
    reachable_from,
    strongly_connected_components,
)


@dataclass(frozen=True)
class DstInstance:
    """A Directed Steiner Tree instance (digraph, root, terminals, budget)."""

    d: Digraph
    root: int
    terminals: frozenset[int]
    k: int

    def __post_init__(self):
        if not (0 <= self.root < self.d.n):
            raise ValueError("root not in graph")
        if self.root in self.terminals:
            raise ValueError("root may not be a terminal")
        for t in self.terminals:
            if not (0 <= t < self.d.n):
                raise ValueError(f"terminal {t} not in graph")
        if self.k < 0:
            raise ValueError("budget must be non-negative")

    def non_terminals(self) -> list[int]:
        """Vertices eligible for a solution, ascending."""
        excluded = self.terminals | {self.root}
        return [v for v in range(self.d.n) if v not in excluded]


@dataclass(frozen=True)
class Solution:
    """A candidate solution, or the marker that none exists within budget."""

    vertices: frozenset[int]
    feasible: bool = True

    @classmethod
    def infeasible(cls) -> "Solution":
        return cls(vertices=frozenset(), feasible=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def better_than(self, other: "Solution") -> bool:
        """Strictly smaller; an infeasible solution is never better."""
        if not self.feasible:
            return False
        return not other.feasible or self.size < other.size


@dataclass(frozen=True)
class ReducedInstance:
    """A DST instance whose terminal subdigraph is acyclic.

    ``contraction_map`` sends each original vertex to its reduced id.  It
    is injective on non-terminals, so solutions transfer back and forth
    unchanged (contraction only ever merges terminals).
    """

    inst: DstInstance
    source_terminals: frozenset[int]
    contraction_map: dict[int, int] = field(compare=False)

    def to_original(self, vertices: frozenset[int]) -> frozenset[int]:
        """Map a set of reduced non-terminals back to original ids."""
        inverse = {new: old for old, new in self.contraction_map.items()
                   if new not in self.inst.terminals}
        return frozenset(inverse[v] for v in vertices)


def reduce_instance(inst: DstInstance) -> ReducedInstance:
    """Contract every nontrivial SCC of the terminal subdigraph.

    One condensation pass reaches the same fixpoint as repeatedly
    contracting single components.  Budget and non-terminals are
    untouched, so a non-terminal set solves the original instance iff
    its image solves the reduced one.
    """
    term_sorted = sorted(inst.terminals)
    sub, old_ids = induced_subdigraph(inst.d, term_sorted)
    nontrivial = [
        sorted(old_ids[v] for v in comp)
        for comp in strongly_connected_components(sub)
        if len(comp) >= 2
    ]
    merged = {v for comp in nontrivial for v in comp}
    survivors = [v for v in range(inst.d.n) if v not in merged]
    mapping = {v: i for i, v in enumerate(survivors)}
    # one fresh terminal per contracted component, appended after the
    # survivors in ascending order of smallest member
    for i, comp in enumerate(sorted(nontrivial)):
        for v in comp:
            mapping[v] = len(survivors) + i
    n_new = len(survivors) + len(nontrivial)
    d_new = Digraph(n_new, ((mapping[u], mapping[v]) for u, v in inst.d.arcs()))
    t_new = frozenset(mapping[t] for t in inst.terminals)
    reduced = DstInstance(d=d_new, root=mapping[inst.root], terminals=t_new, k=inst.k)
    assert _terminal_subdigraph_is_acyclic(reduced)
    t0 = _compute_source_terminals(reduced)
    return ReducedInstance(inst=reduced, source_terminals=t0, contraction_map=mapping)


def source_terminals(ri: ReducedInstance) -> frozenset[int]:
    """Terminals with no in-neighbor among terminals.

    Every terminal of a reduced instance is reachable inside the
    terminal subdigraph from one of these, so a vertex set connects the
    root to all terminals iff it connects it to all source terminals.
    """
    return _compute_source_terminals(ri.inst)


def verify_dst(inst: DstInstance, sol: Solution) -> bool:
    """Check a solution against the instance from scratch."""
    if not sol.feasible:
        return False
    s = sol.vertices
    if len(s) > inst.k:
        return False
    if s & (inst.terminals | {inst.root}):
        return False
    if any(not (0 <= v < inst.d.n) for v in s):
        return False
    allowed = s | inst.terminals | {inst.root}
    reached = reachable_from(inst.d, inst.root, allowed)
    return inst.terminals <= reached


def _compute_source_terminals(inst: DstInstance) -> frozenset[int]:
    terms = inst.terminals
    return frozenset(
        t for t in terms
        if not any(p in terms for p in inst.d.in_neighbors(t))
    )


def _terminal_subdigraph_is_acyclic(inst: DstInstance) -> bool:
    sub, _ = induced_subdigraph(inst.d, inst.terminals)
    return digraph_is_acyclic(sub)
