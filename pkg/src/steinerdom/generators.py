"""Instance generators with known optimum correspondences.

The first four constructions translate between Set Cover, Directed
Steiner Tree and Dominating Set while preserving the optimum (exactly,
or shifted by a known constant), so generated families are
cross-checkable by independent oracles.  A grid-shaped Set Cover builder
encodes partitioned subgraph isomorphism.  A seeded sparse-digraph
generator rounds out the test harness.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .domset import DsInstance
from .graphs import Digraph, Graph
from .instances import DstInstance

DEFAULT_PADDING_CAP = 10**6


class PaddingCapExceeded(ValueError):
    """Padding vertex count would exceed the configured cap."""


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe ``range(n_elems)``, a family of subsets, and a budget."""

    n_elems: int
    sets: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self):
        if self.n_elems < 0 or self.k < 0:
            raise ValueError("sizes must be non-negative")
        for i, s in enumerate(self.sets):
            if not s:
                raise ValueError(f"set {i} is empty")
            for e in s:
                if not (0 <= e < self.n_elems):
                    raise ValueError(f"set {i} contains out-of-range element {e}")

    def covers(self) -> list[list[int]]:
        """For each element, the ascending indices of sets containing it."""
        out: list[list[int]] = [[] for _ in range(self.n_elems)]
        for i, s in enumerate(self.sets):
            for e in s:
                out[e].append(i)
        return out


@dataclass(frozen=True)
class PsiInstance:
    """A host graph, a pattern graph, and a coloring of the host.

    Asks whether the pattern embeds into the host with vertex i of the
    pattern mapped into color class i.  The pattern must have no
    isolated vertices.
    """

    host: Graph
    pattern: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.host.n:
            raise ValueError("need one color per host vertex")
        for c in self.colors:
            if not (0 <= c < max(self.pattern.n, 1)):
                raise ValueError(f"color {c} out of range")
        for v in range(self.pattern.n):
            if self.pattern.degree(v) == 0:
                raise ValueError("pattern has an isolated vertex")


def gen_dst_from_setcover_2deg(sc: SetCoverInstance) -> DstInstance:
    """Set Cover as Directed Steiner Tree on a degeneracy-2 digraph.

    One vertex per set; per element a directed cycle with one position
    per covering set, entered by an arc from each of those set vertices;
    a master cycle feeding every set vertex, rooted at its one spare
    position.  Every cycle arc is subdivided and all cycle and
    subdivision vertices are terminals, so the set vertices are the only
    choosable vertices and the two optima coincide.  An element in a
    single set yields a one-vertex "cycle" with no arc (its self-loop
    would contribute nothing).
    """
    covers = sc.covers()
    for e, c in enumerate(covers):
        if not c:
            raise ValueError(f"element {e} is covered by no set")
    m = len(sc.sets)
    ids = _IdAllocator()
    master = [ids.take() for _ in range(m + 1)]
    root = master[0]
    fvert = [ids.take() for _ in range(m)]
    cycles = [[ids.take() for _ in c] for c in covers]

    arcs: list[tuple[int, int]] = []
    terminals: list[int] = []
    terminals.extend(master[1:])
    for cyc in cycles:
        terminals.extend(cyc)

    def subdivided(a: int, b: int) -> None:
        s = ids.take()
        terminals.append(s)
        arcs.append((a, s))
        arcs.append((s, b))

    if m >= 1:
        for j in range(m + 1):
            subdivided(master[j], master[(j + 1) % (m + 1)])
        for i in range(m):
            arcs.append((master[i + 1], fvert[i]))
    for e in range(sc.n_elems):
        cyc = cycles[e]
        if len(cyc) >= 2:
            for j in range(len(cyc)):
                subdivided(cyc[j], cyc[(j + 1) % len(cyc)])
        for slot, i in enumerate(covers[e]):
            arcs.append((fvert[i], cyc[slot]))
    return DstInstance(
        d=Digraph(ids.n, arcs),
        root=root,
        terminals=frozenset(terminals),
        k=sc.k,
    )


def gen_dst_from_setcover_logdeg(
    sc: SetCoverInstance,
    gamma: float,
    c: float,
    cap: int = DEFAULT_PADDING_CAP,
) -> DstInstance:
    """Set Cover as Directed Steiner Tree with bipartite core plus padding.

    Root feeds one vertex per set, sets feed their elements (the
    terminals); ceil(m ** (2*gamma/c)) isolated non-terminals pad the
    vertex count so the degeneracy-to-size ratio can be dialed.
    """
    _check_rate(gamma, c)
    m = len(sc.sets)
    padding = _padding_count(m, gamma, c, cap)
    ids = _IdAllocator()
    root = ids.take()
    fvert = [ids.take() for _ in range(m)]
    elems = [ids.take() for _ in range(sc.n_elems)]
    ids.bulk(padding)
    arcs = [(root, f) for f in fvert]
    for i, s in enumerate(sc.sets):
        for e in sorted(s):
            arcs.append((fvert[i], elems[e]))
    return DstInstance(
        d=Digraph(ids.n, arcs),
        root=root,
        terminals=frozenset(elems),
        k=sc.k,
    )


def gen_domset_from_setcover(
    sc: SetCoverInstance,
    gamma: float,
    c: float,
    cap: int = DEFAULT_PADDING_CAP,
) -> DsInstance:
    """Set Cover as Dominating Set; the optimum shifts by exactly 2.

    A hub adjacent to every set vertex plus a pendant forces the hub
    into an optimal solution; a disjoint star (ceil(m ** (2*gamma/c))
    leaves) forces its center; what remains is covering the element
    vertices by set vertices.  Needs every element covered and at least
    one set, otherwise the shift argument breaks down.
    """
    _check_rate(gamma, c)
    m = len(sc.sets)
    if m == 0:
        raise ValueError("need at least one set")
    for e, cov in enumerate(sc.covers()):
        if not cov:
            raise ValueError(f"element {e} is covered by no set")
    leaves = _padding_count(m, gamma, c, cap)
    ids = _IdAllocator()
    hub = ids.take()
    pendant = ids.take()
    star_center = ids.take()
    fvert = [ids.take() for _ in range(m)]
    elems = [ids.take() for _ in range(sc.n_elems)]
    star_leaves = [ids.take() for _ in range(leaves)]
    edges = [(hub, pendant)]
    edges.extend((hub, f) for f in fvert)
    for i, s in enumerate(sc.sets):
        for e in sorted(s):
            edges.append((fvert[i], elems[e]))
    edges.extend((star_center, leaf) for leaf in star_leaves)
    return DsInstance(g=Graph(ids.n, edges), k=sc.k + 2)


def gen_dst_from_domset(ds: DsInstance) -> DstInstance:
    """Dominating Set as Directed Steiner Tree on two layers.

    Each vertex v gets a choosable copy (v,1) and a terminal copy (v,2);
    (u,1) reaches (v,2) iff u dominates v, and the root reaches every
    first-layer copy, so S dominates the graph iff the first-layer
    copies of S solve the output.
    """
    n = ds.g.n
    root = 0
    layer1 = lambda v: 1 + v
    layer2 = lambda v: 1 + n + v
    arcs = [(root, layer1(v)) for v in range(n)]
    for v in range(n):
        arcs.append((layer1(v), layer2(v)))
        for u in ds.g.neighbors(v):
            arcs.append((layer1(u), layer2(v)))
    return DstInstance(
        d=Digraph(1 + 2 * n, arcs),
        root=root,
        terminals=frozenset(layer2(v) for v in range(n)),
        k=ds.k,
    )


@dataclass(frozen=True)
class PsiGridLayout:
    """Bookkeeping behind :func:`gen_setcover_from_psi` (used by tests).

    ``positions`` maps a grid position to the indices of the sets placed
    on it; ``set_endpoints`` gives each set's host-vertex pair (u, v)
    with u in the row's color class and v in the column's;
    ``pair_blocks`` maps each consecutive position pair to its block of
    gadget elements; ``ids`` is the subset code assigned to each host
    vertex.
    """

    b: int
    ids: tuple[frozenset[int], ...]
    positions: dict[tuple[int, int], list[int]]
    set_endpoints: list[tuple[int, int]]
    s_elem: dict[tuple[int, int], int]
    pair_blocks: dict[tuple[tuple[int, int], tuple[int, int]], list[int]]


def psi_grid_layout(psi: PsiInstance) -> PsiGridLayout:
    """Lay out the grid of sets encoding a PSI instance.

    Sets live on an l-by-l grid: position (i, j) with i != j holds one
    set per host edge between color classes i and j (provided pattern
    vertices i and j are adjacent), the diagonal (i, i) one set per
    host vertex of color i.  Every pattern edge must be witnessed by at
    least one host edge, otherwise the instance is rejected.
    """
    host, pattern, colors = psi.host, psi.pattern, psi.colors
    l = pattern.n
    n_h = host.n

    b = max(1, math.ceil(math.log2(max(n_h, 2))))
    while math.comb(2 * b, b) < n_h:
        b += 1
    # b-subsets of range(2b) in colexicographic order, one per host vertex
    colex = sorted(combinations(range(2 * b), b), key=lambda s: s[::-1])
    ids = tuple(frozenset(colex[v]) for v in range(n_h))

    by_class: list[list[int]] = [[] for _ in range(l)]
    for v in range(n_h):
        by_class[colors[v]].append(v)

    positions: dict[tuple[int, int], list[int]] = {}
    set_endpoints: list[tuple[int, int]] = []

    def place(i: int, j: int, u: int, v: int) -> None:
        positions.setdefault((i, j), []).append(len(set_endpoints))
        set_endpoints.append((u, v))

    grid_positions: list[tuple[int, int]] = []
    for i in range(l):
        for j in range(l):
            if i == j:
                if not by_class[i]:
                    raise ValueError(f"color class {i} has no host vertices")
                grid_positions.append((i, i))
                for v in by_class[i]:
                    place(i, i, v, v)
            elif pattern.has_edge(i, j):
                cross = sorted(
                    (u, w) if colors[u] == i else (w, u)
                    for (u, w) in host.edges()
                    if {colors[u], colors[w]} == {i, j}
                )
                if not cross:
                    raise ValueError(
                        f"pattern edge ({i}, {j}) has no host edge across "
                        f"its color classes"
                    )
                grid_positions.append((i, j))
                for u, w in cross:
                    place(i, j, u, w)

    nonempty = set(grid_positions)
    elem_counter = 0
    s_elem: dict[tuple[int, int], int] = {}
    for p in grid_positions:
        s_elem[p] = elem_counter
        elem_counter += 1
    pair_blocks: dict[tuple[tuple[int, int], tuple[int, int]], list[int]] = {}
    for i in range(l):
        row = sorted(j for (a, j) in nonempty if a == i)
        for j1, j2 in zip(row, row[1:]):
            pair_blocks[((i, j1), (i, j2))] = list(
                range(elem_counter, elem_counter + 2 * b)
            )
            elem_counter += 2 * b
    for j in range(l):
        col = sorted(i for (i, a) in nonempty if a == j)
        for i1, i2 in zip(col, col[1:]):
            pair_blocks[((i1, j), (i2, j))] = list(
                range(elem_counter, elem_counter + 2 * b)
            )
            elem_counter += 2 * b
    return PsiGridLayout(
        b=b,
        ids=ids,
        positions=positions,
        set_endpoints=set_endpoints,
        s_elem=s_elem,
        pair_blocks=pair_blocks,
    )


def gen_setcover_from_psi(psi: PsiInstance) -> SetCoverInstance:
    """PSI as Set Cover on the grid layout; budget = non-empty positions.

    Each set gets its position's marker element, so any cover picks one
    set per position.  Between consecutive positions in a row, a block
    of 2b gadget elements splits by the subset code of the row-class
    endpoint (the earlier set covers the complement of its code, the
    later one its own code), so exactly one set from each covers the
    block iff the two row-class endpoints agree.  Columns work the same
    way on the column-class endpoint.  A minimum cover therefore selects
    a consistent host vertex per class, and hits the budget iff the
    pattern embeds.
    """
    layout = psi_grid_layout(psi)
    n_sets = len(layout.set_endpoints)
    members: list[set[int]] = [set() for _ in range(n_sets)]
    for pos, set_idxs in layout.positions.items():
        for s in set_idxs:
            members[s].add(layout.s_elem[pos])
    for (p1, p2), block in layout.pair_blocks.items():
        row_pair = p1[0] == p2[0]
        for pos, take_code in ((p1, False), (p2, True)):
            for s in layout.positions[pos]:
                u, v = layout.set_endpoints[s]
                code = layout.ids[u] if row_pair else layout.ids[v]
                for a, elem in enumerate(block):
                    if (a in code) == take_code:
                        members[s].add(elem)
    n_elems = len(layout.s_elem) + 2 * layout.b * len(layout.pair_blocks)
    budget = 2 * psi.pattern.m + psi.pattern.n
    assert len(layout.positions) == budget, "every position must carry a set"
    return SetCoverInstance(
        n_elems=n_elems,
        sets=tuple(frozenset(s) for s in members),
        k=budget,
    )


def random_psi_instance(
    classes: int,
    class_size: int,
    extra_edge_prob: float,
    seed: int,
) -> PsiInstance:
    """Seeded random PSI instance with a planted embedding.

    The pattern is a random connected-enough graph on ``classes``
    vertices (no isolated ones); every color class gets ``class_size``
    host vertices; one host vertex per class realizes each pattern edge,
    plus extra noise edges across adjacent classes.  The planted
    embedding keeps the instance a yes-instance, which pins the optimum
    of the derived Set Cover instance at its budget.
    """
    if classes < 2:
        raise ValueError("need at least two color classes")
    if class_size < 1:
        raise ValueError("need at least one host vertex per class")
    rng = random.Random(seed)
    while True:
        pedges = [
            (a, b)
            for a in range(classes)
            for b in range(a + 1, classes)
            if rng.random() < 0.6
        ]
        if pedges and all(any(v in e for e in pedges) for v in range(classes)):
            break
    pattern = Graph(classes, pedges)
    colors = tuple(i for i in range(classes) for _ in range(class_size))
    start = lambda i: i * class_size
    planted = [start(i) + rng.randrange(class_size) for i in range(classes)]
    hedges: set[tuple[int, int]] = set()
    for a, b in pedges:
        u, v = planted[a], planted[b]
        hedges.add((min(u, v), max(u, v)))
        for _ in range(rng.randint(0, 3)):
            if rng.random() < extra_edge_prob:
                u = start(a) + rng.randrange(class_size)
                v = start(b) + rng.randrange(class_size)
                hedges.add((min(u, v), max(u, v)))
    host = Graph(classes * class_size, hedges)
    return PsiInstance(host=host, pattern=pattern, colors=colors)


def gen_random_sparse(
    n: int,
    d: int,
    terminal_fraction: float,
    k: int,
    seed: int,
    acyclic_terminals: bool = True,
) -> DstInstance:
    """Seeded random digraph of degeneracy at most ``d`` as a DST instance.

    Vertices are processed in a random order; each draws up to ``d``
    neighbors among its predecessors, each arc oriented by coin flip,
    except that arcs between two terminals follow ascending vertex id
    when ``acyclic_terminals`` is set (making the terminal subdigraph a
    DAG).  The root is uniform among non-terminals.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if not (0 <= d < n):
        raise ValueError("need 0 <= d < n")
    if not (0.0 <= terminal_fraction <= 1.0):
        raise ValueError("terminal fraction must be in [0, 1]")
    if k < 0:
        raise ValueError("budget must be non-negative")
    t_count = int(round(terminal_fraction * n))
    if t_count >= n:
        raise ValueError("at least one vertex must remain non-terminal")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    terminals = frozenset(rng.sample(range(n), t_count))
    root = rng.choice([v for v in range(n) if v not in terminals])
    arcs: list[tuple[int, int]] = []
    for i in range(1, n):
        v = order[i]
        limit = min(d, i)
        count = rng.randint(0, limit) if limit else 0
        for idx in rng.sample(range(i), count):
            w = order[idx]
            if acyclic_terminals and v in terminals and w in terminals:
                arcs.append((min(v, w), max(v, w)))
            elif rng.random() < 0.5:
                arcs.append((v, w))
            else:
                arcs.append((w, v))
    return DstInstance(d=Digraph(n, arcs), root=root, terminals=terminals, k=k)


class _IdAllocator:
    """Hands out consecutive vertex ids."""

    def __init__(self):
        self.n = 0

    def take(self) -> int:
        v = self.n
        self.n += 1
        return v

    def bulk(self, count: int) -> None:
        self.n += count


def _check_rate(gamma: float, c: float) -> None:
    if gamma <= 0 or c <= 0:
        raise ValueError("gamma and c must be positive")


def _padding_count(m: int, gamma: float, c: float, cap: int) -> int:
    count = math.ceil(m ** (2 * gamma / c)) if m else 0
    if count > cap:
        raise PaddingCapExceeded(
            f"padding of {count} vertices exceeds the cap of {cap}"
        )
    return count
