"""Plain-text instance files, DIMACS-adjacent and trivially diffable.

Comment lines start with ``c``.  The header is ``p <kind> <n> <m> <k>``
with kind one of dst / ds / sc.  Bodies:

  dst   one ``r <v>`` line, ``t <v>`` lines, exactly m ``a <u> <v>`` lines
  ds    exactly m ``e <u> <v>`` lines
  sc    exactly m ``s <set-id> <elem>...`` lines, set ids 1..m each once

Ids are 1-based in files and 0-based in memory.  Parsing is strict
(duplicates, self-loops, count mismatches and out-of-range ids are
errors naming the offending line); emitting writes the canonical sorted
form, so emit(parse(x)) is a fixpoint and parse(emit(i)) == i.
"""
from __future__ import annotations

from .domset import DsInstance
from .generators import SetCoverInstance
from .graphs import Digraph, Graph
from .instances import DstInstance, Solution


class ParseError(Exception):
    """Malformed instance or solution text; message carries the line."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class _Lines:
    def __init__(self, text: str):
        self.items: list[tuple[int, list[str]]] = []
        for i, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped == "c" or stripped.startswith("c "):
                continue
            self.items.append((i, stripped.split()))

    def header(self, kind: str) -> tuple[int, int, int]:
        if not self.items:
            raise ParseError(0, "empty input")
        line_no, parts = self.items[0]
        if len(parts) != 5 or parts[0] != "p":
            raise ParseError(line_no, f"expected header 'p {kind} <n> <m> <k>'")
        if parts[1] != kind:
            raise ParseError(line_no, f"expected kind {kind!r}, got {parts[1]!r}")
        n, m, k = (_int(line_no, x) for x in parts[2:5])
        if n < 0 or m < 0 or k < 0:
            raise ParseError(line_no, "header counts must be non-negative")
        self.header_line = line_no
        return n, m, k

    def body(self):
        return self.items[1:]


def _int(line_no: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"expected an integer, got {token!r}") from None


def _vertex(line_no: int, token: str, n: int) -> int:
    v = _int(line_no, token)
    if not (1 <= v <= n):
        raise ParseError(line_no, f"id {v} out of range 1..{n}")
    return v - 1


def parse_dst(text: str) -> DstInstance:
    lines = _Lines(text)
    n, m, k = lines.header("dst")
    root: int | None = None
    terminals: set[int] = set()
    arcs: set[tuple[int, int]] = set()
    for line_no, parts in lines.body():
        tag = parts[0]
        if tag == "r":
            if len(parts) != 2:
                raise ParseError(line_no, "expected 'r <v>'")
            if root is not None:
                raise ParseError(line_no, "second root line")
            root = _vertex(line_no, parts[1], n)
        elif tag == "t":
            if len(parts) != 2:
                raise ParseError(line_no, "expected 't <v>'")
            t = _vertex(line_no, parts[1], n)
            if t in terminals:
                raise ParseError(line_no, f"duplicate terminal {t + 1}")
            terminals.add(t)
        elif tag == "a":
            if len(parts) != 3:
                raise ParseError(line_no, "expected 'a <u> <v>'")
            u = _vertex(line_no, parts[1], n)
            v = _vertex(line_no, parts[2], n)
            if u == v:
                raise ParseError(line_no, "self-loop arc")
            if (u, v) in arcs:
                raise ParseError(line_no, f"duplicate arc {u + 1} {v + 1}")
            arcs.add((u, v))
        else:
            raise ParseError(line_no, f"unknown line tag {tag!r}")
    if root is None:
        raise ParseError(lines.header_line, "missing root line")
    if len(arcs) != m:
        raise ParseError(
            lines.header_line, f"header promises {m} arcs, body has {len(arcs)}"
        )
    if root in terminals:
        raise ParseError(lines.header_line, "the root may not be a terminal")
    return DstInstance(
        d=Digraph(n, sorted(arcs)),
        root=root,
        terminals=frozenset(terminals),
        k=k,
    )


def emit_dst(inst: DstInstance) -> str:
    out = [f"p dst {inst.d.n} {inst.d.m} {inst.k}", f"r {inst.root + 1}"]
    out.extend(f"t {t + 1}" for t in sorted(inst.terminals))
    out.extend(f"a {u + 1} {v + 1}" for u, v in sorted(inst.d.arcs()))
    return "\n".join(out) + "\n"


def parse_ds(text: str) -> DsInstance:
    lines = _Lines(text)
    n, m, k = lines.header("ds")
    edges: set[tuple[int, int]] = set()
    for line_no, parts in lines.body():
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(line_no, "expected 'e <u> <v>'")
        u = _vertex(line_no, parts[1], n)
        v = _vertex(line_no, parts[2], n)
        if u == v:
            raise ParseError(line_no, "self-loop edge")
        if (min(u, v), max(u, v)) in edges:
            raise ParseError(line_no, f"duplicate edge {u + 1} {v + 1}")
        edges.add((min(u, v), max(u, v)))
    if len(edges) != m:
        raise ParseError(
            lines.header_line, f"header promises {m} edges, body has {len(edges)}"
        )
    return DsInstance(g=Graph(n, sorted(edges)), k=k)


def emit_ds(inst: DsInstance) -> str:
    out = [f"p ds {inst.g.n} {inst.g.m} {inst.k}"]
    out.extend(f"e {u + 1} {v + 1}" for u, v in sorted(inst.g.edges()))
    return "\n".join(out) + "\n"


def parse_sc(text: str) -> SetCoverInstance:
    lines = _Lines(text)
    n, m, k = lines.header("sc")
    sets: dict[int, frozenset[int]] = {}
    for line_no, parts in lines.body():
        if parts[0] != "s" or len(parts) < 2:
            raise ParseError(line_no, "expected 's <set-id> <elem>...'")
        idx = _int(line_no, parts[1])
        if not (1 <= idx <= m):
            raise ParseError(line_no, f"set id {idx} out of range 1..{m}")
        if idx in sets:
            raise ParseError(line_no, f"duplicate set id {idx}")
        if len(parts) == 2:
            raise ParseError(line_no, f"set {idx} is empty")
        elems = [_vertex(line_no, p, n) for p in parts[2:]]
        if len(set(elems)) != len(elems):
            raise ParseError(line_no, f"set {idx} lists an element twice")
        sets[idx] = frozenset(elems)
    if len(sets) != m:
        raise ParseError(
            lines.header_line, f"header promises {m} sets, body has {len(sets)}"
        )
    return SetCoverInstance(
        n_elems=n,
        sets=tuple(sets[i] for i in range(1, m + 1)),
        k=k,
    )


def emit_sc(sc: SetCoverInstance) -> str:
    out = [f"p sc {sc.n_elems} {len(sc.sets)} {sc.k}"]
    for i, s in enumerate(sc.sets, start=1):
        out.append("s " + " ".join(str(x) for x in [i] + [e + 1 for e in sorted(s)]))
    return "\n".join(out) + "\n"


def emit_solution(sol: Solution) -> str:
    """The solver report format (also accepted by ``verify``)."""
    if not sol.feasible:
        return "INFEASIBLE\n"
    ids = " ".join(str(v + 1) for v in sorted(sol.vertices))
    line = f"S {ids}" if ids else "S"
    return f"SIZE {sol.size}\n{line}\n"


def parse_solution(text: str) -> Solution:
    """Read a solver report back (SIZE/S lines or INFEASIBLE)."""
    rows = [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("c")
    ]
    if not rows:
        raise ParseError(0, "empty solution")
    if rows[0][1] == "INFEASIBLE":
        return Solution.infeasible()
    if len(rows) != 2 or not rows[0][1].startswith("SIZE") or not rows[1][1].startswith("S"):
        raise ParseError(rows[0][0], "expected 'SIZE <s>' then 'S <v...>', or 'INFEASIBLE'")
    size_line, s_line = rows
    size = _int(size_line[0], size_line[1].split()[1])
    vertices = frozenset(
        _int(s_line[0], tok) - 1 for tok in s_line[1].split()[1:]
    )
    if len(vertices) != size:
        raise ParseError(size_line[0], f"SIZE says {size}, S lists {len(vertices)}")
    return Solution(vertices=vertices)
