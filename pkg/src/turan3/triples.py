"""3-uniform hypergraphs: shadows, codegrees, expansions, crosscuts.

Labelling conventions (frozen):

* expand(G) keeps the vertices of G and appends one apex per edge, in the
  sorted order of G's edges: the apex of the i-th edge is |V(G)| + i.
* h_t_pattern(t) lives on 2t+2 vertices labelled a=0, b=1, x_i=2i, y_i=2i+1
  (i = 1..t) with the 2t triples {x_i, y_i, a} and {x_i, y_i, b}.

The text format is one header line ``h3 <n> <m>`` followed by m lines
``<u> <v> <w>`` with u < v < w, sorted lexicographically; round-trips are
bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BadParameter, FormatError, SameVertex
from .graphs import Graph, triangle_list


class TripleSystem:
    """Immutable 3-uniform hypergraph on vertices 0..n-1.

    Triples are stored as a deduplicated, lexicographically sorted tuple of
    sorted 3-tuples.
    """

    __slots__ = ("n", "triples")

    def __init__(self, n: int, triples: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise BadParameter("vertex count must be >= 0")
        seen = set()
        for t in triples:
            s = tuple(sorted(t))
            if len(set(s)) != 3:
                raise BadParameter(f"triple {t} has repeated vertices")
            if s[2] >= n or s[0] < 0:
                raise BadParameter(f"triple {t} out of range for n={n}")
            seen.add(s)
        self.n = n
        self.triples = tuple(sorted(seen))

    @property
    def m(self) -> int:
        return len(self.triples)

    def vertex_degree(self, v: int) -> int:
        return sum(1 for t in self.triples if v in t)

    def to_text(self) -> str:
        lines = [f"h3 {self.n} {self.m}"]
        lines.extend(f"{a} {b} {c}" for a, b, c in self.triples)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TripleSystem":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise FormatError("empty hypergraph text")
        head = lines[0].split()
        if len(head) != 3 or head[0] != "h3":
            raise FormatError(f"bad hypergraph header: {lines[0]!r}")
        n, m = int(head[1]), int(head[2])
        if len(lines) - 1 != m:
            raise FormatError(f"expected {m} triple lines, found {len(lines) - 1}")
        triples = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3:
                raise FormatError(f"bad triple line: {ln!r}")
            a, b, c = (int(x) for x in parts)
            if not a < b < c:
                raise FormatError(f"triple line not in sorted form: {ln!r}")
            triples.append((a, b, c))
        if triples != sorted(triples) or len(set(triples)) != len(triples):
            raise FormatError("triple lines must be sorted and distinct")
        h = cls(n, triples)
        if h.m != m:
            raise FormatError("triple count mismatch")
        return h

    def __eq__(self, other) -> bool:
        if not isinstance(other, TripleSystem):
            return NotImplemented
        return self.n == other.n and self.triples == other.triples

    def __hash__(self) -> int:
        return hash((self.n, self.triples))

    def __repr__(self) -> str:
        return f"TripleSystem(n={self.n}, m={self.m})"


# -- basic operations -----------------------------------------------------------


def expand(g: Graph) -> TripleSystem:
    """The expansion of g: each edge gains its own fresh apex vertex."""
    triples = [(u, v, g.n + i) for i, (u, v) in enumerate(g.edges)]
    return TripleSystem(g.n + g.m, triples)


def shadow(h: TripleSystem) -> Graph:
    """Graph of all pairs that lie inside some triple of h (same vertex set)."""
    edges = set()
    for a, b, c in h.triples:
        edges.add((a, b))
        edges.add((a, c))
        edges.add((b, c))
    return Graph(h.n, edges)


def codegree(h: TripleSystem, u: int, v: int) -> int:
    """Number of triples of h containing both u and v."""
    if u == v:
        raise SameVertex("codegree needs two distinct vertices")
    return sum(1 for t in h.triples if u in t and v in t)


def codegree_map(h: TripleSystem) -> dict[tuple[int, int], int]:
    """All positive codegrees, keyed by sorted vertex pair."""
    out: dict[tuple[int, int], int] = {}
    for a, b, c in h.triples:
        for pair in ((a, b), (a, c), (b, c)):
            out[pair] = out.get(pair, 0) + 1
    return out


def triangles_of_graph(g: Graph) -> TripleSystem:
    """Triple system of the vertex sets of triangles of g."""
    return TripleSystem(g.n, triangle_list(g))


def full_subgraph(h: TripleSystem, d: int) -> TripleSystem:
    """Largest-by-construction (d+1)-full subsystem of h.

    Repeatedly: scan shadow edges in lexicographic order, and when one lies
    in at most d surviving triples, delete those triples and restart.  The
    result has every positive codegree >= d+1 and at least
    |h| - d * |shadow(h)| triples, since each shadow edge can trigger at most
    one deletion batch.
    """
    if d < 1:
        raise BadParameter("d must be >= 1")
    triples = list(h.triples)
    while True:
        cod = {}
        for t in triples:
            a, b, c = t
            for pair in ((a, b), (a, c), (b, c)):
                cod.setdefault(pair, []).append(t)
        target = None
        for pair in sorted(cod):
            if len(cod[pair]) <= d:
                target = pair
                break
        if target is None:
            break
        doomed = set(cod[target])
        triples = [t for t in triples if t not in doomed]
    return TripleSystem(h.n, triples)


# -- crosscuts --------------------------------------------------------------------


@dataclass(frozen=True)
class CrosscutResult:
    """Outcome of an exact-transversal search.

    ``exists`` is True when a set meeting every triple exactly once was found
    within the cap; ``witness`` is then the lexicographically smallest one of
    minimum size.  When ``exists`` is False, ``cap_hit`` distinguishes "no
    exact transversal of size <= cap" (True) from "none exists at any size"
    (False, the search tree was exhausted without touching the cap).
    """

    exists: bool
    size: int | None = None
    witness: tuple[int, ...] | None = None
    cap_hit: bool = False


def crosscut(h: TripleSystem, cap: int = 6) -> CrosscutResult:
    """Minimum exact transversal by branch and bound, capped at size ``cap``.

    Branches on the vertices of the first unhit triple; a chosen vertex
    forbids the other two vertices of every triple it hits.  The greedy
    first solution seeds the bound.
    """
    if cap > 8:
        raise BadParameter("crosscut cap is limited to 8")
    if h.m == 0:
        return CrosscutResult(exists=True, size=0, witness=())
    triples = h.triples
    containing: dict[int, list[int]] = {}
    for idx, t in enumerate(triples):
        for v in t:
            containing.setdefault(v, []).append(idx)

    best: list = [None]  # (size, witness tuple)
    cap_hit = [False]

    def valid_choice(v: int, hit: list[int]) -> bool:
        return all(hit[i] == 0 for i in containing[v])

    def greedy() -> tuple[int, ...] | None:
        hit = [0] * len(triples)
        chosen: list[int] = []
        while True:
            unhit = [i for i, c in enumerate(hit) if c == 0]
            if not unhit:
                return tuple(sorted(chosen))
            if len(chosen) >= cap:
                return None
            cands = sorted({v for i in unhit for v in triples[i] if valid_choice(v, hit)},
                           key=lambda v: (-sum(hit[i] == 0 for i in containing[v]), v))
            if not cands:
                return None
            v = cands[0]
            chosen.append(v)
            for i in containing[v]:
                hit[i] += 1

    seed = greedy()
    if seed is not None:
        best[0] = (len(seed), seed)

    hit = [0] * len(triples)
    chosen: list[int] = []

    def rec() -> None:
        limit = cap if best[0] is None else min(cap, best[0][0])
        first_unhit = next((i for i, c in enumerate(hit) if c == 0), None)
        if first_unhit is None:
            cand = (len(chosen), tuple(sorted(chosen)))
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        if len(chosen) >= limit:
            if len(chosen) >= cap:
                cap_hit[0] = True
            return
        for v in triples[first_unhit]:
            if not valid_choice(v, hit):
                continue
            chosen.append(v)
            for i in containing[v]:
                hit[i] += 1
            rec()
            for i in containing[v]:
                hit[i] -= 1
            chosen.pop()

    rec()
    if best[0] is None:
        return CrosscutResult(exists=False, cap_hit=cap_hit[0])
    size, witness = best[0]
    return CrosscutResult(exists=True, size=size, witness=witness)


def h_t_pattern(t: int) -> TripleSystem:
    """The 2t-triple pattern on {a, b, x_1, y_1, ..., x_t, y_t}."""
    if t < 1:
        raise BadParameter("t must be >= 1")
    triples = []
    for i in range(1, t + 1):
        x, y = 2 * i, 2 * i + 1
        triples.append((x, y, 0))
        triples.append((x, y, 1))
    return TripleSystem(2 * t + 2, triples)


# -- file helpers -------------------------------------------------------------------


def write_triples(path_: str, h: TripleSystem) -> None:
    with open(path_, "w") as fh:
        fh.write(h.to_text())


def read_triples(path_: str) -> TripleSystem:
    with open(path_) as fh:
        return TripleSystem.from_text(fh.read())
