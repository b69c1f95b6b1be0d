"""Simple graphs: named generators, girth, colorings, treewidth-two tests.

Vertex labelling conventions (frozen; embeddings and golden files rely on
them):

* complete_bipartite(s, t): part A = 0..s-1, part B = s..s+t-1.
* cycle(k): vertices 0..k-1, edges i ~ i+1 mod k (k >= 3).
* path(k): k edges on vertices 0..k, edges i ~ i+1.
* clique(k): all pairs on 0..k-1.
* octahedron: vertices 0..5; the non-edges are the three antipodal pairs
  {0,1}, {2,3}, {4,5}.
* cube: vertices 0..7 read as 3-bit strings; edges join strings at Hamming
  distance one.
* wheel(k): cycle(k) on 0..k-1 plus hub k adjacent to every rim vertex.

The text format is one header line ``g <n> <m>`` followed by m lines
``<u> <v>`` with u < v, sorted lexicographically, and round-trips bit-exactly.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .errors import BadParameter, FormatError, ImproperColoring, TooLarge, UnknownName

INFINITE = math.inf

COLORING_CAP = 24


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are stored as a lexicographically sorted tuple of (u, v) pairs with
    u < v; adjacency additionally lives in per-vertex bit rows.
    """

    __slots__ = ("n", "edges", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise BadParameter("vertex count must be >= 0")
        seen = set()
        for u, v in edges:
            if u == v:
                raise BadParameter(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise BadParameter(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(seen))
        rows = [0] * n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.rows = tuple(rows)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled by the sorted vertex order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vs), edges)

    def to_text(self) -> str:
        lines = [f"g {self.n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise FormatError("empty graph text")
        head = lines[0].split()
        if len(head) != 3 or head[0] != "g":
            raise FormatError(f"bad graph header: {lines[0]!r}")
        n, m = int(head[1]), int(head[2])
        if len(lines) - 1 != m:
            raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise FormatError(f"bad edge line: {ln!r}")
            u, v = int(parts[0]), int(parts[1])
            if not u < v:
                raise FormatError(f"edge line not in u < v form: {ln!r}")
            edges.append((u, v))
        if edges != sorted(edges) or len(set(edges)) != len(edges):
            raise FormatError("edge lines must be sorted and distinct")
        g = cls(n, edges)
        if g.m != m:
            raise FormatError("edge count mismatch")
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# -- named generators ----------------------------------------------------------


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise BadParameter("complete_bipartite needs s, t >= 1")
    return Graph(s + t, [(a, s + b) for a in range(s) for b in range(t)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise BadParameter("cycle needs k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise BadParameter("path needs k >= 1 edges")
    return Graph(k + 1, [(i, i + 1) for i in range(k)])


def clique(k: int) -> Graph:
    if k < 1:
        raise BadParameter("clique needs k >= 1")
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def octahedron() -> Graph:
    non_edges = {(0, 1), (2, 3), (4, 5)}
    edges = [(i, j) for i in range(6) for j in range(i + 1, 6) if (i, j) not in non_edges]
    return Graph(6, edges)


def cube() -> Graph:
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]
    return Graph(8, edges)


def wheel(k: int) -> Graph:
    if k < 3:
        raise BadParameter("wheel needs k >= 3 rim vertices")
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return Graph(k + 1, edges)


_NAMED = {
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path,
    "clique": clique,
    "octahedron": octahedron,
    "cube": cube,
    "wheel": wheel,
}


def named_graph(name: str, *params: int) -> Graph:
    """Build one of the documented named graphs; parameters as per the name."""
    try:
        builder = _NAMED[name]
    except KeyError:
        raise UnknownName(f"unknown graph name {name!r}") from None
    return builder(*params)


# -- structural queries ----------------------------------------------------------


def girth(g: Graph):
    """Length of a shortest cycle, or INFINITE for forests.

    BFS from every vertex; the minimum closing-edge estimate over all roots
    is exact for unweighted graphs.
    """
    best = INFINITE
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        dq = deque([s])
        while dq:
            u = dq.popleft()
            if 2 * dist[u] >= best:
                continue
            for v in g.neighbors(u):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    dq.append(v)
                elif v != parent[u]:
                    cand = dist[u] + dist[v] + 1
                    if cand < best:
                        best = cand
    return best


def triangle_list(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles of g as sorted vertex triples (kernel-backed)."""
    return kernels.triangle_list(g.rows, g.n)


def triangle_count(g: Graph) -> int:
    return kernels.triangle_count(g.rows, g.n)


def treewidth_le_two(g: Graph) -> bool:
    """True iff g reduces to nothing by leaf deletion and degree-2 suppression.

    Suppressing a degree-2 vertex joins its two neighbors and drops the
    duplicate edge if they were already adjacent; success is equivalent to
    having no K4 subdivision.
    """
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    alive = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            d = len(adj[v])
            if d <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                adj[v].clear()
                alive.discard(v)
                changed = True
            elif d == 2:
                a, b = sorted(adj[v])
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                adj[v].clear()
                alive.discard(v)
                changed = True
    return not alive


# -- colorings --------------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """A 3-coloring of a graph; properness is checkable, never assumed."""

    graph: Graph
    colors: tuple[int, ...]

    def is_proper(self) -> bool:
        c = self.colors
        return all(c[u] != c[v] for u, v in self.graph.edges)

    def classes(self) -> tuple[list[int], list[int], list[int]]:
        out: tuple[list[int], list[int], list[int]] = ([], [], [])
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


def proper_3_colorings(g: Graph, up_to_symmetry: bool = False) -> Iterator[Coloring]:
    """Every proper 3-coloring exactly once, in lexicographic color order.

    The default emits all colorings (analyses quantify over every proper
    coloring); ``up_to_symmetry`` pins vertex 0 to color 0, thinning the
    stream by the color-relabelling symmetry moving that class.
    """
    if g.n > COLORING_CAP:
        raise TooLarge(f"coloring enumeration capped at {COLORING_CAP} vertices")
    colors = [0] * g.n
    lower_rows = [g.rows[v] & ((1 << v) - 1) for v in range(g.n)]

    def rec(v: int) -> Iterator[Coloring]:
        if v == g.n:
            yield Coloring(g, tuple(colors))
            return
        for c in ((0,) if (v == 0 and up_to_symmetry) else (0, 1, 2)):
            ok = True
            mask = lower_rows[v]
            while mask:
                b = mask & -mask
                if colors[b.bit_length() - 1] == c:
                    ok = False
                    break
                mask ^= b
            if ok:
                colors[v] = c
                yield from rec(v + 1)
        colors[v] = 0

    return rec(0)


_CLASS_PAIRS = ((0, 1), (0, 2), (1, 2))


def _is_forest(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def bichromatic_cycle_profile(g: Graph, coloring: Coloring):
    """Girth of the subgraph induced by each pair of color classes.

    Returns a triple ordered by class pairs (0,1), (0,2), (1,2); INFINITE
    entries mark forests.
    """
    if not coloring.is_proper():
        raise ImproperColoring("profile requires a proper coloring")
    out = []
    for a, b in _CLASS_PAIRS:
        verts = [v for v in range(g.n) if coloring.colors[v] in (a, b)]
        out.append(girth(g.induced(verts)))
    return tuple(out)


def has_acyclic_3_coloring(g: Graph) -> tuple[bool, Coloring | None]:
    """Search for a proper 3-coloring whose class pairs all induce forests."""
    for coloring in proper_3_colorings(g):
        ok = True
        for a, b in _CLASS_PAIRS:
            keep = [v for v in range(g.n) if coloring.colors[v] in (a, b)]
            pos = {v: i for i, v in enumerate(keep)}
            edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
            if not _is_forest(len(keep), edges):
                ok = False
                break
        if ok:
            return True, coloring
    return False, None


# -- high-girth bipartite generator ------------------------------------------------


def high_girth_bipartite(n: int, k: int, seed: int) -> Graph:
    """Seeded greedy bipartite graph on n vertices with girth > k.

    Parts are 0..ceil(n/2)-1 and ceil(n/2)..n-1.  Candidate cross edges are
    shuffled by the seed and inserted whenever insertion closes no cycle of
    length <= k; the girth contract therefore holds for every seed.
    """
    if n < 4:
        raise BadParameter("need at least 4 vertices")
    if k < 3:
        raise BadParameter("girth floor must be >= 3")
    a = (n + 1) // 2
    candidates = [(u, v) for u in range(a) for v in range(a, n)]
    rng = random.Random(f"{seed}:high_girth_bipartite")
    rng.shuffle(candidates)
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for u, v in candidates:
        # adding (u,v) closes a cycle of length dist(u,v)+1
        dist = _bfs_dist(adj, u, v, k - 1)
        if dist is not None:
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    return Graph(n, edges)


def _bfs_dist(adj: list[set[int]], src: int, dst: int, cap: int):
    """Distance from src to dst if it is <= cap, else None."""
    if src == dst:
        return 0
    dist = {src: 0}
    dq = deque([src])
    while dq:
        u = dq.popleft()
        if dist[u] >= cap:
            continue
        for v in adj[u]:
            if v not in dist:
                if v == dst:
                    return dist[u] + 1
                dist[v] = dist[u] + 1
                dq.append(v)
    return None


# -- file helpers --------------------------------------------------------------------


def write_graph(path_: str, g: Graph) -> None:
    with open(path_, "w") as fh:
        fh.write(g.to_text())


def read_graph(path_: str) -> Graph:
    with open(path_) as fh:
        return Graph.from_text(fh.read())
