"""Backtracking containment search for graphs and triple systems.

Outcomes are three-valued: an Embedding (with its vertex map), None after an
exhaustive search, or the BUDGET_EXHAUSTED sentinel once the node-expansion
budget runs out.  None is only ever returned when the search space was
exhausted, so negative verdicts are certificates.

The search assigns pattern vertices in a connectivity-first order, filters
host candidates through degree tables and adjacency bitsets, and breaks
pattern symmetries by ordering the images of interchangeable vertices
(classes of vertices whose pairwise transpositions are automorphisms).
Candidates are scanned in increasing host order, so results are deterministic
and the first embedding in that order wins.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Graph
from .triples import TripleSystem, expand, shadow

DEFAULT_BUDGET = 10**8


class _BudgetUp(Exception):
    pass


class _BudgetExhausted:
    """Sentinel type for inconclusive searches; compare with ``is``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BUDGET_EXHAUSTED"

    def __bool__(self) -> bool:
        return False


BUDGET_EXHAUSTED = _BudgetExhausted()


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map certifying containment of pattern in host.

    ``mapping[i]`` is the host vertex carrying pattern vertex i; every
    pattern edge/triple lands on a host edge/triple (re-checkable through
    :meth:`validate`).
    """

    pattern: object
    host: object
    mapping: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping))

    def validate(self) -> bool:
        from .graphs import Graph as _G

        if isinstance(self.pattern, _G):
            return check_graph_embedding(self.pattern, self.host, self)
        return check_triple_embedding(self.pattern, self.host, self)


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("TURAN3_BUDGET", DEFAULT_BUDGET))


# -- symmetry: interchangeable-vertex classes -----------------------------------


def _graph_twins(rows: Sequence[int], u: int, v: int) -> bool:
    return (rows[u] ^ rows[v]) & ~((1 << u) | (1 << v)) == 0


def _triple_twins(triples: Sequence[tuple[int, int, int]], u: int, v: int) -> bool:
    def sw(x: int) -> int:
        return v if x == u else u if x == v else x

    original = set(triples)
    return all(tuple(sorted((sw(a), sw(b), sw(c)))) in original for a, b, c in triples)


def _twin_classes(n: int, is_twin) -> list[list[int]]:
    """Disjoint classes in which every pair of members is interchangeable."""
    classes = []
    assigned = set()
    for u in range(n):
        if u in assigned:
            continue
        cls = [u]
        for v in range(u + 1, n):
            if v not in assigned and all(is_twin(w, v) for w in cls):
                cls.append(v)
        assigned.update(cls)
        if len(cls) > 1:
            classes.append(cls)
    return classes


def _search_order(n: int, deg: Sequence[int], neigh: Sequence[int]) -> list[int]:
    order: list[int] = []
    placed_mask = 0
    rem = set(range(n))
    while rem:
        if not order:
            v = max(rem, key=lambda x: (deg[x], -x))
        else:
            v = max(rem, key=lambda x: ((neigh[x] & placed_mask).bit_count(), deg[x], -x))
        order.append(v)
        rem.discard(v)
        placed_mask |= 1 << v
    return order


def _twin_predecessors(order: Sequence[int], classes: list[list[int]]) -> list[int | None]:
    """For each pattern vertex, its class member placed immediately before it."""
    pos = {v: i for i, v in enumerate(order)}
    pred: list[int | None] = [None] * len(order)
    for cls in classes:
        members = sorted(cls, key=lambda v: pos[v])
        for a, b in zip(members, members[1:]):
            pred[b] = a
    return pred


# -- graph embedding --------------------------------------------------------------


def _graph_embeddings(pattern: Graph, host: Graph, counter: list[int]) -> Iterator[tuple[int, ...]]:
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return
    if np_ == 0:
        yield ()
        return
    prows, hrows = pattern.rows, host.rows
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    order = _search_order(np_, pdeg, prows)
    classes = _twin_classes(np_, lambda u, v: _graph_twins(prows, u, v))
    twin_pred = _twin_predecessors(order, classes)
    # host vertices with enough degree, per pattern vertex
    deg_ok = []
    for v in range(np_):
        mask = 0
        for x in range(nh):
            if hdeg[x] >= pdeg[v]:
                mask |= 1 << x
        deg_ok.append(mask)
    placed_neighbors = []
    placed_set: set[int] = set()
    for v in order:
        placed_neighbors.append([u for u in placed_set if prows[v] >> u & 1])
        placed_set.add(v)
    full = (1 << nh) - 1
    mapping = [-1] * np_
    used = [0]

    def rec(d: int) -> Iterator[tuple[int, ...]]:
        if d == np_:
            yield tuple(mapping)
            return
        v = order[d]
        cand = deg_ok[v] & ~used[0] & full
        for u in placed_neighbors[d]:
            cand &= hrows[mapping[u]]
        tp = twin_pred[v]
        if tp is not None:
            cand &= full & (-1 << (mapping[tp] + 1))
        while cand:
            b = cand & -cand
            x = b.bit_length() - 1
            cand ^= b
            counter[0] -= 1
            if counter[0] < 0:
                raise _BudgetUp
            mapping[v] = x
            used[0] |= b
            yield from rec(d + 1)
            used[0] ^= b
            mapping[v] = -1

    yield from rec(0)


def check_graph_embedding(pattern: Graph, host: Graph, emb: Embedding) -> bool:
    m = emb.mapping
    if len(m) != pattern.n or len(set(m)) != pattern.n:
        return False
    if any(not 0 <= x < host.n for x in m):
        return False
    return all(host.has_edge(m[u], m[v]) for u, v in pattern.edges)


def graph_embed(pattern: Graph, host: Graph, budget: int | None = None):
    """First embedding of pattern into host, None (exhaustive), or the sentinel."""
    counter = [_resolve_budget(budget)]
    try:
        for mapping in _graph_embeddings(pattern, host, counter):
            emb = Embedding(pattern, host, mapping)
            if not emb.validate():
                raise AssertionError("search returned an invalid embedding")
            return emb
        return None
    except _BudgetUp:
        return BUDGET_EXHAUSTED


# -- triple-system embedding --------------------------------------------------------


def _pair_masks(host: TripleSystem) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for a, b, c in host.triples:
        out[(a, b)] = out.get((a, b), 0) | (1 << c)
        out[(a, c)] = out.get((a, c), 0) | (1 << b)
        out[(b, c)] = out.get((b, c), 0) | (1 << a)
    return out


def _triple_embeddings(pattern: TripleSystem, host: TripleSystem,
                       counter: list[int]) -> Iterator[tuple[int, ...]]:
    np_, nh = pattern.n, host.n
    if np_ > nh:
        return
    if np_ == 0:
        yield ()
        return
    pdeg = [0] * np_
    pneigh = [0] * np_
    for a, b, c in pattern.triples:
        for v in (a, b, c):
            pdeg[v] += 1
        pneigh[a] |= (1 << b) | (1 << c)
        pneigh[b] |= (1 << a) | (1 << c)
        pneigh[c] |= (1 << a) | (1 << b)
    hdeg = [0] * nh
    for t in host.triples:
        for v in t:
            hdeg[v] += 1
    order = _search_order(np_, pdeg, pneigh)
    classes = _twin_classes(np_, lambda u, v: _triple_twins(pattern.triples, u, v))
    twin_pred = _twin_predecessors(order, classes)
    deg_ok = []
    for v in range(np_):
        mask = 0
        for x in range(nh):
            if hdeg[x] >= pdeg[v]:
                mask |= 1 << x
        deg_ok.append(mask)
    # for each depth, pattern pairs completing a triple with the new vertex
    placed_pairs: list[list[tuple[int, int]]] = []
    placed: set[int] = set()
    for v in order:
        pairs = []
        for t in pattern.triples:
            if v in t:
                others = [u for u in t if u != v]
                if all(u in placed for u in others):
                    pairs.append((others[0], others[1]))
        placed_pairs.append(pairs)
        placed.add(v)
    pmask = _pair_masks(host)
    full = (1 << nh) - 1
    mapping = [-1] * np_
    used = [0]

    def rec(d: int) -> Iterator[tuple[int, ...]]:
        if d == np_:
            yield tuple(mapping)
            return
        v = order[d]
        cand = deg_ok[v] & ~used[0] & full
        for u, w in placed_pairs[d]:
            a, b = mapping[u], mapping[w]
            if a > b:
                a, b = b, a
            cand &= pmask.get((a, b), 0)
            if not cand:
                return
        tp = twin_pred[v]
        if tp is not None:
            cand &= full & (-1 << (mapping[tp] + 1))
        while cand:
            b_ = cand & -cand
            x = b_.bit_length() - 1
            cand ^= b_
            counter[0] -= 1
            if counter[0] < 0:
                raise _BudgetUp
            mapping[v] = x
            used[0] |= b_
            yield from rec(d + 1)
            used[0] ^= b_
            mapping[v] = -1

    yield from rec(0)


def check_triple_embedding(pattern: TripleSystem, host: TripleSystem, emb: Embedding) -> bool:
    m = emb.mapping
    if len(m) != pattern.n or len(set(m)) != pattern.n:
        return False
    if any(not 0 <= x < host.n for x in m):
        return False
    hset = set(host.triples)
    return all(tuple(sorted((m[a], m[b], m[c]))) in hset for a, b, c in pattern.triples)


def triple_embed(pattern: TripleSystem, host: TripleSystem, budget: int | None = None):
    """First embedding of the pattern system into the host, None, or the sentinel."""
    counter = [_resolve_budget(budget)]
    try:
        for mapping in _triple_embeddings(pattern, host, counter):
            emb = Embedding(pattern, host, mapping)
            if not emb.validate():
                raise AssertionError("search returned an invalid embedding")
            return emb
        return None
    except _BudgetUp:
        return BUDGET_EXHAUSTED


# -- expansions ----------------------------------------------------------------------


def _match_distinct(masks: list[int]) -> list[int] | None:
    """Assign one host vertex per mask, all distinct (augmenting paths)."""
    assigned: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        m = masks[i]
        while m:
            b = m & -m
            x = b.bit_length() - 1
            m ^= b
            if x in seen:
                continue
            seen.add(x)
            if x not in assigned or augment(assigned[x], seen):
                assigned[x] = i
                return True
        return False

    for i in range(len(masks)):
        if not augment(i, set()):
            return None
    inv = {i: x for x, i in assigned.items()}
    return [inv[i] for i in range(len(masks))]


def contains_expansion(g: Graph, host: TripleSystem, budget: int | None = None):
    """Search for the expansion of g inside the host triple system.

    Embeds g into the shadow of the host, then assigns pairwise-distinct
    apexes outside the core image by bipartite matching over the
    co-neighborhoods of the embedded edges.  Outcome-equivalent to
    triple_embed(expand(g), host); the returned mapping uses the expansion's
    vertex labelling (core vertices first, apexes in edge order).
    """
    counter = [_resolve_budget(budget)]
    pattern_exp = expand(g)
    if pattern_exp.n > host.n:
        return None
    if g.m == 0:
        return Embedding(pattern_exp, host, tuple(range(g.n)))
    sh = shadow(host)
    pmask = _pair_masks(host)
    try:
        for core in _graph_embeddings(g, sh, counter):
            used_mask = 0
            for x in core:
                used_mask |= 1 << x
            masks = []
            feasible = True
            for u, v in g.edges:
                a, b = core[u], core[v]
                if a > b:
                    a, b = b, a
                m = pmask.get((a, b), 0) & ~used_mask
                if not m:
                    feasible = False
                    break
                masks.append(m)
            if not feasible:
                continue
            apexes = _match_distinct(masks)
            if apexes is None:
                continue
            emb = Embedding(pattern_exp, host, tuple(core) + tuple(apexes))
            if not emb.validate():
                raise AssertionError("expansion search returned an invalid embedding")
            return emb
        return None
    except _BudgetUp:
        return BUDGET_EXHAUSTED
