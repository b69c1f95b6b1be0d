"""Exhaustive Turan numbers for tiny hosts, with isomorph rejection.

The search grows edge/triple sets in lexicographic order and only extends
sets that are lexicographically minimal within their isomorphism class
(checked by an on-the-fly minimal-labelling test).  Removing the largest
tuple of a lex-minimal set leaves a lex-minimal set, so every isomorphism
class of pattern-free systems is reached through exactly one canonical path;
together with the remaining-capacity bound the search is exhaustive.

Golden values live in a JSON file: the first computation records, later runs
must match bit-exactly.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path

from .embedding import graph_embed, triple_embed
from .errors import GoldenMismatch, TooLarge
from .graphs import Graph
from .triples import TripleSystem

EX2_N_CAP = 8
EX3_N_CAP = 7


@dataclass
class ExtremalResult:
    """Exact extremal value with one witness and search statistics."""

    n: int
    pattern_id: str
    value: int
    witness: Graph | TripleSystem
    nodes: int
    elapsed: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern_id,
            "value": self.value,
            "witness": self.witness.to_text(),
            "nodes": self.nodes,
            "elapsed": round(self.elapsed, 3),
        }


def is_lexmin(tuples_sorted: tuple, n: int, r: int) -> bool:
    """True iff no relabelling of 0..n-1 gives a lex-smaller sorted tuple list.

    Only permutations mapping some member tuple onto {0..r-1} can produce a
    smaller list (any other relabelling starts above (0,...,r-1)), so the
    search anchors each member tuple on the first r labels and enumerates the
    rest.
    """
    s = tuples_sorted
    if not s:
        return True
    if s[0] != tuple(range(r)):
        return False
    verts = range(n)
    tail_labels = tuple(range(r, n))
    for t in s:
        for sigma in permutations(range(r)):
            base = dict(zip(t, sigma))
            others = [v for v in verts if v not in base]
            for rho in permutations(tail_labels):
                pi = base.copy()
                pi.update(zip(others, rho))
                mapped = sorted(tuple(sorted(pi[x] for x in tt)) for tt in s)
                if mapped < list(s):
                    return False
    return True


def _max_free(n: int, r: int, free_fn, canonical: bool) -> tuple[int, tuple, int]:
    """DFS over tuple sets in lex order; returns (value, witness, nodes)."""
    all_tuples = list(combinations(range(n), r))
    m = len(all_tuples)
    best_value = 0
    best_witness: tuple = ()
    nodes = 0
    chosen: list[tuple] = []

    def rec(start: int) -> None:
        nonlocal best_value, best_witness, nodes
        for idx in range(start, m):
            if len(chosen) + (m - idx) <= best_value:
                break
            nodes += 1
            t = all_tuples[idx]
            chosen.append(t)
            if free_fn(chosen) and (not canonical or is_lexmin(tuple(chosen), n, r)):
                if len(chosen) > best_value:
                    best_value = len(chosen)
                    best_witness = tuple(chosen)
                rec(idx + 1)
            chosen.pop()

    rec(0)
    return best_value, best_witness, nodes


def ex2_bruteforce(n: int, pattern: Graph, pattern_id: str = "pattern",
                   canonical: bool = True) -> ExtremalResult:
    """Maximum edge count of a pattern-free graph on n vertices (n <= 8)."""
    if n > EX2_N_CAP:
        raise TooLarge(f"ex2 oracle is capped at n = {EX2_N_CAP}")
    start = time.perf_counter()

    def free(chosen: list) -> bool:
        return graph_embed(pattern, Graph(n, chosen)) is None

    value, witness, nodes = _max_free(n, 2, free, canonical)
    g = Graph(n, witness)
    if graph_embed(pattern, g) is not None:
        raise AssertionError("extremal witness contains the pattern")
    return ExtremalResult(n, pattern_id, value, g, nodes, time.perf_counter() - start)


def ex3_bruteforce(n: int, pattern: TripleSystem, pattern_id: str = "pattern",
                   canonical: bool = True) -> ExtremalResult:
    """Maximum triple count of a pattern-free system on n vertices.

    n <= 6 runs with or without isomorph rejection; n = 7 requires it.
    """
    if n > EX3_N_CAP:
        raise TooLarge(f"ex3 oracle is capped at n = {EX3_N_CAP}")
    if n == EX3_N_CAP and not canonical:
        raise TooLarge("n = 7 needs the isomorph-rejection flag")
    start = time.perf_counter()

    def free(chosen: list) -> bool:
        return triple_embed(pattern, TripleSystem(n, chosen)) is None

    value, witness, nodes = _max_free(n, 3, free, canonical)
    h = TripleSystem(n, witness)
    if triple_embed(pattern, h) is not None:
        raise AssertionError("extremal witness contains the pattern")
    return ExtremalResult(n, pattern_id, value, h, nodes, time.perf_counter() - start)


# -- golden values ----------------------------------------------------------------


def golden_key(r: int, n: int, pattern_id: str) -> str:
    return f"ex{r}(n={n},pattern={pattern_id})"


def load_goldens(path: str | Path) -> dict:
    p = Path(path)
    if not p.exists():
        return {}
    with open(p) as fh:
        return json.load(fh)


def record_or_check(path: str | Path, key: str, value: int, witness_text: str) -> str:
    """First run records; later runs must match bit-exactly.

    Returns "recorded" or "matched".
    """
    goldens = load_goldens(path)
    entry = {"value": value, "witness": witness_text}
    if key in goldens:
        if goldens[key] != entry:
            raise GoldenMismatch(
                f"golden mismatch for {key}: stored {goldens[key]!r}, got {entry!r}")
        return "matched"
    goldens[key] = entry
    with open(path, "w") as fh:
        json.dump(goldens, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return "recorded"
