"""The acceptance suite: every countable claim the artifact is gated on.

Each criterion is a callable returning a result dict with a pass verdict,
measured details and elapsed time against the documented runtime limit.
The pytest module ``tests/test_acceptance.py`` asserts these verdicts; the
CLI ``report --suite acceptance`` prints them as consolidated JSON.
"""

from __future__ import annotations

import itertools
import random
import time
from pathlib import Path

from .constructions import (layered_girth_construction, projective_norm_graph,
                            quotient_norm_graph, random_deletion_construction,
                            sigma_construction, triangle_hypergraph)
from .embedding import BUDGET_EXHAUSTED, contains_expansion, graph_embed, triple_embed
from .fields import count_norm_ratio_solutions, norm_fiber, tower_for_prime_power
from .graphs import (INFINITE, bichromatic_cycle_profile, clique,
                     complete_bipartite, cycle, has_acyclic_3_coloring,
                     octahedron, path, proper_3_colorings, wheel)
from .oracle import ex2_bruteforce, ex3_bruteforce, golden_key, record_or_check
from .triples import TripleSystem, codegree_map, crosscut, expand, full_subgraph, h_t_pattern, shadow

def _default_golden_path() -> Path:
    # repo checkout layout first; otherwise keep goldens near the caller
    repo = Path(__file__).resolve().parents[2] / "goldens" / "oracle.json"
    if repo.parent.is_dir():
        return repo
    return Path.cwd() / "goldens" / "oracle.json"


def _result(cid: int, name: str, limit: float, passed: bool, started: float,
            details: dict) -> dict:
    return {
        "id": cid,
        "name": name,
        "passed": bool(passed),
        "elapsed": round(time.perf_counter() - started, 3),
        "limit": limit,
        "details": details,
    }


def criterion_1_norm_fibers() -> dict:
    """Every nonzero base element has exactly (q^(s-1)-1)/(q-1) norm preimages."""
    started = time.perf_counter()
    cases = [(3, 3), (4, 3), (5, 3), (7, 3), (3, 4)]
    details = {}
    passed = True
    for q, s in cases:
        tw = tower_for_prime_power(q, s)
        expected = (q ** (s - 1) - 1) // (q - 1)
        sizes = {len(norm_fiber(tw, tw.base.element(c))) for c in range(1, q)}
        details[f"q={q},s={s}"] = {"expected": expected, "sizes": sorted(sizes)}
        passed = passed and sizes == {expected}
    return _result(1, "norm-fiber-exactness", 5.0, passed, started, details)


def criterion_2_ratio_floor() -> dict:
    """count_norm_ratio_solutions >= q^(s-2) for all A != B and nonzero x."""
    started = time.perf_counter()
    details = {}
    passed = True
    for q, s in [(3, 3), (4, 3), (5, 3)]:
        tw = tower_for_prime_power(q, s)
        floor = q ** (s - 2)
        lo = None
        for a_code in range(tw.ext_order):
            a = tw.ext.element(a_code)
            for b_code in range(tw.ext_order):
                if b_code == a_code:
                    continue
                b = tw.ext.element(b_code)
                for x_code in range(1, q):
                    c = count_norm_ratio_solutions(tw, a, b, tw.base.element(x_code))
                    if lo is None or c < lo:
                        lo = c
        details[f"q={q},s={s}"] = {"floor": floor, "min": lo}
        passed = passed and lo is not None and lo >= floor
    return _result(2, "ratio-solution-floor", 60.0, passed, started, details)


def criterion_3_pg_structure() -> dict:
    """PG(q,3) vertex counts, degree sets and triangle floors for q in {3,4,5,7}."""
    started = time.perf_counter()
    details = {}
    passed = True
    for q in (3, 4, 5, 7):
        g, rep = projective_norm_graph(q, 3)
        ts, trep = triangle_hypergraph(g, pg_params=(q, 3))
        prod = q * q * (q - 1) * (q * q - 1) * (q - 2)
        ok = (g.n == q * q * (q - 1)
              and set(g.degrees()) <= {q * q - 2, q * q - 1}
              and 6 * ts.m >= prod)
        details[f"q={q}"] = {"n": g.n, "degree-set": sorted(set(g.degrees())),
                             "triangles": ts.m, "floor-x6": prod}
        passed = passed and ok and rep.all_pass() and trep.all_pass()
    return _result(3, "pg-structure", 120.0, passed, started, details)


def criterion_4_kst_freeness() -> dict:
    """graph_embed(K_{3,3}, PG(q,3)) is an exhaustive None for q in {3, 5}."""
    started = time.perf_counter()
    k33 = complete_bipartite(3, 3)
    details = {}
    passed = True
    for q in (3, 5):
        g, _ = projective_norm_graph(q, 3)
        res = graph_embed(k33, g)
        verdict = ("budget" if res is BUDGET_EXHAUSTED
                   else "none" if res is None else "found")
        details[f"q={q}"] = verdict
        passed = passed and verdict == "none"
    return _result(4, "kst-freeness", 300.0, passed, started, details)


def criterion_5_quotient_claims() -> dict:
    """H(5,2): 50 vertices, degrees in {23,24}, common-neighbor floor, no K_{3,9}."""
    started = time.perf_counter()
    g, rep = quotient_norm_graph(5, 2)
    checks = {c.claim: c for c in rep.checks}
    flagged = checks["degree-claim-comparison"].measured
    passed = (g.n == 50
              and checks["degree-set"].passed
              and checks["common-neighbors-floor"].passed
              and checks["kst-freeness-scan"].passed)
    details = {
        "n": g.n,
        "degree-set": checks["degree-set"].measured,
        "degree-claim-comparison": flagged,
        "min-common-distinct-first": checks["common-neighbors-floor"].measured,
        "max-common-of-3": checks["kst-freeness-scan"].measured,
    }
    return _result(5, "quotient-norm-graph-claims", 120.0, passed, started, details)


def criterion_6_full_subgraph_suite() -> dict:
    """200 seeded systems (n <= 14, d in 1..3): (d+1)-fullness and edge bound."""
    started = time.perf_counter()
    failures = []
    for seed in range(200):
        rng = random.Random(seed)
        n = rng.randint(4, 14)
        pool = list(itertools.combinations(range(n), 3))
        m = rng.randint(0, min(len(pool), 40))
        h = TripleSystem(n, rng.sample(pool, m))
        shadow_m = shadow(h).m
        for d in (1, 2, 3):
            f = full_subgraph(h, d)
            cod = codegree_map(f)
            if not all(c >= d + 1 for c in cod.values()):
                failures.append((seed, d, "fullness"))
            if f.m < h.m - d * shadow_m:
                failures.append((seed, d, "bound"))
    return _result(6, "full-subgraph-suite", 30.0, not failures, started,
                   {"systems": 200, "failures": failures})


def criterion_7_oracle_goldens(golden_path: str | Path | None = None) -> dict:
    """Oracle values, with the n=6 cases recorded as stable goldens."""
    started = time.perf_counter()
    gpath = Path(golden_path) if golden_path else _default_golden_path()
    gpath.parent.mkdir(parents=True, exist_ok=True)
    details = {}
    r = ex2_bruteforce(5, clique(3), "K3")
    details["ex2(5,K3)"] = r.value
    ok = r.value == 6
    r = ex2_bruteforce(4, cycle(4), "C4")
    details["ex2(4,C4)"] = r.value
    ok = ok and r.value == 4
    r = ex3_bruteforce(5, expand(clique(3)), "K3plus")
    details["ex3(5,K3plus)"] = r.value
    ok = ok and r.value == 10
    two = TripleSystem(6, [(0, 1, 2), (3, 4, 5)])
    r = ex3_bruteforce(6, two, "two-disjoint-triples")
    details["ex3(6,two-disjoint)"] = r.value
    status = record_or_check(gpath, golden_key(3, 6, "two-disjoint-triples"),
                             r.value, r.witness.to_text())
    details["golden(two-disjoint)"] = status
    ok = ok and r.value == 10
    r = ex3_bruteforce(6, expand(clique(3)), "K3plus")
    details["ex3(6,K3plus)"] = r.value
    status = record_or_check(gpath, golden_key(3, 6, "K3plus"),
                             r.value, r.witness.to_text())
    details["golden(K3plus)"] = status
    ok = ok and r.value >= 10
    ok = ok and r.value >= sigma_construction(6, 2).m
    return _result(7, "oracle-goldens", 1200.0, ok, started, details)


def criterion_8_crosscuts() -> dict:
    """Crosscut numbers of the three reference patterns, minimality certified."""
    started = time.perf_counter()
    cases = [
        ("K3plus", expand(clique(3)), 2),
        ("K33plus", expand(complete_bipartite(3, 3)), 3),
        ("Ht2", h_t_pattern(2), 2),
    ]
    details = {}
    passed = True
    for name, h, expected in cases:
        res = crosscut(h)
        # independent minimality certificate: no smaller set is an exact transversal
        smaller_ok = not any(
            all(sum(1 for v in t if v in cand) == 1 for t in h.triples)
            for cand in itertools.combinations(range(h.n), expected - 1)
        )
        details[name] = {"sigma": res.size, "witness": res.witness,
                         "no-smaller": smaller_ok}
        passed = passed and res.exists and res.size == expected and smaller_ok
    return _result(8, "crosscut-values", 10.0, passed, started, details)


def criterion_9_sigma_freeness() -> dict:
    """The crosscut-capacity systems exclude the reference patterns."""
    started = time.perf_counter()
    s12 = sigma_construction(12, 2)
    s14 = sigma_construction(14, 3)
    cases = [
        ("K3plus->sigma(12,2)", expand(clique(3)), s12),
        ("Ht2->sigma(12,2)", h_t_pattern(2), s12),
        ("K33plus->sigma(14,3)", expand(complete_bipartite(3, 3)), s14),
    ]
    details = {"sigma(12,2).m": s12.m}
    passed = s12.m == 55
    for name, pat, host in cases:
        res = triple_embed(pat, host)
        verdict = ("budget" if res is BUDGET_EXHAUSTED
                   else "none" if res is None else "found")
        details[name] = verdict
        passed = passed and verdict == "none"
    return _result(9, "sigma-construction-freeness", 300.0, passed, started, details)


def criterion_10_coloring_facts() -> dict:
    """Bichromatic profiles of the octahedron; acyclic-colorability verdicts."""
    started = time.perf_counter()
    octa = octahedron()
    profiles = {bichromatic_cycle_profile(octa, c) for c in proper_3_colorings(octa)}
    details = {"octahedron-profiles": sorted(profiles)}
    passed = profiles == {(4, 4, 4)}
    for name, g, expected in [("wheel4", wheel(4), False), ("wheel6", wheel(6), False),
                              ("path3", path(3), True), ("cycle5", cycle(5), True)]:
        found, witness = has_acyclic_3_coloring(g)
        ok = found == expected
        if found:
            ok = ok and witness.is_proper()
            ok = ok and all(v == INFINITE for v in bichromatic_cycle_profile(g, witness))
        details[name] = found
        passed = passed and ok
    return _result(10, "coloring-facts", 10.0, passed, started, details)


def criterion_11_construction_contracts() -> dict:
    """Random-deletion freeness and the layered construction's exact contract."""
    started = time.perf_counter()
    ts, rep = random_deletion_construction(60, complete_bipartite(2, 2), 7)
    res = contains_expansion(complete_bipartite(2, 2), ts)
    verdict = ("budget" if res is BUDGET_EXHAUSTED
               else "none" if res is None else "found")
    details = {"random-deletion-triples": ts.m, "expansion-verdict": verdict}
    passed = verdict == "none" and rep.all_pass()
    lts, lrep = layered_girth_construction(20, 4, 1)
    checks = {c.claim: c for c in lrep.checks}
    layer_edges = checks["layer-edges"].measured
    layer_girth = checks["layer-girth"].measured
    product_ok = checks["triple-count-product"].passed
    details["layer-girth"] = layer_girth
    details["layer-edges"] = layer_edges
    details["layered-triples"] = lts.m
    girth_ok = layer_girth == "infinite" or layer_girth >= 5
    passed = passed and girth_ok and product_ok
    return _result(11, "construction-contracts", 120.0, passed, started, details)


ALL_CRITERIA = [
    criterion_1_norm_fibers,
    criterion_2_ratio_floor,
    criterion_3_pg_structure,
    criterion_4_kst_freeness,
    criterion_5_quotient_claims,
    criterion_6_full_subgraph_suite,
    criterion_7_oracle_goldens,
    criterion_8_crosscuts,
    criterion_9_sigma_freeness,
    criterion_10_coloring_facts,
    criterion_11_construction_contracts,
]

SUITES = {
    "acceptance": ALL_CRITERIA,
    "fields": [criterion_1_norm_fibers, criterion_2_ratio_floor],
    "norm-graphs": [criterion_3_pg_structure, criterion_4_kst_freeness,
                    criterion_5_quotient_claims],
    "hypergraphs": [criterion_6_full_subgraph_suite, criterion_8_crosscuts,
                    criterion_9_sigma_freeness],
    "oracle": [criterion_7_oracle_goldens],
    "colorings": [criterion_10_coloring_facts],
    "constructions": [criterion_11_construction_contracts],
}


def run_suite(name: str) -> list[dict]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return [fn() for fn in SUITES[name]]
