"""Containment search: soundness, completeness at small scale, budgets."""

import itertools
import random

from turan3.embedding import (BUDGET_EXHAUSTED, Embedding, check_graph_embedding,
                              check_triple_embedding, contains_expansion,
                              graph_embed, triple_embed)
from turan3.graphs import Graph, clique, complete_bipartite, cycle, octahedron
from turan3.triples import TripleSystem, expand, h_t_pattern
from turan3.constructions import sigma_construction


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_system(n, m, seed):
    rng = random.Random(seed)
    pool = list(itertools.combinations(range(n), 3))
    return TripleSystem(n, rng.sample(pool, min(m, len(pool))))


def complete_system(n):
    return TripleSystem(n, itertools.combinations(range(n), 3))


def brute_graph_embed(pattern, host):
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pattern.edges):
            return True
    return False


def brute_triple_embed(pattern, host):
    hset = set(host.triples)
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(tuple(sorted((image[a], image[b], image[c]))) in hset
               for a, b, c in pattern.triples):
            return True
    return False


class TestGraphEmbed:
    def test_no_triangle_in_bipartite(self):
        assert graph_embed(clique(3), complete_bipartite(3, 3)) is None

    def test_c4_in_octahedron(self):
        emb = graph_embed(cycle(4), octahedron())
        assert isinstance(emb, Embedding)
        assert check_graph_embedding(cycle(4), octahedron(), emb)

    def test_pattern_larger_than_host(self):
        assert graph_embed(clique(5), clique(4)) is None

    def test_completeness_random(self):
        for seed in range(120):
            rng = random.Random(seed)
            pattern = random_graph(rng.randint(2, 5), 0.6, seed)
            host = random_graph(rng.randint(4, 8), 0.5, seed + 1000)
            got = graph_embed(pattern, host)
            assert got is not BUDGET_EXHAUSTED
            assert (got is not None) == brute_graph_embed(pattern, host)

    def test_budget_exhaustion_distinct_from_none(self):
        # triangle in a big bipartite host: the exhaustive refutation needs
        # many expansions, a tiny budget cannot finish it
        host = complete_bipartite(10, 10)
        res = graph_embed(clique(3), host, budget=3)
        assert res is BUDGET_EXHAUSTED
        assert graph_embed(clique(3), host) is None

    def test_deterministic(self):
        host = random_graph(10, 0.5, 5)
        a = graph_embed(cycle(4), host)
        b = graph_embed(cycle(4), host)
        assert a == b

    def test_env_var_budget(self, monkeypatch):
        monkeypatch.setenv("TURAN3_BUDGET", "3")
        assert graph_embed(clique(3), complete_bipartite(10, 10)) is BUDGET_EXHAUSTED
        monkeypatch.delenv("TURAN3_BUDGET")
        assert graph_embed(clique(3), complete_bipartite(10, 10)) is None


class TestTripleEmbed:
    def test_single_triple_in_anything_nonempty(self):
        pattern = TripleSystem(3, [(0, 1, 2)])
        assert triple_embed(pattern, random_system(7, 5, 1)) is not None

    def test_ht2_not_in_sigma_10_2(self):
        assert triple_embed(h_t_pattern(2), sigma_construction(10, 2)) is None

    def test_expanded_clique_in_complete6(self):
        emb = triple_embed(expand(clique(3)), complete_system(6))
        assert isinstance(emb, Embedding)
        assert check_triple_embedding(expand(clique(3)), complete_system(6), emb)

    def test_completeness_random(self):
        for seed in range(80):
            rng = random.Random(seed)
            pn = rng.randint(3, 5)
            pattern = random_system(pn, rng.randint(1, 4), seed)
            host = random_system(rng.randint(4, 7), rng.randint(0, 12), seed + 500)
            got = triple_embed(pattern, host)
            assert got is not BUDGET_EXHAUSTED
            assert (got is not None) == brute_triple_embed(pattern, host)

    def test_budget_exhaustion(self):
        pattern = expand(clique(3))
        host = complete_system(7)
        assert triple_embed(pattern, host, budget=2) is BUDGET_EXHAUSTED


class TestContainsExpansion:
    def test_pigeonhole_none(self):
        # the expansion needs 6 distinct vertices
        assert contains_expansion(clique(3), complete_system(5)) is None

    def test_found_in_complete6(self):
        emb = contains_expansion(clique(3), complete_system(6))
        assert isinstance(emb, Embedding)
        assert check_triple_embedding(expand(clique(3)), complete_system(6), emb)

    def test_agrees_with_triple_embed(self):
        agree = 0
        for seed in range(100):
            rng = random.Random(seed)
            gn = rng.randint(2, 5)
            pool = list(itertools.combinations(range(gn), 2))
            g = Graph(gn, rng.sample(pool, rng.randint(1, len(pool))))
            host = random_system(rng.randint(6, 12), rng.randint(5, 40), seed + 77)
            a = contains_expansion(g, host)
            b = triple_embed(expand(g), host)
            assert (a is None) == (b is None)
            if a is not None:
                assert check_triple_embedding(expand(g), host, a)
            agree += 1
        assert agree == 100

    def test_edgeless_pattern(self):
        g = Graph(3)
        emb = contains_expansion(g, complete_system(4))
        assert emb.mapping == (0, 1, 2)
        assert emb.validate()


class TestSymmetryBreaking:
    def test_twin_breaking_preserves_verdicts(self):
        # patterns with heavy symmetry still match brute force
        for pattern in (clique(4), complete_bipartite(2, 3), cycle(4)):
            for seed in range(30):
                host = random_graph(8, 0.55, seed + 300)
                got = graph_embed(pattern, host)
                assert (got is not None) == brute_graph_embed(pattern, host)
