"""Triple systems: expansion, shadow, codegree, full subsystems, crosscuts."""

import itertools
import random

import pytest

from turan3.errors import BadParameter, FormatError, SameVertex
from turan3.graphs import clique, complete_bipartite, path
from turan3.triples import (TripleSystem, codegree, codegree_map,
                            crosscut, expand, full_subgraph, h_t_pattern,
                            shadow, triangles_of_graph)
from turan3.constructions import sigma_construction


def random_system(n, m, seed):
    rng = random.Random(seed)
    pool = list(itertools.combinations(range(n), 3))
    return TripleSystem(n, rng.sample(pool, min(m, len(pool))))


def complete_system(n):
    return TripleSystem(n, itertools.combinations(range(n), 3))


class TestTripleSystemType:
    def test_dedup_sort_validate(self):
        h = TripleSystem(5, [(4, 2, 0), (0, 2, 4), (1, 2, 3)])
        assert h.triples == ((0, 2, 4), (1, 2, 3))

    def test_repeated_vertex_rejected(self):
        with pytest.raises(BadParameter):
            TripleSystem(5, [(1, 1, 2)])

    def test_out_of_range_rejected(self):
        with pytest.raises(BadParameter):
            TripleSystem(3, [(0, 1, 3)])


class TestExpand:
    def test_clique3(self):
        h = expand(clique(3))
        assert (h.n, h.m) == (6, 3)
        assert h.triples == ((0, 1, 3), (0, 2, 4), (1, 2, 5))

    def test_path2(self):
        h = expand(path(2))
        assert (h.n, h.m) == (5, 2)

    def test_edge_count_preserved(self):
        for seed in range(5):
            rng = random.Random(seed)
            n = rng.randint(3, 8)
            pool = list(itertools.combinations(range(n), 2))
            from turan3.graphs import Graph
            g = Graph(n, rng.sample(pool, rng.randint(0, len(pool))))
            h = expand(g)
            assert h.m == g.m
            assert h.n == g.n + g.m
            # each apex lies in exactly one triple
            for apex in range(g.n, h.n):
                assert h.vertex_degree(apex) == 1


class TestShadow:
    def test_single_triple_is_triangle(self):
        assert shadow(TripleSystem(3, [(0, 1, 2)])).m == 3

    def test_expanded_clique3(self):
        assert shadow(expand(clique(3))).m == 9

    def test_contains_original_graph(self):
        g = complete_bipartite(2, 3)
        sh = shadow(expand(g))
        assert set(g.edges) <= set(sh.edges)


class TestCodegree:
    def test_complete_on_5(self):
        h = complete_system(5)
        for u, v in itertools.combinations(range(5), 2):
            assert codegree(h, u, v) == 3

    def test_expanded_clique3_original_pair(self):
        h = expand(clique(3))
        assert codegree(h, 0, 1) == 1

    def test_sigma_construction_noncore_pair(self):
        h = sigma_construction(10, 2)
        assert codegree(h, 3, 7) == 1

    def test_same_vertex_rejected(self):
        with pytest.raises(SameVertex):
            codegree(complete_system(4), 2, 2)

    def test_map_matches_pointwise(self):
        h = random_system(9, 25, 4)
        cm = codegree_map(h)
        for u, v in itertools.combinations(range(9), 2):
            assert cm.get((u, v), 0) == codegree(h, u, v)


class TestFullSubgraph:
    def test_single_triple_collapses(self):
        h = TripleSystem(3, [(0, 1, 2)])
        assert full_subgraph(h, 1).m == 0

    def test_complete5_d2_unchanged(self):
        h = complete_system(5)
        assert full_subgraph(h, 2) == h

    def test_expanded_clique3_cascades_to_empty(self):
        assert full_subgraph(expand(clique(3)), 1).m == 0

    def test_fullness_and_bound_random(self):
        for seed in range(60):
            rng = random.Random(seed)
            n = rng.randint(4, 12)
            h = random_system(n, rng.randint(0, 30), seed)
            sm = shadow(h).m
            for d in (1, 2, 3):
                f = full_subgraph(h, d)
                assert set(f.triples) <= set(h.triples)
                assert all(c >= d + 1 for c in codegree_map(f).values())
                assert f.m >= h.m - d * sm

    def test_deletion_monotonicity(self):
        # deleting all triples through a fixed shadow edge never raises codegrees
        h = random_system(10, 24, 11)
        before = codegree_map(h)
        target = (0, 1)
        rest = [t for t in h.triples if not (target[0] in t and target[1] in t)]
        after = codegree_map(TripleSystem(10, rest))
        for pair, c in after.items():
            assert c <= before[pair]


class TestCrosscut:
    def test_single_triple(self):
        res = crosscut(TripleSystem(3, [(0, 1, 2)]))
        assert res.exists and res.size == 1

    def test_expanded_clique3(self):
        res = crosscut(expand(clique(3)))
        assert res.exists and res.size == 2
        assert res.witness == (0, 5)  # one triangle vertex plus the far apex

    def test_expanded_k33(self):
        res = crosscut(expand(complete_bipartite(3, 3)))
        assert res.exists and res.size == 3
        assert res.witness == (0, 1, 2)

    def test_ht2(self):
        res = crosscut(h_t_pattern(2))
        assert res.exists and res.size == 2
        # {x1, x2} works; {a, b} is the lexicographically smallest witness
        assert res.witness == (0, 1)

    def test_empty_system(self):
        res = crosscut(TripleSystem(4))
        assert res.exists and res.size == 0 and res.witness == ()

    def test_no_exact_transversal(self):
        res = crosscut(complete_system(4))
        assert not res.exists
        assert not res.cap_hit  # exhausted below the cap: none exists at all

    def test_minimality_certified(self):
        for h in (expand(clique(3)), h_t_pattern(2), expand(complete_bipartite(3, 3))):
            res = crosscut(h)
            for cand in itertools.combinations(range(h.n), res.size - 1):
                s = set(cand)
                assert not all(len(s & set(t)) == 1 for t in h.triples)

    def test_witness_hits_each_triple_once(self):
        for seed in range(30):
            h = random_system(9, random.Random(seed).randint(1, 15), seed + 100)
            res = crosscut(h)
            if res.exists:
                s = set(res.witness)
                assert all(len(s & set(t)) == 1 for t in h.triples)

    def test_cap_respected(self):
        with pytest.raises(BadParameter):
            crosscut(complete_system(4), cap=9)


class TestHtPattern:
    def test_shape(self):
        h = h_t_pattern(2)
        assert (h.n, h.m) == (6, 4)
        h3 = h_t_pattern(3)
        assert (h3.n, h3.m) == (8, 6)

    def test_shadow_structure(self):
        t = 3
        h = h_t_pattern(t)
        sh = set(shadow(h).edges)
        for i in range(1, t + 1):
            x, y = 2 * i, 2 * i + 1
            assert (0, x) in sh and (0, y) in sh
            assert (1, x) in sh and (1, y) in sh
            assert (x, y) in sh
        assert (0, 1) not in sh


class TestTrianglesOfGraph:
    def test_examples(self):
        assert triangles_of_graph(clique(3)).m == 1
        assert triangles_of_graph(complete_bipartite(3, 3)).m == 0
        from turan3.graphs import octahedron
        assert triangles_of_graph(octahedron()).m == 8


class TestTextFormat:
    def test_round_trip(self):
        h = expand(complete_bipartite(2, 3))
        assert TripleSystem.from_text(h.to_text()) == h
        assert TripleSystem.from_text(h.to_text()).to_text() == h.to_text()

    def test_bad_header(self):
        with pytest.raises(FormatError):
            TripleSystem.from_text("g 3 0\n")

    def test_unsorted_rejected(self):
        with pytest.raises(FormatError):
            TripleSystem.from_text("h3 4 1\n2 1 0\n")
