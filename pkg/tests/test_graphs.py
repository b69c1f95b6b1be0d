"""Graph type, named generators, girth, colorings, treewidth-two tests."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan3.errors import BadParameter, FormatError, ImproperColoring, TooLarge, UnknownName
from turan3.graphs import (Coloring, Graph, INFINITE, bichromatic_cycle_profile,
                           clique, complete_bipartite, cube, cycle, girth,
                           has_acyclic_3_coloring, high_girth_bipartite,
                           named_graph, octahedron, path, proper_3_colorings,
                           treewidth_le_two, triangle_count, triangle_list,
                           wheel)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


class TestGraphType:
    def test_dedup_and_sort(self):
        g = Graph(3, [(2, 1), (1, 2), (0, 1)])
        assert g.edges == ((0, 1), (1, 2))

    def test_loop_rejected(self):
        with pytest.raises(BadParameter):
            Graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(BadParameter):
            Graph(3, [(0, 3)])

    def test_rows_match_edges(self):
        g = random_graph(12, 0.4, 3)
        for u in range(12):
            for v in range(12):
                assert bool(g.rows[u] >> v & 1) == ((min(u, v), max(u, v)) in set(g.edges))


class TestNamedGraphs:
    def test_cube(self):
        g = cube()
        assert (g.n, g.m) == (8, 12)
        assert set(g.degrees()) == {3}

    def test_complete_bipartite_33(self):
        assert complete_bipartite(3, 3).m == 9

    def test_octahedron(self):
        g = octahedron()
        assert (g.n, g.m) == (6, 12)
        assert set(g.degrees()) == {4}

    def test_wheel_is_cycle_plus_hub(self):
        g = wheel(5)
        assert (g.n, g.m) == (6, 10)
        assert g.degree(5) == 5

    def test_named_dispatch(self):
        assert named_graph("clique", 4) == clique(4)
        assert named_graph("octahedron") == octahedron()
        with pytest.raises(UnknownName):
            named_graph("petersen")
        with pytest.raises(BadParameter):
            named_graph("cycle", 2)


class TestGirth:
    def test_examples(self):
        assert girth(cycle(5)) == 5
        assert girth(path(3)) == INFINITE
        assert girth(octahedron()) == 3
        assert girth(cube()) == 4
        assert girth(complete_bipartite(3, 3)) == 4

    def test_against_bruteforce(self):
        # shortest cycle by checking all vertex subsets that carry a cycle
        def brute(g):
            best = INFINITE
            for k in range(3, g.n + 1):
                for sub in itertools.combinations(range(g.n), k):
                    for perm in itertools.permutations(sub[1:]):
                        seq = (sub[0],) + perm
                        if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                            best = min(best, k)
                            break
                    else:
                        continue
                    break
                if best < INFINITE:
                    return best
            return best

        for seed in range(20):
            g = random_graph(7, 0.3, seed)
            assert girth(g) == brute(g)


class TestTriangles:
    def test_counts(self):
        assert triangle_count(clique(3)) == 1
        assert triangle_count(complete_bipartite(3, 3)) == 0
        assert triangle_count(octahedron()) == 8

    def test_trace_formula(self):
        # triangles = sum over edges of |N(u) & N(v)| / 3
        for seed in range(10):
            g = random_graph(40, 0.2, seed)
            acc = sum((g.rows[u] & g.rows[v]).bit_count() for u, v in g.edges)
            assert acc % 3 == 0
            assert triangle_count(g) == acc // 3
            assert len(triangle_list(g)) == acc // 3


class TestTreewidthTwo:
    def test_examples(self):
        assert treewidth_le_two(clique(4)) is False
        assert treewidth_le_two(cycle(5)) is True
        assert treewidth_le_two(octahedron()) is False
        assert treewidth_le_two(path(4)) is True

    def test_series_parallel_built_graphs(self):
        # start from a triangle, repeatedly hang a vertex on an existing edge
        for seed in range(10):
            rng = random.Random(seed)
            edges = [(0, 1), (0, 2), (1, 2)]
            n = 3
            for _ in range(rng.randint(1, 8)):
                u, v = edges[rng.randrange(len(edges))]
                edges.extend([(u, n), (v, n)])
                n += 1
            assert treewidth_le_two(Graph(n, edges)) is True

    def test_k4_subdivisions(self):
        for seed in range(10):
            rng = random.Random(seed)
            edges = []
            n = 4
            for u, v in itertools.combinations(range(4), 2):
                hops = rng.randint(0, 2)
                prev = u
                for _ in range(hops):
                    edges.append((prev, n))
                    prev = n
                    n += 1
                edges.append((prev, v))
            assert treewidth_le_two(Graph(n, edges)) is False

    def test_cross_check_against_embedding(self):
        # a K4 subgraph is in particular a K4 subdivision
        from turan3.embedding import graph_embed

        for seed in range(40):
            g = random_graph(random.Random(seed).randint(4, 12), 0.45, seed)
            if graph_embed(clique(4), g) is not None:
                assert treewidth_le_two(g) is False


class TestColorings:
    def test_clique3_has_six(self):
        assert len(list(proper_3_colorings(clique(3)))) == 6

    def test_odd_wheel_has_none(self):
        assert list(proper_3_colorings(wheel(5))) == []

    def test_octahedron_colorings_forced(self):
        cols = list(proper_3_colorings(octahedron()))
        assert len(cols) == 6
        for c in cols:
            # antipodal pairs form the color classes
            assert c.colors[0] == c.colors[1]
            assert c.colors[2] == c.colors[3]
            assert c.colors[4] == c.colors[5]

    def test_lexicographic_emission(self):
        cols = [c.colors for c in proper_3_colorings(path(3))]
        assert cols == sorted(cols)
        assert len(cols) == len(set(cols))

    def test_count_matches_bruteforce(self):
        for seed in range(8):
            g = random_graph(6, 0.4, seed)
            expected = sum(
                1 for assign in itertools.product((0, 1, 2), repeat=6)
                if all(assign[u] != assign[v] for u, v in g.edges)
            )
            assert len(list(proper_3_colorings(g))) == expected

    def test_up_to_symmetry_pins_vertex_zero(self):
        g = clique(3)
        pinned = list(proper_3_colorings(g, up_to_symmetry=True))
        assert len(pinned) == 2
        assert all(c.colors[0] == 0 for c in pinned)
        full = {c.colors for c in proper_3_colorings(g)}
        assert {c.colors for c in pinned} == {c for c in full if c[0] == 0}

    def test_too_large(self):
        with pytest.raises(TooLarge):
            next(proper_3_colorings(Graph(25)))


class TestBichromaticProfile:
    def test_octahedron_all_fours(self):
        g = octahedron()
        for c in proper_3_colorings(g):
            assert bichromatic_cycle_profile(g, c) == (4, 4, 4)

    def test_path_all_infinite(self):
        g = path(3)
        c = next(proper_3_colorings(g))
        assert bichromatic_cycle_profile(g, c) == (INFINITE, INFINITE, INFINITE)

    def test_wheel4_rim_pair(self):
        g = wheel(4)
        c = Coloring(g, (1, 2, 1, 2, 0))  # hub colored 0, rim alternating
        assert c.is_proper()
        profile = bichromatic_cycle_profile(g, c)
        assert profile[2] == 4  # class pair (1,2) carries the rim C4

    def test_improper_rejected(self):
        g = clique(3)
        with pytest.raises(ImproperColoring):
            bichromatic_cycle_profile(g, Coloring(g, (0, 0, 1)))


class TestAcyclicColoring:
    def test_examples(self):
        assert has_acyclic_3_coloring(path(3))[0] is True
        assert has_acyclic_3_coloring(cycle(5))[0] is True
        assert has_acyclic_3_coloring(wheel(4))[0] is False
        assert has_acyclic_3_coloring(wheel(6))[0] is False
        assert has_acyclic_3_coloring(octahedron())[0] is False

    def test_witness_is_acyclic(self):
        g = cycle(5)
        found, witness = has_acyclic_3_coloring(g)
        assert found and witness.is_proper()
        assert all(v == INFINITE for v in bichromatic_cycle_profile(g, witness))

    def test_agrees_with_bruteforce(self):
        # independent route: profile girths instead of union-find forests
        def brute(g):
            for assign in itertools.product((0, 1, 2), repeat=g.n):
                col = Coloring(g, assign)
                if not col.is_proper():
                    continue
                if all(v == INFINITE for v in bichromatic_cycle_profile(g, col)):
                    return True
            return False

        for seed in range(12):
            g = random_graph(random.Random(seed).randint(4, 8), 0.45, seed)
            assert has_acyclic_3_coloring(g)[0] == brute(g)
        g = random_graph(10, 0.4, 99)
        assert has_acyclic_3_coloring(g)[0] == brute(g)


class TestHighGirthBipartite:
    def test_contract_small(self):
        g = high_girth_bipartite(6, 4, 0)
        assert girth(g) > 4

    def test_golden_20_4_1(self):
        g = high_girth_bipartite(20, 4, 1)
        assert g.m == 31  # golden value, fixed by the seeded generator
        assert g.m >= 10
        assert girth(g) > 4

    def test_output_is_bipartite(self):
        for seed in range(5):
            g = high_girth_bipartite(13, 5, seed)
            a = (13 + 1) // 2
            assert all(u < a <= v for u, v in g.edges)

    def test_girth_contract_many_seeds(self):
        for seed in range(10):
            g = high_girth_bipartite(16, 6, seed)
            assert girth(g) > 6


class TestTextFormat:
    def test_round_trip_exact(self):
        g = octahedron()
        assert Graph.from_text(g.to_text()) == g
        assert Graph.from_text(g.to_text()).to_text() == g.to_text()

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 10), st.integers(0, 2**20))
    def test_round_trip_random(self, n, seed):
        g = random_graph(n, 0.5, seed)
        assert Graph.from_text(g.to_text()) == g

    def test_bad_inputs(self):
        with pytest.raises(FormatError):
            Graph.from_text("")
        with pytest.raises(FormatError):
            Graph.from_text("h3 3 0\n")
        with pytest.raises(FormatError):
            Graph.from_text("g 3 1\n1 0\n")
        with pytest.raises(FormatError):
            Graph.from_text("g 3 2\n0 1\n0 1\n")
