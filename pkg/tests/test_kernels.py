"""Kernel backends: compiled and pure implementations must agree."""

import random

import pytest

from turan3 import kernels
from turan3._kernels_py import (max_common_neighbors_3 as pure_mc3,
                                triangle_count as pure_tc,
                                triangle_list as pure_tl)
from turan3.graphs import Graph


def random_rows(n, p, seed):
    rng = random.Random(seed)
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                  if rng.random() < p])
    return g.rows


class TestPureKernels:
    def test_triangle_list_matches_count(self):
        for seed in range(10):
            rows = random_rows(30, 0.3, seed)
            tl = pure_tl(rows, 30)
            assert len(tl) == pure_tc(rows, 30)
            assert all(a < b < c for a, b, c in tl)
            assert len(set(tl)) == len(tl)

    def test_max_common3_bruteforce(self):
        import itertools

        for seed in range(10):
            n = 12
            rows = random_rows(n, 0.5, seed)
            best, arg = pure_mc3(rows, n)
            brute = max((rows[i] & rows[j] & rows[k]).bit_count()
                        for i, j, k in itertools.combinations(range(n), 3))
            assert best == brute
            i, j, k = arg
            assert (rows[i] & rows[j] & rows[k]).bit_count() == best

    def test_tiny(self):
        assert pure_tc((0,), 1) == 0
        assert pure_mc3((0, 0), 2) == (0, None)


@pytest.mark.skipif(not kernels.have_fast(), reason="compiled kernels not built")
class TestFastMatchesPure:
    def test_triangle_count(self):
        from turan3 import _fastcore

        for seed in range(12):
            n = random.Random(seed).randint(2, 90)
            rows = random_rows(n, 0.35, seed)
            packed = kernels.pack_rows(rows, n)
            assert _fastcore.triangle_count(packed, n) == pure_tc(rows, n)

    def test_triangle_list(self):
        from turan3 import _fastcore

        for seed in range(8):
            n = random.Random(seed ^ 99).randint(2, 80)
            rows = random_rows(n, 0.4, seed)
            packed = kernels.pack_rows(rows, n)
            assert _fastcore.triangle_list(packed, n) == pure_tl(rows, n)

    def test_max_common3(self):
        from turan3 import _fastcore

        for seed in range(8):
            n = random.Random(seed ^ 7).randint(3, 70)
            rows = random_rows(n, 0.5, seed)
            packed = kernels.pack_rows(rows, n)
            fast_best, fast_arg = _fastcore.max_common_neighbors_3(packed, n)
            pure_best, _ = pure_mc3(rows, n)
            assert fast_best == pure_best
            i, j, k = fast_arg
            assert (rows[i] & rows[j] & rows[k]).bit_count() == fast_best

    def test_word_boundaries(self):
        # exercise vertices straddling the 64-bit word edges
        from turan3 import _fastcore

        n = 130
        edges = [(62, 63), (63, 64), (62, 64), (0, 127), (0, 128), (127, 128),
                 (1, 129), (63, 129), (1, 63)]
        g = Graph(n, edges)
        packed = kernels.pack_rows(g.rows, n)
        assert _fastcore.triangle_count(packed, n) == pure_tc(g.rows, n) == 3
        assert _fastcore.triangle_list(packed, n) == pure_tl(g.rows, n)


class TestDispatch:
    def test_backend_reported(self):
        assert kernels.backend_name() in ("fast", "pure")

    def test_dispatch_matches_pure(self):
        rows = random_rows(50, 0.3, 5)
        assert kernels.triangle_count(rows, 50) == pure_tc(rows, 50)
        assert kernels.triangle_list(rows, 50) == pure_tl(rows, 50)
        assert kernels.max_common_neighbors_3(rows, 50)[0] == pure_mc3(rows, 50)[0]
