"""Pure-Python bitset kernels (fallback for the compiled extension).

Adjacency is a sequence of per-vertex bit rows: bit v of rows[u] is set iff
u ~ v.  Python's big integers make these loops simple but slow on large
hosts; the compiled backend in ``_fastcore`` implements the same contracts
on packed 64-bit words.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "pure"


def triangle_count(rows: Sequence[int], n: int) -> int:
    total = 0
    for u in range(n):
        ru = rows[u] >> (u + 1)
        v = u + 1
        while ru:
            if ru & 1:
                t = (rows[u] & rows[v]) >> (v + 1)
                total += t.bit_count()
            ru >>= 1
            v += 1
    return total


def triangle_list(rows: Sequence[int], n: int) -> list[tuple[int, int, int]]:
    out = []
    for u in range(n):
        ru = rows[u] & (-1 << (u + 1))
        while ru:
            b = ru & -ru
            v = b.bit_length() - 1
            ru ^= b
            t = (rows[u] & rows[v]) & (-1 << (v + 1))
            while t:
                c = t & -t
                out.append((u, v, c.bit_length() - 1))
                t ^= c
    return out


def max_common_neighbors_3(rows: Sequence[int], n: int):
    """Max |N(i) & N(j) & N(k)| over vertex triples, with one argmax triple.

    Returns (0, None) when n < 3.
    """
    best = -1
    arg = None
    for i in range(n - 2):
        ri = rows[i]
        for j in range(i + 1, n - 1):
            m2 = ri & rows[j]
            if m2.bit_count() <= best:
                continue
            for k in range(j + 1, n):
                c = (m2 & rows[k]).bit_count()
                if c > best:
                    best = c
                    arg = (i, j, k)
    if arg is None:
        return 0, None
    return best, arg
