# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels over packed 64-bit adjacency words.

Same contracts as ``_kernels_py``; rows arrive as a C-contiguous
(n, words) uint64 array with bit v of row u at word v//64, bit v%64.
"""

import numpy as np

cimport numpy as cnp

cdef extern from *:
    """
    static inline int t3_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int t3_ctz(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int t3_popcount(unsigned long long x) nogil
    int t3_ctz(unsigned long long x) nogil

BACKEND = "fast"


cdef inline unsigned long long _above_mask(int bit) nogil:
    # bits strictly above position `bit` within one word
    if bit >= 63:
        return 0
    return (<unsigned long long> 0xFFFFFFFFFFFFFFFF) << (bit + 1)


def triangle_count(cnp.uint64_t[:, ::1] adj, int n):
    cdef long total = 0
    cdef int words = adj.shape[1]
    cdef int u, v, w, b
    cdef unsigned long long x, t
    with nogil:
        for u in range(n):
            w = u >> 6
            x = adj[u, w] & _above_mask(u & 63)
            while True:
                while x == 0:
                    w += 1
                    if w >= words:
                        break
                    x = adj[u, w]
                if w >= words:
                    break
                b = t3_ctz(x)
                x &= x - 1
                v = (w << 6) + b
                # count common neighbors above v
                t = (adj[u, v >> 6] & adj[v, v >> 6]) & _above_mask(v & 63)
                total += t3_popcount(t)
                for b in range((v >> 6) + 1, words):
                    total += t3_popcount(adj[u, b] & adj[v, b])
    return total


def triangle_list(cnp.uint64_t[:, ::1] adj, int n):
    cdef int words = adj.shape[1]
    cdef int u, v, w, w2, b
    cdef unsigned long long x, t
    out = []
    for u in range(n):
        w = u >> 6
        x = adj[u, w] & _above_mask(u & 63)
        while True:
            while x == 0:
                w += 1
                if w >= words:
                    break
                x = adj[u, w]
            if w >= words:
                break
            b = t3_ctz(x)
            x &= x - 1
            v = (w << 6) + b
            for w2 in range(v >> 6, words):
                t = adj[u, w2] & adj[v, w2]
                if w2 == (v >> 6):
                    t &= _above_mask(v & 63)
                while t != 0:
                    out.append((u, v, (w2 << 6) + t3_ctz(t)))
                    t &= t - 1
    return out


def max_common_neighbors_3(cnp.uint64_t[:, ::1] adj, int n):
    cdef int words = adj.shape[1]
    cdef int i, j, k, w
    cdef int best = -1, bi = 0, bj = 0, bk = 0
    cdef int c2, c3
    cdef unsigned long long[::1] m2 = np.zeros(words, dtype=np.uint64)
    if n < 3:
        return 0, None
    with nogil:
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                c2 = 0
                for w in range(words):
                    m2[w] = adj[i, w] & adj[j, w]
                    c2 += t3_popcount(m2[w])
                if c2 <= best:
                    continue
                for k in range(j + 1, n):
                    c3 = 0
                    for w in range(words):
                        c3 += t3_popcount(m2[w] & adj[k, w])
                    if c3 > best:
                        best = c3
                        bi = i
                        bj = j
                        bk = k
    return best, (bi, bj, bk)
