# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two hot scans.

Semantics are pinned by `_kernels_py` (the fallback): same signatures, same
results, same first-witness ordering (a ascending, b ascending within b <= a).
"""

import numpy as np

BACKEND_NAME = "cython"


def sdf_scan(const int[:, :] add, const int[:] neg, const int[:] sq,
             const unsigned char[:] mem_cond, const unsigned char[:] mem_diff,
             const unsigned char[:] mem_sum, bint include_zero):
    cdef Py_ssize_t n = add.shape[0]
    cdef Py_ssize_t a, b
    cdef Py_ssize_t start = 0 if include_zero else 1
    cdef int sa
    for a in range(start, n):
        sa = sq[a]
        for b in range(start, a + 1):
            if mem_cond[add[sa, neg[sq[b]]]]:
                if not mem_diff[add[a, neg[b]]] and not mem_sum[add[a, b]]:
                    return (int(a), int(b))
    return None


def z_scan(long long m, long long r):
    cdef long long a, b, best, s
    if m <= 1:
        return None
    head_arr = np.full(m, -1, dtype=np.int64)
    next_arr = np.empty(m, dtype=np.int64)
    cdef long long[:] head = head_arr
    cdef long long[:] nxt = next_arr
    for a in range(m):
        s = (a * a) % m
        b = head[s]
        best = -1
        # chain holds prior same-square residues in descending order, so the
        # last violating entry seen is the smallest b
        while b != -1:
            if (a + b) % r != 0:
                best = b
            b = nxt[b]
        if best != -1:
            return (int(a), int(best))
        nxt[a] = head[s]
        head[s] = a
    return None
