"""Fallback kernels (numpy-vectorized).

Mirror of the compiled module `_kernels`: identical signatures, identical
results, including which witness pair is reported first.  Both scans walk
pairs (a, b) with b <= a, a ascending then b ascending; restricting to b <= a
is exact because every condition checked is invariant under swapping a and b
(the premise negates, the sum is symmetric, the difference negates, and the
membership sets are closed under negation).
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

# Pair-array chunk bound for z_scan, keeps peak memory flat on large moduli.
_CHUNK = 1 << 21


def sdf_scan(add, neg, sq, mem_cond, mem_diff, mem_sum, include_zero):
    """First pair (a, b), b <= a, with add[sq[a], neg[sq[b]]] in mem_cond but
    a-b not in mem_diff and a+b not in mem_sum.  Returns (a, b) or None.

    ``include_zero=False`` restricts to nonzero a, b (index 0 is the ring zero).
    """
    n = add.shape[0]
    s = np.asarray(sq)
    cond = mem_cond[add[s[:, None], neg[s][None, :]]] != 0
    idx = np.arange(n)
    diff_in = mem_diff[add[idx[:, None], neg[None, :]]] != 0
    sum_in = mem_sum[add] != 0
    viol = cond & ~diff_in & ~sum_in
    viol &= np.tril(np.ones((n, n), dtype=bool))
    if not include_zero:
        viol[0, :] = False
        viol[:, 0] = False
    flat = np.flatnonzero(viol.ravel())
    if flat.size == 0:
        return None
    first = int(flat[0])
    return (first // n, first % n)


def z_scan(m, r):
    """First residue pair (a, b), 0 <= b < a < m, with a^2 = b^2 (mod m) and
    a+b not divisible by r.  Returns (a, b) or None.

    Only same-square pairs can satisfy the premise, so the scan groups
    residues by square value; within a group residues are ascending, which
    preserves the naive double-loop's first witness.
    """
    m = int(m)
    r = int(r)
    if m <= 1:
        return None
    a = np.arange(m, dtype=np.int64)
    sq = (a * a) % m
    order = np.lexsort((a, sq))
    vals = a[order]
    ssort = sq[order]
    newg = np.empty(m, dtype=bool)
    newg[0] = True
    newg[1:] = ssort[1:] != ssort[:-1]
    gidx = np.cumsum(newg) - 1
    starts = np.flatnonzero(newg)[gidx]
    prev = np.arange(m, dtype=np.int64) - starts
    cum = np.concatenate(([0], np.cumsum(prev)))
    if cum[-1] == 0:
        return None
    best = None
    pos = 0
    while pos < m:
        end = pos
        while end < m and cum[end + 1] - cum[pos] <= _CHUNK:
            end += 1
        if end == pos:
            end = pos + 1  # single oversized group: take it whole
        cnt = prev[pos:end]
        total = int(cnt.sum())
        if total:
            apos = np.repeat(np.arange(pos, end), cnt)
            off = np.arange(total) - np.repeat(cum[pos:end] - cum[pos], cnt)
            bpos = np.repeat(starts[pos:end], cnt) + off
            av = vals[apos]
            bv = vals[bpos]
            hit = (av + bv) % r != 0
            if hit.any():
                keys = av[hit] * m + bv[hit]
                kmin = int(keys.min())
                cand = (kmin // m, kmin % m)
                if best is None or cand < best:
                    best = cand
        pos = end
    return best
