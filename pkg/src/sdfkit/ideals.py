"""Ideals of a finite commutative ring, and their algebra.

Every Ideal is verified against the ideal axioms at construction; operations
that return ideals return verified ones.  Radicals are exact: in a finite
ring the power sequence of every element cycles, so testing exponents up to
|R| decides membership in the radical.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import NotAnIdeal, NotMultClosed, OrderBoundExceeded
from .ring_core import Ring, same_ring


class Ideal:
    """An ideal as a sorted element tuple plus the generators that produced it."""

    def __init__(self, ring: Ring, elements: Iterable[int],
                 generators: Sequence[int] = (), verify: bool = True):
        self.ring = ring
        self.elements = tuple(sorted(set(int(e) for e in elements)))
        self.generators = tuple(int(g) for g in generators)
        if verify:
            self._verify()

    def _verify(self) -> None:
        r = self.ring
        elems = self.elements
        if not elems or elems[0] != r.zero:
            raise NotAnIdeal(f"set does not contain 0 in {r.spec}")
        for e in elems:
            if not 0 <= e < r.order:
                raise NotAnIdeal(f"element index {e} out of range")
        idx = np.fromiter(elems, dtype=np.int64)
        mask = self.mask
        if not mask[r.add_table[idx[:, None], idx[None, :]]].all():
            raise NotAnIdeal(f"set not closed under addition in {r.spec}")
        if not mask[r.neg_table[idx]].all():
            raise NotAnIdeal(f"set not closed under negation in {r.spec}")
        if not mask[r.mul_table[:, idx]].all():
            raise NotAnIdeal(f"set not absorbing in {r.spec}")

    @property
    def mask(self):
        """uint8 membership vector over the ring's index space."""
        try:
            return self._mask
        except AttributeError:
            m = np.zeros(self.ring.order, dtype=np.uint8)
            m[list(self.elements)] = 1
            self._mask = m
            return m

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.ring.order

    @property
    def is_zero(self) -> bool:
        return self.elements == (self.ring.zero,)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask[a])

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.ring is other.ring
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.elements))

    def gens_label(self) -> str:
        gens = self.generators or (self.ring.zero,)
        return "(" + ",".join(self.ring.label(g) for g in gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal({self.ring.spec}, gens={self.gens_label()}, size={len(self)})"


def _close_under_ops(r: Ring, seed: set[int]) -> tuple[int, ...]:
    """Smallest ideal-stable superset of seed: fixpoint under + and ring multiples."""
    cur = np.zeros(r.order, dtype=bool)
    cur[list(seed | {r.zero})] = True
    while True:
        idx = np.flatnonzero(cur)
        nxt = cur.copy()
        nxt[r.add_table[idx[:, None], idx[None, :]].ravel()] = True
        nxt[r.mul_table[:, idx].ravel()] = True
        if (nxt == cur).all():
            return tuple(int(i) for i in idx)
        cur = nxt


def ideal_from_generators(r: Ring, gens: Iterable[int]) -> Ideal:
    gens = tuple(int(g) for g in gens)
    elems = _close_under_ops(r, set(gens))
    return Ideal(r, elems, generators=gens)


def zero_ideal(r: Ring) -> Ideal:
    return Ideal(r, (r.zero,), generators=(r.zero,))


def unit_ideal(r: Ring) -> Ideal:
    return Ideal(r, range(r.order), generators=(r.one,))


def principal_ideal(r: Ring, x: int) -> Ideal:
    elems = np.unique(r.mul_table[:, x])
    return Ideal(r, (int(e) for e in elems), generators=(x,))


def radical(i: Ideal) -> Ideal:
    """sqrt(I) = {x : x^k in I for some 1 <= k <= |R|}.

    Because I absorbs ring multiples, x^k in I forces x^(k+1) in I, so power
    membership is monotone in the exponent; testing the squaring ladder
    x, x^2, x^4, ... up to the first power >= |R| is therefore exact.
    """
    try:
        return i._radical
    except AttributeError:
        pass
    r = i.ring
    memo = getattr(r, "_radical_memo", None)
    if memo is None:
        memo = r._radical_memo = {}
    cached = memo.get(i.elements)
    if cached is not None:
        i._radical = cached
        return cached
    mask = i.mask
    cur = np.arange(r.order)
    in_rad = mask.astype(bool).copy()
    for _ in range(max(1, (r.order - 1).bit_length())):
        cur = r.mul_table[cur, cur]
        in_rad |= mask[cur] != 0
    elems = tuple(int(x) for x in np.flatnonzero(in_rad))
    out = Ideal(r, elems, generators=elems)
    i._radical = out
    memo[i.elements] = out
    return out


def colon(i: Ideal, a: int) -> Ideal:
    """(I : a) = {r : r*a in I}."""
    r = i.ring
    elems = np.flatnonzero(i.mask[r.mul_table[:, a]])
    return Ideal(r, (int(e) for e in elems), generators=tuple(int(e) for e in elems))


def intersect(i: Ideal, j: Ideal) -> Ideal:
    same_ring(i.ring, j.ring)
    elems = sorted(set(i.elements) & set(j.elements))
    return Ideal(i.ring, elems, generators=tuple(elems))


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    """I + J = {x + y}; already an ideal, no closure pass needed."""
    same_ring(i.ring, j.ring)
    r = i.ring
    ii = np.fromiter(i.elements, dtype=np.int64)
    jj = np.fromiter(j.elements, dtype=np.int64)
    elems = np.unique(r.add_table[ii[:, None], jj[None, :]])
    return Ideal(r, (int(e) for e in elems),
                 generators=tuple(i.generators) + tuple(j.generators))


def product_ideal(i: Ideal, j: Ideal) -> Ideal:
    """IJ = ideal generated by pairwise products."""
    same_ring(i.ring, j.ring)
    r = i.ring
    ii = np.fromiter(i.elements, dtype=np.int64)
    jj = np.fromiter(j.elements, dtype=np.int64)
    prods = np.unique(r.mul_table[ii[:, None], jj[None, :]])
    return ideal_from_generators(r, (int(p) for p in prods))


def is_comaximal(i: Ideal, j: Ideal) -> bool:
    return len(ideal_sum(i, j)) == i.ring.order


def all_ideals(r: Ring) -> list[Ideal]:
    """Every ideal of R, sorted by (size, element tuple).

    Fixpoint closure of the principal ideals under pairwise sums; every ideal
    is a finite sum of principal ideals, so the closure is exhaustive.
    """
    if r.order > config.ideal_enum_bound():
        raise OrderBoundExceeded(
            f"ideal enumeration needs order <= {config.ideal_enum_bound()}, got {r.order}"
        )
    principals: dict[tuple[int, ...], Ideal] = {}
    for x in range(r.order):
        p = principal_ideal(r, x)
        principals.setdefault(p.elements, p)
    seen: dict[tuple[int, ...], Ideal] = dict(principals)
    work = list(principals.values())
    plist = list(principals.values())
    while work:
        a = work.pop()
        for p in plist:
            s = ideal_sum(a, p)
            if s.elements not in seen:
                seen[s.elements] = s
                work.append(s)
    return sorted(seen.values(), key=lambda i: (len(i), i.elements))


def proper_ideals(r: Ring) -> list[Ideal]:
    return [i for i in all_ideals(r) if i.is_proper]


# -- multiplicative sets and saturation -------------------------------------

class MultSet:
    """Multiplicatively closed subset containing 1 (and not required to avoid 0)."""

    def __init__(self, ring: Ring, elements: Iterable[int], gens: Sequence[int] = ()):
        self.ring = ring
        self.elements = tuple(sorted(set(int(e) for e in elements)))
        self.gens = tuple(int(g) for g in gens)
        if ring.one not in self.elements:
            raise NotMultClosed(f"multiplicative set must contain 1 in {ring.spec}")
        es = set(self.elements)
        for a in self.elements:
            for b in self.elements:
                if ring.mul(a, b) not in es:
                    raise NotMultClosed("set not multiplicatively closed")

    def __contains__(self, a: int) -> bool:
        return a in set(self.elements)

    def gens_label(self) -> str:
        gens = self.gens or (self.ring.one,)
        return "(" + ",".join(self.ring.label(g) for g in gens) + ")"

    def __repr__(self) -> str:
        return f"MultSet({self.ring.spec}, {{{', '.join(map(self.ring.label, self.elements))}}})"


def mult_closure(r: Ring, gens: Iterable[int]) -> MultSet:
    gens = tuple(int(g) for g in gens)
    cur = {r.one}
    work = list(set(gens) | {r.one})
    while work:
        x = work.pop()
        if x not in cur:
            cur.add(x)
        for y in list(cur):
            z = r.mul(x, y)
            if z not in cur:
                cur.add(z)
                work.append(z)
    return MultSet(r, cur, gens=gens)


def is_s_saturated(i: Ideal, s: MultSet) -> bool:
    """True iff s*r in I implies r in I, for all s in S, r in R."""
    same_ring(i.ring, s.ring)
    r = i.ring
    sidx = np.fromiter(s.elements, dtype=np.int64)
    hit = i.mask[r.mul_table[sidx, :]] != 0  # [k, r] : s_k * r in I
    bad = hit & (i.mask[None, :] == 0)
    return not bool(bad.any())


def s_saturation_witness(i: Ideal, s: MultSet) -> tuple[int, int] | None:
    """(s, r) with s*r in I, r not in I; None when saturated."""
    r = i.ring
    for sv in s.elements:
        for rv in range(r.order):
            if i.mask[r.mul(sv, rv)] and not i.mask[rv]:
                return (sv, rv)
    return None


def saturate(i: Ideal, s: MultSet) -> Ideal:
    """Smallest S-saturated ideal containing I (fixpoint of the pullback step)."""
    same_ring(i.ring, s.ring)
    r = i.ring
    sidx = np.fromiter(s.elements, dtype=np.int64)
    cur = i.mask.astype(bool).copy()
    while True:
        pulled = (cur[r.mul_table[sidx, :]]).any(axis=0)
        nxt = cur | pulled
        if (nxt == cur).all():
            break
        cur = nxt
    elems = tuple(int(x) for x in np.flatnonzero(cur))
    return Ideal(r, elems, generators=i.generators)
