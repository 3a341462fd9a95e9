"""Shared fixtures and independent brute-force oracles.

The oracles here re-derive every property straight from the definitions with
plain Python loops; they never call the predicates module, so a bug shared by
the library and its tests would have to be written twice.
"""

from __future__ import annotations

import pytest

from sdfkit import make_product, make_zn, parse_ring


def naive_members(ring, idx_set, a):
    return a in idx_set


def naive_radical(ring, idx_set):
    """Elements with some power in the set, by direct iteration."""
    out = set()
    for a in range(ring.order):
        x = a
        seen = set()
        while x not in seen:
            if x in idx_set:
                out.add(a)
                break
            seen.add(x)
            x = int(ring.mul_table[x, a])
    return out


def naive_is_sdf_absorbing(ring, idx_set):
    add, neg, sq = ring.add_table, ring.neg_table, ring.squares
    for a in range(1, ring.order):
        for b in range(1, ring.order):
            if int(add[sq[a], neg[sq[b]]]) in idx_set:
                if int(add[a, neg[b]]) not in idx_set \
                        and int(add[a, b]) not in idx_set:
                    return False
    return True


def naive_is_sdf_primary(ring, idx_set):
    rad = naive_radical(ring, idx_set)
    add, neg, sq = ring.add_table, ring.neg_table, ring.squares
    for a in range(ring.order):
        for b in range(ring.order):
            if int(add[sq[a], neg[sq[b]]]) in idx_set:
                if int(add[a, b]) not in rad \
                        and int(add[a, neg[b]]) not in idx_set:
                    return False
    return True


def naive_is_prime(ring, idx_set):
    if len(idx_set) == ring.order:
        return False
    for a in range(ring.order):
        for b in range(ring.order):
            if int(ring.mul_table[a, b]) in idx_set:
                if a not in idx_set and b not in idx_set:
                    return False
    return True


def naive_is_primary(ring, idx_set):
    if len(idx_set) == ring.order:
        return False
    rad = naive_radical(ring, idx_set)
    for a in range(ring.order):
        for b in range(ring.order):
            if int(ring.mul_table[a, b]) in idx_set:
                if a not in idx_set and b not in rad:
                    return False
    return True


def naive_is_maximal(ring, idx_set):
    if len(idx_set) == ring.order:
        return False
    # maximal iff no proper ideal strictly between; enumerate subgroup
    # closures of idx_set + one extra element
    for extra in range(ring.order):
        if extra in idx_set:
            continue
        grown = naive_ideal_closure(ring, set(idx_set) | {extra})
        if len(grown) < ring.order:
            return False
    return True


def naive_ideal_closure(ring, seed):
    cur = set(seed) | {ring.zero}
    changed = True
    while changed:
        changed = False
        for a in list(cur):
            for b in list(cur):
                s = int(ring.add_table[a, b])
                if s not in cur:
                    cur.add(s)
                    changed = True
        for a in list(cur):
            for r in range(ring.order):
                p = int(ring.mul_table[r, a])
                if p not in cur:
                    cur.add(p)
                    changed = True
    return cur


@pytest.fixture(scope="session")
def z12():
    return make_zn(12)


@pytest.fixture(scope="session")
def z9():
    return make_zn(9)


@pytest.fixture(scope="session")
def z15():
    return make_zn(15)


@pytest.fixture(scope="session")
def z2xz4():
    return make_product(make_zn(2), make_zn(4))


@pytest.fixture(scope="session")
def small_rings():
    """Mixed bag covering every constructor, kept tiny enough for the
    triple-loop oracles."""
    rings = [make_zn(n) for n in (2, 3, 4, 6, 8, 9, 12, 15, 16)]
    rings.append(make_product(make_zn(2), make_zn(4)))
    rings.append(make_product(make_zn(3), make_zn(3)))
    rings += [parse_ring(s) for s in
              ("Q(Z12,(4))", "TP(Z4,2)", "Idl(Z4)", "Loc(Z12,(3))")]
    return rings
