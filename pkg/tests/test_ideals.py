from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdfkit import (
    Ideal,
    all_ideals,
    colon,
    ideal_from_generators,
    ideal_sum,
    intersect,
    is_comaximal,
    is_s_saturated,
    make_zn,
    mult_closure,
    principal_ideal,
    product_ideal,
    proper_ideals,
    radical,
    saturate,
    unit_ideal,
    zero_ideal,
)
from sdfkit.errors import NotAnIdeal, NotMultClosed, RingMismatch
from sdfkit.ideals import s_saturation_witness

from conftest import naive_ideal_closure, naive_radical


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_principal_ideal_in_zn_is_gcd_multiples(z12):
    i = principal_ideal(z12, 8)
    g = gcd(8, 12)
    assert sorted(i.elements) == [a for a in range(12) if a % g == 0]
    assert i.generators == (8,)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 64), g=st.integers(0, 63))
def test_generated_ideal_matches_gcd_rule(n, g):
    r = make_zn(n)
    i = ideal_from_generators(r, [g % n])
    d = gcd(g % n, n)
    assert set(i.elements) == {a for a in range(n) if a % d == 0}


def test_ideal_count_in_zn_is_divisor_count():
    for n in (2, 6, 12, 16, 30, 36):
        assert len(all_ideals(make_zn(n))) == len(divisors(n))
        assert len(proper_ideals(make_zn(n))) == len(divisors(n)) - 1


def test_ideal_verify_rejects_non_ideal(z12):
    with pytest.raises(NotAnIdeal):
        Ideal(z12, [0, 1, 2])  # not closed under scaling by 2... by 5
    with pytest.raises(NotAnIdeal):
        Ideal(z12, [4, 8])  # missing zero


def test_closure_against_naive(z12, z2xz4):
    for r, seed in ((z12, {3}), (z12, {2, 9}), (z2xz4, {3}), (z2xz4, {5})):
        got = set(ideal_from_generators(r, seed).elements)
        assert got == naive_ideal_closure(r, seed)


def test_radical_examples(z12):
    assert sorted(radical(ideal_from_generators(z12, [4])).elements) == \
        [0, 2, 4, 6, 8, 10]
    assert sorted(radical(zero_ideal(z12)).elements) == [0, 6]
    u = unit_ideal(z12)
    assert radical(u) == u


def test_radical_against_naive(small_rings):
    for r in small_rings:
        for i in all_ideals(r):
            assert set(radical(i).elements) == naive_radical(r, set(i.elements))


def test_radical_is_idempotent(small_rings):
    for r in small_rings:
        for i in all_ideals(r):
            assert radical(radical(i)) == radical(i)


def test_colon_example(z12):
    i = ideal_from_generators(z12, [4])
    assert sorted(colon(i, 2).elements) == [0, 2, 4, 6, 8, 10]
    assert colon(i, 4) == unit_ideal(z12)
    assert colon(i, 1) == i


def test_colon_definition(small_rings):
    for r in small_rings:
        for i in proper_ideals(r):
            for a in (1, r.order - 1):
                c = colon(i, a)
                expect = {x for x in r.elements if r.mul(x, a) in i}
                assert set(c.elements) == expect


def test_lattice_ops(z12):
    i = ideal_from_generators(z12, [4])
    j = ideal_from_generators(z12, [6])
    assert sorted(intersect(i, j).elements) == [0]
    assert sorted(ideal_sum(i, j).elements) == [0, 2, 4, 6, 8, 10]
    assert sorted(product_ideal(i, j).elements) == [0]
    i2 = ideal_from_generators(z12, [2])
    assert sorted(product_ideal(i2, i2).elements) == \
        sorted(ideal_from_generators(z12, [4]).elements)


def test_comaximal(z12):
    assert is_comaximal(ideal_from_generators(z12, [3]),
                        ideal_from_generators(z12, [4]))
    assert not is_comaximal(ideal_from_generators(z12, [2]),
                            ideal_from_generators(z12, [6]))


def test_ring_mismatch_is_rejected():
    a, b = make_zn(6), make_zn(6)
    with pytest.raises(RingMismatch):
        intersect(zero_ideal(a), zero_ideal(b))


def test_mult_closure(z12):
    s = mult_closure(z12, [5])
    assert sorted(s.elements) == [1, 5]
    s = mult_closure(z12, [2])
    assert sorted(s.elements) == [1, 2, 4, 8]
    with pytest.raises(NotMultClosed):
        from sdfkit import MultSet
        MultSet(z12, [1, 2])  # 4 missing


def test_saturation_basics(z12):
    i = ideal_from_generators(z12, [4])
    s3 = mult_closure(z12, [3])
    assert is_s_saturated(i, s3)
    assert s_saturation_witness(i, s3) is None
    s2 = mult_closure(z12, [2])
    assert not is_s_saturated(i, s2)
    sr, x = s_saturation_witness(i, s2)
    assert sr in s2 and z12.mul(sr, x) in i and x not in i


def test_saturate_fixpoint(z12):
    i = ideal_from_generators(z12, [4])
    s2 = mult_closure(z12, [2])
    sat = saturate(i, s2)
    assert set(i.elements) < set(sat.elements)
    assert is_s_saturated(sat, s2)
    assert saturate(sat, s2) == sat
    ones = mult_closure(z12, [])
    assert saturate(i, ones) == i


def test_saturated_radical_follows(small_rings):
    # radical of an S-saturated ideal stays S-saturated
    for r in small_rings:
        for g in (r.order - 1, 2 % r.order):
            s = mult_closure(r, [g])
            if 0 in s.elements:
                continue
            for i in proper_ideals(r):
                if is_s_saturated(i, s):
                    assert is_s_saturated(radical(i), s)


def test_gens_label(z12):
    assert ideal_from_generators(z12, [4]).gens_label() == "(4)"
    assert zero_ideal(z12).gens_label() == "(0)"
