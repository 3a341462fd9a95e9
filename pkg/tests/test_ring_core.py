import numpy as np
import pytest

from sdfkit import (
    Ring,
    ideal_from_generators,
    identity_hom,
    make_hom,
    make_product,
    make_quotient,
    make_zn,
    parse_ring,
    preimage_ideal,
    product_projections,
    reduction_hom,
)
from sdfkit.errors import (
    InvalidOrder,
    InvalidRing,
    NotAHomomorphism,
    OrderBoundExceeded,
    RingMismatch,
)
from sdfkit.ring_core import same_ring


def test_zn_tables():
    r = make_zn(6)
    assert r.order == 6
    assert r.zero == 0 and r.one == 1
    assert r.add(4, 5) == 3
    assert r.mul(4, 5) == 2
    assert r.neg(2) == 4
    assert r.sub(1, 5) == 2
    assert r.char == 6
    assert [int(x) for x in r.squares] == [0, 1, 4, 3, 4, 1]


def test_zn_labels_round_trip():
    r = make_zn(10)
    for a in r.elements:
        assert r.index_of_label(r.label(a)) == a


def test_zn_units():
    r = make_zn(12)
    units = {a for a in r.elements if r.is_unit(a)}
    assert units == {1, 5, 7, 11}


def test_make_zn_rejects_bad_order():
    with pytest.raises(InvalidOrder):
        make_zn(1)
    with pytest.raises(InvalidOrder):
        make_zn(0)
    with pytest.raises(OrderBoundExceeded):
        make_zn(10**7)


def test_order_cap_env(monkeypatch):
    monkeypatch.setenv("SDFKIT_MAX_ORDER", "16")
    with pytest.raises(OrderBoundExceeded):
        make_zn(17)
    assert make_zn(16).order == 16


def test_product_is_componentwise():
    r = make_product(make_zn(2), make_zn(3))
    assert r.order == 6
    assert r.char == 6
    # labels are "(a,b)" pairs
    i = r.index_of_label("(1,2)")
    j = r.index_of_label("(1,1)")
    assert r.label(r.mul(i, j)) == "(1,2)"
    assert r.label(r.add(i, j)) == "(0,0)"


def test_product_projections_are_homs():
    r = make_product(make_zn(4), make_zn(6))
    p1, p2 = product_projections(r)
    assert p1.surjective and p2.surjective
    assert len(p1.kernel) == 6 and len(p2.kernel) == 4


def test_ring_axiom_validation_catches_corruption():
    r = make_zn(5)
    add = r.add_table.copy()
    add[2, 3] = 1  # breaks commutativity/associativity
    with pytest.raises(InvalidRing):
        Ring(5, add, r.neg_table, r.mul_table, one=1,
             labels=[str(i) for i in range(5)], spec="bad")


def test_quotient_of_z12_by_4():
    z12 = make_zn(12)
    i = ideal_from_generators(z12, [4])
    q, pi = make_quotient(z12, i)
    assert q.order == 4
    assert pi.surjective
    assert sorted(pi.kernel.elements) == [0, 4, 8]
    assert q.spec == "Q(Z12,(4))"
    assert parse_ring(q.spec).order == 4


def test_quotient_by_zero_is_isomorphic_copy():
    z6 = make_zn(6)
    q, pi = make_quotient(z6, ideal_from_generators(z6, [0]))
    assert q.order == 6
    assert all(pi(a) != pi(b) for a in z6.elements for b in z6.elements
               if a != b)


def test_reduction_hom_kernel():
    z12, z4 = make_zn(12), make_zn(4)
    f = reduction_hom(z12, z4)
    assert f.surjective
    assert sorted(f.kernel.elements) == [0, 4, 8]
    assert f(7) == 3


def test_hom_validation_rejects_non_hom():
    z4 = make_zn(4)
    with pytest.raises(NotAHomomorphism):
        make_hom(z4, z4, [0, 3, 2, 1])  # not multiplicative
    with pytest.raises(NotAHomomorphism):
        make_hom(z4, z4, [1, 1, 1, 1])  # phi(0) != 0


def test_identity_hom():
    z9 = make_zn(9)
    f = identity_hom(z9)
    assert f.surjective
    assert len(f.kernel) == 1
    assert f.image_elements() == tuple(z9.elements)


def test_preimage_ideal():
    z12, z4 = make_zn(12), make_zn(4)
    f = reduction_hom(z12, z4)
    j = ideal_from_generators(z4, [2])
    pre = preimage_ideal(f, j)
    assert sorted(pre.elements) == [0, 2, 4, 6, 8, 10]


def test_same_ring_is_identity_based():
    a, b = make_zn(4), make_zn(4)
    same_ring(a, a)
    with pytest.raises(RingMismatch):
        same_ring(a, b)


def test_tables_are_int32_contiguous():
    r = make_zn(7)
    for t in (r.add_table, r.mul_table, r.neg_table):
        assert t.dtype == np.int32
        assert t.flags["C_CONTIGUOUS"]
