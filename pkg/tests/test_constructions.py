from itertools import product as iproduct

import pytest

from sdfkit import (
    ModuleSpec,
    amalgamate,
    amalgamation_ideal,
    ideal_from_generators,
    idealization_ideal,
    idealize,
    identity_hom,
    lift_IX,
    localize,
    localize_ideal,
    make_zn,
    mult_closure,
    proper_ideals,
    radical,
    reduction_hom,
    trunc_poly,
    zero_ideal,
)
from sdfkit.errors import OutOfRange, ZeroRingResult


# -- localization against a pairwise fraction oracle ------------------------

def oracle_localization_classes(r, s_elems):
    """Equivalence classes of pairs (a, s): (a,s) ~ (b,t) iff u(at - bs) = 0
    for some u in S.  Returns a frozenset of frozensets of pairs."""
    pairs = [(a, s) for a in r.elements for s in s_elems]

    def eq(p, q):
        (a, s), (b, t) = p, q
        return any(r.mul(u, r.sub(r.mul(a, t), r.mul(b, s))) == 0
                   for u in s_elems)

    classes = []
    for p in pairs:
        for c in classes:
            if eq(p, c[0]):
                c.append(p)
                break
        else:
            classes.append([p])
    return classes


@pytest.mark.parametrize("n,gens", [(12, [3]), (12, [2]), (16, [3]),
                                    (18, [3]), (15, [5]), (24, [5])])
def test_localize_matches_fraction_oracle(n, gens):
    r = make_zn(n)
    s = mult_closure(r, gens)
    loc, nat = localize(r, s)
    classes = oracle_localization_classes(r, s.elements)
    assert loc.order == len(classes)
    # the natural map must identify exactly the pairs (a,1) ~ (b,1)
    for a in r.elements:
        for b in r.elements:
            same = any((a, 1) in [tuple(p) for p in c]
                       and (b, 1) in [tuple(p) for p in c] for c in classes)
            assert (nat(a) == nat(b)) == same


def test_localize_at_units_is_identity_shape(z12):
    s = mult_closure(z12, [5])
    loc, nat = localize(z12, s)
    assert loc.order == 12
    assert nat.surjective


def test_localize_zero_ring(z9):
    with pytest.raises(ZeroRingResult):
        localize(z9, mult_closure(z9, [3]))  # 3^2 = 0 lands in S


def test_localize_ideal_extension(z12):
    s = mult_closure(z12, [3])
    loc, nat = localize(z12, s)
    assert loc.order == 4
    i = ideal_from_generators(z12, [2])
    ext = localize_ideal(loc, i)
    assert {nat(a) for a in i.elements} <= set(ext.elements)
    # extension of (4) collapses to (0): 4/1 = 0 since 3*4 = 0
    ext0 = localize_ideal(loc, ideal_from_generators(z12, [4]))
    assert len(ext0) == 1


def test_localization_survives_quasi_example():
    # Z15 localized away from 3 keeps only the 5-part; I = (0) becomes quasi
    z15 = make_zn(15)
    s = mult_closure(z15, [3])
    loc, _ = localize(z15, s)
    assert loc.order == 5
    from sdfkit import is_quasi_sdf_absorbing
    assert is_quasi_sdf_absorbing(zero_ideal(loc)).holds


# -- idealization ------------------------------------------------------------

def test_idealize_multiplication_rule():
    z4 = make_zn(4)
    r = idealize(z4, ModuleSpec.self_module(z4))
    assert r.order == 16
    # (r1, m1)(r2, m2) = (r1 r2, r1 m2 + r2 m1); element index = r*4 + m
    for r1, m1, r2, m2 in iproduct(range(4), repeat=4):
        lhs = r.mul(r1 * 4 + m1, r2 * 4 + m2)
        rr = (r1 * r2) % 4
        mm = (r1 * m2 + r2 * m1) % 4
        assert lhs == rr * 4 + mm
    # (0, m) squares to zero
    for m in range(4):
        assert r.mul(m, m) == 0


def test_idealize_quotient_module():
    z12 = make_zn(12)
    j = ideal_from_generators(z12, [4])
    r = idealize(z12, ModuleSpec.quotient(z12, j))
    assert r.order == 12 * 4
    assert r.spec == "Idl(Z12,(4))"


def test_idealization_ideal_lift():
    z4 = make_zn(4)
    r = idealize(z4, ModuleSpec.self_module(z4))
    i = ideal_from_generators(z4, [2])
    lifted = idealization_ideal(r, i)
    assert len(lifted) == len(i) * 4
    assert set(lifted.elements) == {a * 4 + m for a in i.elements
                                    for m in range(4)}
    rad = radical(lifted)
    expect = {a * 4 + m for a in radical(i).elements for m in range(4)}
    assert set(rad.elements) == expect


# -- amalgamation ------------------------------------------------------------

def test_amalgamate_carrier_and_ops():
    z12, z4 = make_zn(12), make_zn(4)
    phi = reduction_hom(z12, z4)
    j = ideal_from_generators(z4, [2])
    a = amalgamate(z12, z4, phi, j)
    assert a.order == 12 * len(j)
    # carrier is {(r, phi(r)+j)}; products and sums stay in shape
    x = a.index_of_label("(5,3)")   # phi(5)=1, 1+2=3
    y = a.index_of_label("(2,0)")   # phi(2)=2, 2+2=0
    assert a.label(a.mul(x, y)) == "(10,0)"
    assert a.label(a.add(x, y)) == "(7,3)"


def test_amalgamation_ideal_and_radical():
    z12 = make_zn(12)
    a = amalgamate(z12, z12, identity_hom(z12), ideal_from_generators(z12, [4]))
    i = ideal_from_generators(z12, [6])
    lifted = amalgamation_ideal(a, i)
    assert len(lifted) == len(i) * 3
    rad_lift = amalgamation_ideal(a, radical(i))
    assert radical(lifted) == rad_lift


def test_amalgamation_along_identity_with_zero_j():
    z8 = make_zn(8)
    a = amalgamate(z8, z8, identity_hom(z8), zero_ideal(z8))
    assert a.order == 8  # diagonal copy


# -- truncated polynomials ----------------------------------------------------

def test_trunc_poly_arithmetic():
    z3 = make_zn(3)
    tp = trunc_poly(z3, 2)
    assert tp.order == 9
    x = tp.index_of_label("X")
    assert tp.mul(x, x) == 0  # X^2 = 0 at t = 2
    one = tp.one
    a = tp.add(one, x)        # 1 + X
    assert tp.label(tp.mul(a, a)) == "1+2X"


def test_trunc_poly_t3():
    z2 = make_zn(2)
    tp = trunc_poly(z2, 3)
    assert tp.order == 8
    x = tp.index_of_label("X")
    x2 = tp.mul(x, x)
    assert x2 != 0 and tp.mul(x2, x) == 0


def test_trunc_poly_rejects_bad_t(z12):
    with pytest.raises(OutOfRange):
        trunc_poly(z12, 1)


def test_lift_IX_membership_and_radical():
    z6 = make_zn(6)
    tp = trunc_poly(z6, 2)
    i = ideal_from_generators(z6, [2])
    lifted = lift_IX(tp, i)
    # (I, X): constant term in I, any X coefficient
    assert len(lifted) == len(i) * 6
    assert radical(lifted) == lift_IX(tp, radical(i))


def test_lift_IX_of_unit_is_unit():
    z6 = make_zn(6)
    tp = trunc_poly(z6, 2)
    from sdfkit import unit_ideal
    assert len(lift_IX(tp, unit_ideal(z6))) == tp.order
