from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from sdfkit import fpoly
from sdfkit.errors import (
    ConstantPolynomial,
    DegreeBoundExceeded,
    DivisionByZeroPoly,
    NotPrime,
)


def brute_irreducible(f):
    """No monic factor of degree 1..deg(f)-1 divides f."""
    if f.degree < 1:
        return False
    for d in range(1, f.degree):
        for g in fpoly.monic_polys(f.p, d, d):
            if fpoly.mod(f, g).is_zero:
                return False
    return True


coeff_lists = st.lists(st.integers(0, 4), min_size=1, max_size=6)


@settings(max_examples=120, deadline=None)
@given(p=st.sampled_from([2, 3, 5]), c=coeff_lists)
def test_parse_format_round_trip(p, c):
    f = fpoly.poly(p, c)
    assert fpoly.parse_poly(p, fpoly.format_poly(f)) == f


@settings(max_examples=80, deadline=None)
@given(p=st.sampled_from([2, 3]), a=coeff_lists, b=coeff_lists)
def test_divmod_invariant(p, a, b):
    f, g = fpoly.poly(p, a), fpoly.poly(p, b)
    if g.is_zero:
        with pytest.raises(DivisionByZeroPoly):
            fpoly.divmod_poly(f, g)
        return
    q, r = fpoly.divmod_poly(f, g)
    assert fpoly.add(fpoly.mul(q, g), r) == f
    assert r.is_zero or r.degree < g.degree


def test_factorize_fp_reconstructs():
    for p in (2, 3, 5):
        for f in fpoly.monic_polys(p, 1, 4):
            prod = fpoly.poly(p, [1])
            for g, e in fpoly.factorize_fp(f):
                assert brute_irreducible(g)
                for _ in range(e):
                    prod = fpoly.mul(prod, g)
            assert prod == f


def test_monic_polys_counts():
    assert len(list(fpoly.monic_polys(3, 1, 1))) == 3
    assert len(list(fpoly.monic_polys(3, 1, 3))) == 3 + 9 + 27
    assert len(list(fpoly.monic_polys(5, 2, 2))) == 25


def test_classify_principal_examples():
    f = fpoly.parse_poly(3, "x^2")
    c = fpoly.classify_principal(f)
    assert c.quasi_sdf and c.sdf_primary and c.quasi_primary
    assert c.factors == (("x", 2),)

    f = fpoly.parse_poly(3, "x^2+x")   # x(x+1), two distinct irreducibles
    c = fpoly.classify_principal(f)
    assert not c.quasi_sdf and not c.sdf_primary and not c.quasi_primary

    f = fpoly.parse_poly(3, "x^2+1")   # irreducible over F_3
    c = fpoly.classify_principal(f)
    assert c.quasi_sdf and c.sdf_primary and c.quasi_primary


def test_classify_principal_char_two_always_holds():
    for f in fpoly.monic_polys(2, 1, 4):
        c = fpoly.classify_principal(f)
        assert c.quasi_sdf and c.sdf_primary
        # quasi-primary still tracks the factorization shape
        assert c.quasi_primary == (len(fpoly.factorize_fp(f)) == 1)


def test_classify_principal_odd_p_is_irreducible_power():
    for p in (3, 5):
        for f in fpoly.monic_polys(p, 1, 3):
            c = fpoly.classify_principal(f)
            expect = len(fpoly.factorize_fp(f)) == 1
            assert c.quasi_sdf == expect
            assert c.sdf_primary == expect
            assert c.quasi_primary == expect


def test_classify_errors():
    with pytest.raises(ConstantPolynomial):
        fpoly.classify_principal(fpoly.poly(3, [2]))
    with pytest.raises(NotPrime):
        fpoly.parse_poly(4, "x^2")


def test_sampler_agrees_on_true_claims():
    f = fpoly.parse_poly(3, "x^2")
    r = fpoly.sample_check_principal(f, degree_bound=3, budget=10**6)
    assert r.contradiction is None
    assert r.pairs_checked > 0


def test_sampler_confirms_false_claims():
    f = fpoly.parse_poly(3, "x^2+x")
    r = fpoly.sample_check_principal(f, degree_bound=3, budget=10**6)
    assert r.contradiction is None
    assert r.confirmed["quasi_sdf"] is True
    assert r.confirmed["sdf_primary"] is True


def test_sampler_budget_flag():
    f = fpoly.parse_poly(5, "x^4+x+1")
    r = fpoly.sample_check_principal(f, degree_bound=4, budget=10)
    assert r.budget_exhausted
    assert r.contradiction is None


def test_degree_bound():
    with pytest.raises(DegreeBoundExceeded):
        fpoly.sample_check_principal(fpoly.parse_poly(3, "x^2"),
                                     degree_bound=99, budget=10)


def test_sweep_shape():
    rows = list(fpoly.sweep(3, 2, sample_degree=2))
    assert len(rows) == 12  # 3 + 9 monic polynomials
    for cls, samp in rows:
        assert samp is None or samp.contradiction is None


def test_sweep_char_two_all_hold():
    rows = list(fpoly.sweep(2, 3))
    assert len(rows) == 14
    assert all(cls.quasi_sdf and cls.sdf_primary for cls, _ in rows)
    assert all(samp.contradiction is None for _, samp in rows)
