from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from sdfkit import zint
from sdfkit.errors import OutOfRange


def trial_division_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 10**9))
def test_factorize_reconstructs_and_uses_primes(n):
    fact = zint.factorize(n)
    prod = 1
    for p, e in fact:
        assert e >= 1
        assert trial_division_is_prime(p)
        prod *= p ** e
    assert prod == n
    assert [p for p, _ in fact] == sorted({p for p, _ in fact})


def test_factorize_fixed_points():
    assert zint.factorize(2) == ((2, 1),)
    assert zint.factorize(12) == ((2, 2), (3, 1))
    assert zint.factorize(2**10) == ((2, 10),)
    assert zint.factorize(9999991) == ((9999991, 1),)  # prime


def test_rad():
    assert zint.rad(12) == 6
    assert zint.rad(8) == 2
    assert zint.rad(15) == 15
    assert zint.rad(360) == 30


def test_theorem_closed_form():
    # quasi sdf iff at most one odd prime divides n
    assert zint.classify_z_theorem(12)        # 2^2 * 3
    assert zint.classify_z_theorem(16)
    assert zint.classify_z_theorem(7)
    assert zint.classify_z_theorem(14)
    assert not zint.classify_z_theorem(15)    # 3 * 5
    assert not zint.classify_z_theorem(105)


def test_theorem_matches_oracle_small():
    for n in range(2, 2000):
        assert zint.classify_z_theorem(n) == zint.oracle_quasi_sdf_z(n).holds, n


def test_pinned_witnesses():
    v = zint.oracle_quasi_sdf_z(15)
    assert not v.holds and v.witness == (4, 1)
    v = zint.oracle_sdf_primary_z(12)
    assert not v.holds and v.witness == (7, 1)


def test_example_4q_family():
    for q in (3, 5, 7):
        for m in (1, 2):
            n = 4 * q**m
            assert zint.classify_z_theorem(n)
            v = zint.oracle_sdf_primary_z(n)
            assert not v.holds
            assert zint.confirm_sdf_primary_violation(n, 2 * q**m + 1, 1)


def test_confirm_rejects_non_witness():
    assert not zint.confirm_sdf_primary_violation(12, 5, 1)


def test_classify_shape():
    c = zint.classify(12)
    assert c.n == 12
    assert c.factorization == ((2, 2), (3, 1))
    assert c.rad == 6
    assert c.quasi_sdf_theorem and c.quasi_sdf_oracle
    assert c.sdf_primary_oracle is False
    assert c.witness == (7, 1)
    c = zint.classify(15)
    assert c.witness == (4, 1)
    c = zint.classify(16, oracles=False)
    assert c.quasi_sdf_oracle is None and c.witness is None


def test_classify_range():
    rows = zint.classify_range(2, 30, oracles=False)
    assert [c.n for c in rows] == list(range(2, 31))


def test_localize_z():
    c = zint.localize_z(15, {5})
    assert c.n == 3
    assert c.quasi_sdf_theorem
    from sdfkit.errors import UnitIdealResult
    with pytest.raises(UnitIdealResult):
        zint.localize_z(15, {3, 5})


def test_out_of_range():
    with pytest.raises(OutOfRange):
        zint.classify_z_theorem(1)
    with pytest.raises(OutOfRange):
        zint.factorize(0)


def test_quasi_primary_flag():
    assert zint.classify(16).quasi_primary        # rad = 2, prime
    assert not zint.classify(12).quasi_primary    # rad = 6
    assert zint.classify(49).quasi_primary
