"""Classification of the ideals n*Z of the integers.

Two independent routes and a differential test between them:

* ``classify_z_theorem``: the closed form (at most one odd prime divisor),
  valid for any 64-bit n via factorization.
* ``oracle_quasi_sdf_z`` and friends: finite brute force over residues.

The brute-force reductions are exact, not approximations.  Membership of an
integer in n*Z or rad(n)*Z depends only on its residue mod n (resp. rad(n)),
and squares behave the same way, so quantifying over all integers collapses
to quantifying over residues.  The quasi test runs mod rad(n): every residue
class contains nonzero integers, hence ALL residues participate, including 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from . import backend, config
from .errors import OutOfRange, UnitIdealResult
from .predicates import Verdict

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # deterministic < 2^64
_TRIAL_BOUND = 10 ** 6


def _check_n(n: int) -> None:
    if not 2 <= n < 2 ** 63:
        raise OutOfRange(f"n must be in [2, 2^63), got {n}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        y, m, g, q, r = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                g = gcd(q, n)
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")  # unreachable for n < 2^63


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Complete factorization, primes ascending: trial division below 10^6,
    then Miller-Rabin plus Brent-rho splitting for the survivors."""
    _check_n(n)
    fact: dict[int, int] = {}
    rem = n
    for p in range(2, _TRIAL_BOUND + 1):
        if p * p > rem:
            break
        while rem % p == 0:
            fact[p] = fact.get(p, 0) + 1
            rem //= p
    stack = [rem] if rem > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            fact[m] = fact.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _brent_rho(m)
        stack += [d, m // d]
    return tuple(sorted(fact.items()))


def rad(n: int) -> int:
    out = 1
    for p, _ in factorize(n):
        out *= p
    return out


def classify_z_theorem(n: int) -> bool:
    """n*Z is quasi sdf-absorbing iff n has at most one odd prime divisor."""
    _check_n(n)
    return sum(1 for p, _ in factorize(n) if p != 2) <= 1


def _cap_check(m: int, what: str) -> None:
    if m > config.Z_ORACLE_MODULUS_CAP:
        raise OutOfRange(f"{what} oracle needs modulus <= {config.Z_ORACLE_MODULUS_CAP}, got {m}")


@lru_cache(maxsize=65536)
def _scan_cached(m: int, r: int):
    return backend.z_scan(m, r)


def oracle_quasi_sdf_z(n: int) -> Verdict:
    """Brute force mod rad(n): a^2 = b^2 implies a = +-b (mod rad(n))."""
    _check_n(n)
    r = rad(n)
    _cap_check(r, "quasi-sdf")
    w = _scan_cached(r, r)
    return Verdict(w is None, w)


def oracle_sdf_z(n: int) -> Verdict:
    """Brute force mod n: a^2 = b^2 implies a = +-b (mod n).  Reported as
    data; no closed form is claimed for it."""
    _check_n(n)
    _cap_check(n, "sdf")
    w = _scan_cached(n, n)
    return Verdict(w is None, w)


def oracle_sdf_primary_z(n: int) -> Verdict:
    """Brute force mod n: a^2 = b^2 (mod n) implies rad(n) | a+b or n | a-b."""
    _check_n(n)
    _cap_check(n, "sdf-primary")
    w = _scan_cached(n, rad(n))
    return Verdict(w is None, w)


def confirm_sdf_primary_violation(n: int, a: int, b: int) -> bool:
    """Check a claimed witness directly: a^2 = b^2 (mod n), n does not divide
    a-b, and no power of a+b lands in n*Z (radical escape fails too)."""
    _check_n(n)
    if (a * a - b * b) % n != 0 or (a - b) % n == 0:
        return False
    x = (a + b) % n
    for _ in range(max(1, n.bit_length())):
        if x == 0:
            return False
        x = x * (a + b) % n
    return True


def _lift(pair: tuple[int, int] | None, m: int) -> tuple[int, int] | None:
    """Residue witness -> integer representatives in 1..m (0 lifts to m)."""
    if pair is None:
        return None
    a, b = pair
    return (a if a else m, b if b else m)


@dataclass
class ZClassification:
    """One row of the integer-side report."""

    n: int
    factorization: tuple[tuple[int, int], ...]
    rad: int
    quasi_sdf_theorem: bool
    quasi_primary: bool
    quasi_sdf_oracle: bool | None = None
    sdf_oracle: bool | None = None
    sdf_primary_oracle: bool | None = None
    witness: tuple[int, int] | None = None


def classify(n: int, oracles: bool = True) -> ZClassification:
    """Classify n*Z.  Oracle fields stay None outside the modulus caps; the
    witness is the quasi-sdf one when that fails, else the sdf-primary one,
    lifted to integer representatives."""
    _check_n(n)
    fact = factorize(n)
    r = rad(n)
    row = ZClassification(
        n=n,
        factorization=fact,
        rad=r,
        quasi_sdf_theorem=classify_z_theorem(n),
        quasi_primary=len(fact) == 1,
    )
    if not oracles:
        return row
    if r <= config.Z_ORACLE_MODULUS_CAP:
        v = oracle_quasi_sdf_z(n)
        row.quasi_sdf_oracle = v.holds
        if not v.holds:
            row.witness = _lift(v.witness, r)
    if n <= config.Z_ORACLE_MODULUS_CAP:
        row.sdf_oracle = oracle_sdf_z(n).holds
        v = oracle_sdf_primary_z(n)
        row.sdf_primary_oracle = v.holds
        if row.witness is None and not v.holds:
            row.witness = _lift(v.witness, n)
    return row


def classify_range(lo: int, hi: int, oracles: bool = True) -> list[ZClassification]:
    """Rows for lo..hi inclusive, ascending."""
    if lo < 2 or hi < lo:
        raise OutOfRange(f"need 2 <= lo <= hi, got {lo}..{hi}")
    return [classify(n, oracles=oracles) for n in range(lo, hi + 1)]


def localize_z(n: int, inverted_primes: set[int]) -> ZClassification:
    """Classification of S^-1(n*Z) where S inverts the given primes: strip
    them from n and classify what is left; nothing left means the extension
    is the unit ideal."""
    _check_n(n)
    rem = n
    for p in inverted_primes:
        while rem % p == 0 and rem > 1:
            rem //= p
    if rem == 1:
        raise UnitIdealResult(f"S^-1({n}Z) = (1): every prime factor inverted")
    return classify(rem)
