"""Exact arithmetic in F_p[x] and the classifier for principal ideals (f).

Polynomials are coefficient tuples, low degree first, trailing zeros
stripped; the zero polynomial is the empty tuple.  The classifier is
factorization-based; the sampler replays the defining implications over all
polynomial pairs up to a degree bound and reports any disagreement with the
classifier verdict.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import config
from .errors import (
    ConstantPolynomial,
    DegreeBoundExceeded,
    DivisionByZeroPoly,
    ModulusMismatch,
    NotPrime,
    OutOfRange,
)
from .zint import is_prime


def _check_p(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"modulus {p} is not prime")


@dataclass(frozen=True)
class FpPoly:
    p: int
    coeffs: tuple[int, ...]  # canonical: low-to-high, no trailing zeros

    def __post_init__(self):
        _check_p(self.p)
        c = tuple(int(x) % self.p for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"FpPoly(p={self.p}, {format_poly(self)})"


def poly(p: int, coeffs) -> FpPoly:
    return FpPoly(p, tuple(coeffs))


def _same_p(f: FpPoly, g: FpPoly) -> None:
    if f.p != g.p:
        raise ModulusMismatch(f"moduli differ: {f.p} vs {g.p}")


def add(f: FpPoly, g: FpPoly) -> FpPoly:
    _same_p(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    a = f.coeffs + (0,) * (n - len(f.coeffs))
    b = g.coeffs + (0,) * (n - len(g.coeffs))
    return FpPoly(f.p, tuple((x + y) % f.p for x, y in zip(a, b)))


def neg(f: FpPoly) -> FpPoly:
    return FpPoly(f.p, tuple(-x % f.p for x in f.coeffs))


def sub(f: FpPoly, g: FpPoly) -> FpPoly:
    return add(f, neg(g))


def mul(f: FpPoly, g: FpPoly) -> FpPoly:
    _same_p(f, g)
    if f.is_zero or g.is_zero:
        return FpPoly(f.p, ())
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = (out[i + j] + a * b) % f.p
    return FpPoly(f.p, tuple(out))


def divmod_poly(f: FpPoly, g: FpPoly) -> tuple[FpPoly, FpPoly]:
    _same_p(f, g)
    if g.is_zero:
        raise DivisionByZeroPoly("division by the zero polynomial")
    p = f.p
    rem = list(f.coeffs)
    dg = g.degree
    inv_lead = pow(g.coeffs[-1], p - 2, p)
    quo = [0] * max(0, len(rem) - dg)
    while len(rem) - 1 >= dg and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg:
            break
        shift = len(rem) - 1 - dg
        c = rem[-1] * inv_lead % p
        quo[shift] = c
        for i, b in enumerate(g.coeffs):
            rem[shift + i] = (rem[shift + i] - c * b) % p
    return FpPoly(p, tuple(quo)), FpPoly(p, tuple(rem))


def mod(f: FpPoly, g: FpPoly) -> FpPoly:
    return divmod_poly(f, g)[1]


def monic(f: FpPoly) -> FpPoly:
    if f.is_zero or f.is_monic:
        return f
    inv = pow(f.coeffs[-1], f.p - 2, f.p)
    return FpPoly(f.p, tuple(c * inv % f.p for c in f.coeffs))


def gcd_poly(f: FpPoly, g: FpPoly) -> FpPoly:
    _same_p(f, g)
    a, b = f, g
    while not b.is_zero:
        a, b = b, mod(a, b)
    return monic(a)


def eval_poly(f: FpPoly, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % f.p
    return acc


def derivative(f: FpPoly) -> FpPoly:
    return FpPoly(f.p, tuple(k * c % f.p for k, c in enumerate(f.coeffs) if k))


# -- text form ----------------------------------------------------------------

_TERM = re.compile(r"^(\d+)?(?:\*?x(?:\^(\d+))?)?$")


def parse_poly(p: int, text: str) -> FpPoly:
    """Accepts forms like "x^2+x", "2*x+1", "3x^2+2", "0"."""
    _check_p(p)
    s = text.replace(" ", "").replace("-", "+-")
    if not s or s == "+-":
        raise OutOfRange(f"empty polynomial text {text!r}")
    coeffs: dict[int, int] = {}
    for chunk in s.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        m = _TERM.match(chunk)
        if not m or (m.group(1) is None and "x" not in chunk):
            raise OutOfRange(f"cannot parse term {chunk!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if "x" in chunk:
            k = int(m.group(2)) if m.group(2) is not None else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * coeff
    deg = max(coeffs) if coeffs else 0
    return FpPoly(p, tuple(coeffs.get(k, 0) for k in range(deg + 1)))


def format_poly(f: FpPoly) -> str:
    if f.is_zero:
        return "0"
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            x = "x" if k == 1 else f"x^{k}"
            terms.append(x if c == 1 else f"{c}*{x}")
    return "+".join(terms)


# -- enumeration and factorization ---------------------------------------------

def _index_to_poly(p: int, idx: int, deg: int) -> FpPoly:
    """Monic polynomial of the given degree: low coefficients are the base-p
    digits of idx; enumeration is degree-then-index."""
    c = []
    for _ in range(deg):
        idx, d = divmod(idx, p)
        c.append(d)
    return FpPoly(p, tuple(c) + (1,))


@lru_cache(maxsize=None)
def irreducibles(p: int, max_degree: int) -> tuple[FpPoly, ...]:
    """All monic irreducibles of degree <= max_degree, in enumeration order:
    irreducible means not divisible by any lower-degree listed irreducible of
    degree <= deg/2."""
    _check_p(p)
    out: list[FpPoly] = []
    for deg in range(1, max_degree + 1):
        for idx in range(p ** deg):
            f = _index_to_poly(p, idx, deg)
            if all(not mod(f, g).is_zero
                   for g in out if g.degree * 2 <= deg):
                out.append(f)
    return tuple(out)


def factorize_fp(f: FpPoly) -> tuple[tuple[FpPoly, int], ...]:
    """Complete factorization of nonzero f into monic irreducibles, ascending
    in enumeration order, with a multiply-back check."""
    if f.is_zero:
        raise DivisionByZeroPoly("cannot factor the zero polynomial")
    bound = config.poly_degree_bound()
    if f.degree > bound:
        raise DegreeBoundExceeded(f"degree {f.degree} exceeds bound {bound}")
    target = monic(f)
    rem = target
    out: list[tuple[FpPoly, int]] = []
    for g in irreducibles(f.p, max(1, f.degree)):
        if g.degree > rem.degree:
            break
        e = 0
        while True:
            q, r = divmod_poly(rem, g)
            if not r.is_zero:
                break
            rem, e = q, e + 1
        if e:
            out.append((g, e))
    check = FpPoly(f.p, (1,))
    for g, e in out:
        for _ in range(e):
            check = mul(check, g)
    if rem.degree != 0 or check != target:
        raise ArithmeticError(f"factorization incomplete for {f}")  # unreachable
    return tuple(out)


def radical_part(f: FpPoly) -> FpPoly:
    """Product of the distinct monic irreducible factors."""
    out = FpPoly(f.p, (1,))
    for g, _ in factorize_fp(f):
        out = mul(out, g)
    return out


# -- classification -------------------------------------------------------------

@dataclass(frozen=True)
class PrincipalClassification:
    p: int
    f: str
    factors: tuple[tuple[str, int], ...]
    quasi_sdf: bool
    sdf_primary: bool
    quasi_primary: bool


def classify_principal(f: FpPoly) -> PrincipalClassification:
    """Classify the principal ideal (f) of F_p[x].

    Odd p: 2 is a unit, so quasi sdf-absorbing, sdf-absorbing primary and
    quasi-primary all collapse to "radical is prime", i.e. f is a power of a
    single irreducible.  p = 2: characteristic 2 makes the first two
    automatic; quasi-primary still needs the single irreducible.
    """
    if f.degree < 1:
        raise ConstantPolynomial(f"(f) needs nonconstant f, got {format_poly(f)}")
    fact = factorize_fp(f)
    single = len(fact) == 1
    if f.p == 2:
        flags = (True, True, single)
    else:
        flags = (single, single, single)
    return PrincipalClassification(
        p=f.p,
        f=format_poly(monic(f)),
        factors=tuple((format_poly(g), e) for g, e in fact),
        quasi_sdf=flags[0],
        sdf_primary=flags[1],
        quasi_primary=flags[2],
    )


# -- sampler ---------------------------------------------------------------------

@dataclass
class SampleResult:
    """Outcome of replaying the definitions over all pairs of bounded degree.

    ``contradiction`` is set when a pair refutes a True classifier verdict;
    ``confirmed`` records, per property, whether a False verdict was
    exhibited by an explicit violating pair.
    """

    f: str
    degree_bound: int
    pairs_checked: int = 0
    budget_exhausted: bool = False
    contradiction: tuple[str, str, str] | None = None  # (property, a, b)
    confirmed: dict | None = None


def _residue_tables(p: int, d: int, m: FpPoly):
    """For every polynomial of degree <= d (index = base-p digit vector):
    residue index mod m, residue index of its negation, and of its square."""
    n = p ** (d + 1)
    res = np.empty(n, dtype=np.int64)
    negres = np.empty(n, dtype=np.int64)
    sqres = np.empty(n, dtype=np.int64)

    def enc(g: FpPoly) -> int:
        acc = 0
        for k, c in enumerate(g.coeffs):
            acc += c * p ** k
        return acc

    for i in range(n):
        c, digits = i, []
        for _ in range(d + 1):
            c, dd = divmod(c, p)
            digits.append(dd)
        g = FpPoly(p, tuple(digits))
        r = mod(g, m)
        res[i] = enc(r)
        negres[i] = enc(neg(r))
        sqres[i] = enc(mod(mul(r, r), m))
    return res, negres, sqres


def _bucket_scan(sq, dres, sres, snegres, include_zero, budget, pairs_so_far):
    """First violating pair (a, b), b <= a, grouped by square residue.

    Violation: equal squares, the difference escape fails (dres differs) and
    the sum escape fails (sres[a] != snegres[b]).  All three conditions are
    symmetric in (a, b), so the b <= a restriction is exact.
    Returns (witness or None, pairs_checked, completed)."""
    n = len(sq)
    order = np.lexsort((np.arange(n), sq))
    svals = sq[order]
    starts = np.flatnonzero(np.concatenate(([True], svals[1:] != svals[:-1])))
    bounds = np.concatenate((starts, [n]))
    best = None
    pairs = pairs_so_far
    for gi in range(len(starts)):
        lo, hi = bounds[gi], bounds[gi + 1]
        if hi - lo < 2:
            continue
        members = order[lo:hi]  # ascending indices
        k = len(members)
        npairs = k * (k - 1) // 2
        if pairs + npairs > budget:
            return best, pairs, False
        pairs += npairs
        a = np.repeat(members, np.arange(k))
        b = members[np.concatenate([np.arange(i) for i in range(k)])]
        viol = (dres[a] != dres[b]) & (sres[a] != snegres[b])
        if not include_zero:
            viol &= (a != 0) & (b != 0)
        if viol.any():
            keys = a[viol] * n + b[viol]
            kmin = int(keys.min())
            cand = (kmin // n, kmin % n)
            if best is None or cand < best:
                best = cand
    return best, pairs, True


def sample_check_principal(f: FpPoly, degree_bound: int,
                           budget: int = 10 ** 6) -> SampleResult:
    """Replay the quasi-sdf and sdf-primary definitions for (f) over all
    polynomial pairs of degree <= degree_bound, in deterministic order.

    A pair refuting a True verdict is a contradiction (reported, fatal to the
    differential suite); a pair exhibiting a False verdict is a confirmation.
    """
    bound = config.poly_degree_bound()
    if degree_bound > bound:
        raise DegreeBoundExceeded(
            f"sample degree {degree_bound} exceeds bound {bound}")
    cls = classify_principal(f)
    p = f.p
    fm = monic(f)
    radp = radical_part(f)
    res_f, negres_f, sq_f = _residue_tables(p, degree_bound, fm)
    res_r, negres_r, sq_r = _residue_tables(p, degree_bound, radp)
    result = SampleResult(f=cls.f, degree_bound=degree_bound,
                          confirmed={"quasi_sdf": False, "sdf_primary": False})

    def poly_str(i: int) -> str:
        c, digits = i, []
        for _ in range(degree_bound + 1):
            c, dd = divmod(c, p)
            digits.append(dd)
        return format_poly(FpPoly(p, tuple(digits)))

    # quasi sdf: nonzero pairs, both escapes against sqrt((f)) = (radical_part)
    w, pairs, done = _bucket_scan(sq_r, res_r, res_r, negres_r, False, budget,
                                  result.pairs_checked)
    result.pairs_checked = pairs
    result.budget_exhausted |= not done
    if w is not None:
        if cls.quasi_sdf:
            result.contradiction = ("quasi_sdf", poly_str(w[0]), poly_str(w[1]))
            return result
        result.confirmed["quasi_sdf"] = True

    # sdf primary: all pairs, difference escape mod f, sum escape mod radical
    w, pairs, done = _bucket_scan(sq_f, res_f, res_r, negres_r, True, budget,
                                  result.pairs_checked)
    result.pairs_checked = pairs
    result.budget_exhausted |= not done
    if w is not None:
        if cls.sdf_primary:
            result.contradiction = ("sdf_primary", poly_str(w[0]), poly_str(w[1]))
            return result
        result.confirmed["sdf_primary"] = True
    return result


def monic_polys(p: int, lo_degree: int, hi_degree: int):
    """All monic polynomials with lo_degree <= deg <= hi_degree, in
    degree-then-index order."""
    for deg in range(lo_degree, hi_degree + 1):
        for idx in range(p ** deg):
            yield _index_to_poly(p, idx, deg)


def sweep(p: int, max_degree: int, sample_degree: int | None = None,
          budget: int = 10 ** 6):
    """classify + sample for every monic f with 1 <= deg f <= max_degree;
    yields (PrincipalClassification, SampleResult) pairs."""
    _check_p(p)
    d = max_degree if sample_degree is None else sample_degree
    for f in monic_polys(p, 1, max_degree):
        yield classify_principal(f), sample_check_principal(f, d, budget)
