"""Ring constructions: idealization, amalgamation, localization, truncated
polynomials, each with its ideal lift.

Constructed rings carry composable spec strings, so any instance appearing in
a report can be rebuilt from the command line.  Construction metadata (base
ring, module, hom, natural map) rides along in Ring.meta for the lift
functions and the verification harness.
"""

from __future__ import annotations

import numpy as np

from . import config
from .errors import (
    ImproperExtension,
    InvalidRing,
    NotProper,
    OrderBoundExceeded,
    OutOfRange,
    ZeroRingResult,
)
from .ideals import Ideal, MultSet, ideal_from_generators
from .ring_core import Ring, RingHom, make_quotient, same_ring

_DTYPE = np.int32


def _cap_check(n: int, what: str) -> None:
    if n > config.order_cap():
        raise OrderBoundExceeded(f"{what} would have order {n} > cap {config.order_cap()}")


# -- idealization ------------------------------------------------------------

class ModuleSpec:
    """A module the idealization understands: R itself, or R/J.

    Both carry a canonical action r.m (and both are cyclic, generated by
    ``one``), so no general module layer is needed.
    """

    def __init__(self, base: Ring, kind: str = "self", j: Ideal | None = None):
        if kind not in ("self", "quotient"):
            raise OutOfRange(f"unknown module kind {kind!r}")
        if kind == "quotient" and j is None:
            raise OutOfRange("quotient module needs an ideal")
        self.base = base
        self.kind = kind
        self.j = j
        if kind == "self":
            self.size = base.order
            self.add_table = base.add_table
            self.neg_table = base.neg_table
            self.act = base.mul_table  # act[r, m]
            self.labels = base.labels
            self.one = base.one
        else:
            q, pi = make_quotient(base, j)
            self.size = q.order
            self.add_table = q.add_table
            self.neg_table = q.neg_table
            self.act = np.ascontiguousarray(q.mul_table[pi.mapping, :], dtype=_DTYPE)
            self.labels = q.labels
            self.one = q.one

    @classmethod
    def self_module(cls, base: Ring) -> "ModuleSpec":
        return cls(base, "self")

    @classmethod
    def quotient(cls, base: Ring, j: Ideal) -> "ModuleSpec":
        return cls(base, "quotient", j)

    def spec_str(self) -> str:
        if self.kind == "self":
            return f"Idl({self.base.spec})"
        return f"Idl({self.base.spec},{self.j.gens_label()})"


def idealize(r: Ring, m: ModuleSpec) -> Ring:
    """R (+) M on pairs (r, m), with (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)."""
    if m.base is not r:
        same_ring(r, m.base)
    n, ms = r.order, m.size
    _cap_check(n * ms, "idealization")
    radd = r.add_table.astype(np.int64)
    rmul = r.mul_table.astype(np.int64)
    madd = m.add_table.astype(np.int64)
    act = m.act.astype(np.int64)

    # pair index = r * ms + m; 4d blocks with axes (r1, m1, r2, m2)
    add4 = radd[:, None, :, None] * ms + madd[None, :, None, :]
    add = add4.reshape(n * ms, n * ms)
    neg = (r.neg_table.astype(np.int64)[:, None] * ms
           + m.neg_table.astype(np.int64)[None, :]).reshape(-1)
    mpart = madd[act[:, None, None, :], act.T[None, :, :, None]]
    mul4 = rmul[:, None, :, None] * ms + mpart
    mul = mul4.reshape(n * ms, n * ms)

    labels = tuple(
        f"({r.label(a)},{m.labels[b]})" for a in range(n) for b in range(ms)
    )
    meta = {"kind": "idealization", "base": r, "module": m}
    return Ring(n * ms, add.astype(_DTYPE), neg.astype(_DTYPE), mul.astype(_DTYPE),
                int(r.one * ms), labels, m.spec_str(), meta=meta)


def idealization_ideal(ridl: Ring, i: Ideal) -> Ideal:
    """I (+) M = {(r, m) : r in I}, verified as an ideal of the idealization."""
    if ridl.meta.get("kind") != "idealization":
        raise OutOfRange("idealization_ideal needs an idealized ring")
    m: ModuleSpec = ridl.meta["module"]
    base: Ring = ridl.meta["base"]
    same_ring(i.ring, base)
    if not i.is_proper:
        raise NotProper("idealization_ideal requires a proper ideal of the base")
    elems = [e * m.size + k for e in i.elements for k in range(m.size)]
    # (g, 0) for the base generators plus (0, 1) to sweep out the module part
    gens = tuple(g * m.size for g in (i.generators or (base.zero,))) + (int(m.one),)
    return Ideal(ridl, elems, generators=gens)


# -- amalgamation ------------------------------------------------------------

def _pair_positions(keys: np.ndarray, want: np.ndarray, what: str) -> np.ndarray:
    pos = np.searchsorted(keys, want)
    pos = np.minimum(pos, len(keys) - 1)
    if not (keys[pos] == want).all():
        raise InvalidRing(f"{what}: pair outside the carrier")
    return pos


def amalgamate(r: Ring, s: Ring, phi: RingHom, j: Ideal) -> Ring:
    """R join^phi J: the subring {(r, phi(r)+j) : r in R, j in J} of R x S.

    The carrier is enumerated, not sized by formula.
    """
    if phi.source is not r:
        same_ring(phi.source, r)
    if phi.target is not s:
        same_ring(phi.target, s)
    same_ring(j.ring, s)
    _cap_check(r.order * len(j), "amalgamation")
    carrier = sorted(
        {(rv, int(s.add_table[phi.mapping[rv], jv]))
         for rv in range(r.order) for jv in j.elements}
    )
    n = len(carrier)
    keys = np.fromiter((rv * s.order + sv for rv, sv in carrier),
                       dtype=np.int64, count=n)
    rs = keys // s.order
    ss = keys % s.order

    sadd = s.add_table.astype(np.int64)
    smul = s.mul_table.astype(np.int64)
    radd = r.add_table.astype(np.int64)
    rmul = r.mul_table.astype(np.int64)
    add = _pair_positions(
        keys, radd[rs[:, None], rs[None, :]] * s.order + sadd[ss[:, None], ss[None, :]],
        "amalgamation add")
    mul = _pair_positions(
        keys, rmul[rs[:, None], rs[None, :]] * s.order + smul[ss[:, None], ss[None, :]],
        "amalgamation mul")
    neg = _pair_positions(
        keys, r.neg_table.astype(np.int64)[rs] * s.order + s.neg_table.astype(np.int64)[ss],
        "amalgamation neg")
    one = int(_pair_positions(
        keys, np.array([r.one * s.order + s.one], dtype=np.int64), "amalgamation one")[0])
    labels = tuple(f"({r.label(rv)},{s.label(sv)})" for rv, sv in carrier)
    spec = f"Am({r.spec},{s.spec},{phi.name},{j.gens_label()})"
    meta = {"kind": "amalgamation", "base_r": r, "base_s": s, "phi": phi, "j": j,
            "carrier_keys": keys}
    return Ring(n, add.astype(_DTYPE), neg.astype(_DTYPE), mul.astype(_DTYPE),
                one, labels, spec, meta=meta)


def amalgamation_ideal(a: Ring, i: Ideal) -> Ideal:
    """I join^phi J inside the amalgamation; NotAnIdeal from the verification
    propagates as a reportable outcome rather than being swallowed."""
    if a.meta.get("kind") != "amalgamation":
        raise OutOfRange("amalgamation_ideal needs an amalgamated ring")
    r: Ring = a.meta["base_r"]
    s: Ring = a.meta["base_s"]
    phi: RingHom = a.meta["phi"]
    j: Ideal = a.meta["j"]
    same_ring(i.ring, r)
    if not i.is_proper:
        raise NotProper("amalgamation_ideal requires a proper ideal of R")
    pairs = sorted(
        {(rv, int(s.add_table[phi.mapping[rv], jv]))
         for rv in i.elements for jv in j.elements}
    )
    want = np.fromiter((rv * s.order + sv for rv, sv in pairs),
                       dtype=np.int64, count=len(pairs))
    pos = _pair_positions(a.meta["carrier_keys"], want, "amalgamation ideal")
    return Ideal(a, (int(p) for p in pos), generators=tuple(int(p) for p in pos))


# -- localization ------------------------------------------------------------

def localize(r: Ring, s: MultSet) -> tuple[Ring, RingHom]:
    """S^-1 R as fraction classes r/s, with (r,s) ~ (r',s') iff u(rs'-r's)=0
    for some u in S; class representative = minimum (r, s) pair in index
    order.  Returns the ring and the natural map r -> r/1."""
    same_ring(s.ring, r)
    if r.zero in s.elements:
        raise ZeroRingResult(f"0 in the multiplicative set; S^-1 {r.spec} is the zero ring")
    sidx = np.fromiter(s.elements, dtype=np.int64, count=len(s.elements))
    # d with u*d = 0 for some u in S: exactly the elements killed in fractions
    d0 = np.flatnonzero((r.mul_table[sidx, :] == 0).any(axis=0))
    d0i = Ideal(r, (int(x) for x in d0), generators=tuple(int(x) for x in d0))
    q, pi = make_quotient(r, d0i)
    # images of S are regular in the quotient, hence units (finite ring)
    inv = np.full(q.order, -1, dtype=np.int64)
    for x in range(q.order):
        hits = np.flatnonzero(q.mul_table[x] == q.one)
        if hits.size:
            inv[x] = hits[0]
    if (inv[pi.mapping[sidx]] < 0).any():
        raise InvalidRing("image of the multiplicative set is not invertible")
    rep: dict[int, tuple[int, int]] = {}
    for rv in range(r.order):
        for sv in s.elements:
            c = int(q.mul_table[pi.mapping[rv], inv[pi.mapping[sv]]])
            if c not in rep:
                rep[c] = (rv, sv)
                if len(rep) == q.order:
                    break
        else:
            continue
        break
    order = sorted(range(q.order), key=lambda c: rep[c])
    perm = np.fromiter(order, dtype=np.int64, count=q.order)
    pos_of_q = np.empty(q.order, dtype=np.int64)
    pos_of_q[perm] = np.arange(q.order)
    add = pos_of_q[q.add_table.astype(np.int64)[perm[:, None], perm[None, :]]]
    mul = pos_of_q[q.mul_table.astype(np.int64)[perm[:, None], perm[None, :]]]
    neg = pos_of_q[q.neg_table.astype(np.int64)[perm]]
    labels = tuple(f"{r.label(rep[c][0])}/{r.label(rep[c][1])}" for c in order)
    spec = f"Loc({r.spec},{s.gens_label()})"
    loc = Ring(q.order, add.astype(_DTYPE), neg.astype(_DTYPE), mul.astype(_DTYPE),
               int(pos_of_q[q.one]), labels, spec,
               meta={"kind": "localization", "base": r, "mult_set": s})
    nat = RingHom(r, loc, pos_of_q[pi.mapping], name="loc")
    loc.meta["natural_map"] = nat
    return loc, nat


def localize_ideal(loc: Ring, i: Ideal) -> Ideal:
    """S^-1 I, generated by the images of I; requires I disjoint from S."""
    if loc.meta.get("kind") != "localization":
        raise OutOfRange("localize_ideal needs a localized ring")
    s: MultSet = loc.meta["mult_set"]
    same_ring(i.ring, loc.meta["base"])
    if any(i.mask[sv] for sv in s.elements):
        raise ImproperExtension(f"ideal meets the multiplicative set in {i.ring.spec}")
    nat: RingHom = loc.meta["natural_map"]
    return ideal_from_generators(loc, (int(nat.mapping[e]) for e in i.elements))


# -- truncated polynomial rings ----------------------------------------------

def _tp_labels(r: Ring, t: int) -> tuple[str, ...]:
    out = []
    for idx in range(r.order ** t):
        terms = []
        for k in range(t):
            digit = (idx // (r.order ** k)) % r.order
            if digit == r.zero:
                continue
            x = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if k == 0:
                terms.append(r.label(digit))
            elif digit == r.one:
                terms.append(x)
            else:
                terms.append(f"{r.label(digit)}{x}")
        out.append("+".join(terms) if terms else r.label(r.zero))
    return tuple(out)


def trunc_poly(r: Ring, t: int) -> Ring:
    """R[X]/(X^t) on little-endian coefficient tuples, index = sum c_k n^k."""
    if t < 2:
        raise OutOfRange(f"truncation degree must be >= 2, got {t}")
    n = r.order
    order = n ** t
    _cap_check(order, "truncated polynomial ring")
    idx = np.arange(order, dtype=np.int64)
    digits = np.empty((order, t), dtype=np.int64)
    c = idx.copy()
    for k in range(t):
        digits[:, k] = c % n
        c //= n
    radd = r.add_table.astype(np.int64)
    rmul = r.mul_table.astype(np.int64)
    add = np.zeros((order, order), dtype=np.int64)
    neg = np.zeros(order, dtype=np.int64)
    for k in range(t):
        add += radd[digits[:, k][:, None], digits[:, k][None, :]] * (n ** k)
        neg += r.neg_table.astype(np.int64)[digits[:, k]] * (n ** k)
    # truncated convolution, accumulated coefficient-wise through radd
    mul = np.zeros((order, order), dtype=np.int64)
    for k in range(t):
        acc = np.zeros((order, order), dtype=np.int64)
        for p in range(k + 1):
            acc = radd[acc, rmul[digits[:, p][:, None], digits[:, k - p][None, :]]]
        mul += acc * (n ** k)
    meta = {"kind": "trunc_poly", "base": r, "t": t}
    return Ring(order, add.astype(_DTYPE), neg.astype(_DTYPE), mul.astype(_DTYPE),
                int(r.one), _tp_labels(r, t), f"TP({r.spec},{t})", meta=meta)


def lift_IX(tp: Ring, i: Ideal) -> Ideal:
    """(I, X): the ideal of R[X]/(X^t) generated by I's elements and X."""
    if tp.meta.get("kind") != "trunc_poly":
        raise OutOfRange("lift_IX needs a truncated polynomial ring")
    base: Ring = tp.meta["base"]
    same_ring(i.ring, base)
    gens = [int(e) for e in (i.generators or (base.zero,))]
    gens.append(base.order)  # X has coefficient tuple (0, 1, 0, ...)
    return ideal_from_generators(tp, gens)
