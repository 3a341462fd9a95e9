"""Finite commutative rings with identity, on dense element indices.

A ring is a table triple (add, neg, mul) over indices 0..order-1 with the
zero element pinned at index 0.  Every constructor below materializes the
tables and, up to the configured validation bound, proves the axioms by
exhaustive (vectorized) enumeration before handing the ring out.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import config
from .errors import (
    InvalidOrder,
    InvalidRing,
    NotAHomomorphism,
    NotProper,
    OrderBoundExceeded,
    RingMismatch,
)

_DTYPE = np.int32


def _check_axioms(order: int, add, neg, mul, one: int) -> None:
    """Exhaustive axiom check; raises InvalidRing naming the first failure."""
    idx = np.arange(order)
    if not np.array_equal(add[0], idx):
        raise InvalidRing("0 is not an additive identity")
    if not np.array_equal(add[idx, neg], np.zeros(order, dtype=add.dtype)):
        raise InvalidRing("neg is not an additive inverse")
    if not np.array_equal(add, add.T):
        raise InvalidRing("addition is not commutative")
    if not np.array_equal(mul, mul.T):
        raise InvalidRing("multiplication is not commutative")
    if not np.array_equal(mul[one], idx):
        raise InvalidRing("1 is not a multiplicative identity")
    if order > 1 and one == 0:
        raise InvalidRing("1 = 0 in a ring of order > 1")
    # associativity and distributivity, chunked by the first operand
    for a in range(order):
        ra = add[a]
        if not np.array_equal(add[ra, :], ra[add]):
            raise InvalidRing(f"addition not associative at a={a}")
        ma = mul[a]
        if not np.array_equal(mul[ma, :], ma[mul]):
            raise InvalidRing(f"multiplication not associative at a={a}")
        if not np.array_equal(ma[add], add[ma[:, None], ma[None, :]]):
            raise InvalidRing(f"distributivity fails at a={a}")


class Ring:
    """Immutable finite commutative ring; elements are indices 0..order-1."""

    def __init__(
        self,
        order: int,
        add_table,
        neg_table,
        mul_table,
        one: int,
        labels: Sequence[str],
        spec: str,
        meta: dict | None = None,
        validate: bool | None = None,
    ):
        if order < 1:
            raise InvalidOrder(f"order {order} < 1")
        if order > config.order_cap():
            raise OrderBoundExceeded(
                f"order {order} exceeds cap {config.order_cap()}"
            )
        self.order = int(order)
        self.zero = 0
        self.one = int(one)
        self.spec = spec
        self.labels = tuple(labels)
        self.add_table = np.ascontiguousarray(add_table, dtype=_DTYPE)
        self.neg_table = np.ascontiguousarray(neg_table, dtype=_DTYPE)
        self.mul_table = np.ascontiguousarray(mul_table, dtype=_DTYPE)
        self.meta = meta or {}
        if self.add_table.shape != (order, order) or self.mul_table.shape != (order, order):
            raise InvalidRing("operation table shape mismatch")
        if len(self.labels) != order:
            raise InvalidRing("label count mismatch")
        if len(set(self.labels)) != order:
            raise InvalidRing("labels are not unique")
        if validate is None:
            validate = order <= config.validate_bound()
        if validate:
            _check_axioms(self.order, self.add_table, self.neg_table, self.mul_table, self.one)

    # -- element ops ------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of_label(self, label: str) -> int:
        try:
            table = self._label_index
        except AttributeError:
            table = {s: i for i, s in enumerate(self.labels)}
            self._label_index = table
        if label not in table:
            raise KeyError(f"no element labeled {label!r} in {self.spec}")
        return table[label]

    # -- derived data -----------------------------------------------------
    @property
    def char(self) -> int:
        """Characteristic: additive order of 1."""
        try:
            return self._char
        except AttributeError:
            k, cur = 1, self.one
            while cur != 0:
                cur = self.add(cur, self.one)
                k += 1
            self._char = k if self.order > 1 else 1
            return self._char

    @property
    def two(self) -> int:
        return self.add(self.one, self.one)

    @property
    def units_mask(self):
        try:
            return self._units
        except AttributeError:
            self._units = (self.mul_table == self.one).any(axis=1)
            return self._units

    @property
    def squares(self):
        """Vector sq with sq[x] = x*x."""
        try:
            return self._squares
        except AttributeError:
            idx = np.arange(self.order)
            self._squares = np.ascontiguousarray(self.mul_table[idx, idx], dtype=_DTYPE)
            return self._squares

    def is_unit(self, a: int) -> bool:
        return bool(self.units_mask[a])

    def __repr__(self) -> str:
        return f"Ring({self.spec}, order={self.order})"


def same_ring(a: Ring, b: Ring) -> None:
    if a is not b:
        raise RingMismatch(f"{a.spec} is not {b.spec} (distinct ring instances)")


# -- constructors ----------------------------------------------------------

def make_zn(n: int) -> Ring:
    """Z/nZ with index = residue."""
    if n < 2:
        raise InvalidOrder(f"Z_n needs n >= 2, got {n}")
    if n > config.order_cap():
        raise OrderBoundExceeded(f"n={n} exceeds cap {config.order_cap()}")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    neg = (-idx) % n
    labels = tuple(str(i) for i in range(n))
    return Ring(n, add, neg, mul, 1 % n, labels, f"Z{n}", meta={"kind": "zn", "n": n})


def _label_parts(r: Ring) -> tuple[tuple[str, ...], ...]:
    parts = r.meta.get("label_parts")
    if parts is None:
        parts = tuple((s,) for s in r.labels)
    return parts


def make_product(r1: Ring, r2: Ring) -> Ring:
    """Direct product; index (a, b) -> a*|R2| + b.  Labels flatten nested
    products so that (AxB)xC and Ax(BxC) coincide table-for-table."""
    n1, n2 = r1.order, r2.order
    order = n1 * n2
    if order > config.order_cap():
        raise OrderBoundExceeded(f"product order {order} exceeds cap")
    a1 = r1.add_table.astype(np.int64)
    a2 = r2.add_table.astype(np.int64)
    m1 = r1.mul_table.astype(np.int64)
    m2 = r2.mul_table.astype(np.int64)
    add = (a1[:, None, :, None] * n2 + a2[None, :, None, :]).reshape(order, order)
    mul = (m1[:, None, :, None] * n2 + m2[None, :, None, :]).reshape(order, order)
    neg = (r1.neg_table.astype(np.int64)[:, None] * n2 + r2.neg_table[None, :]).reshape(order)
    p1, p2 = _label_parts(r1), _label_parts(r2)
    parts = tuple(p1[i] + p2[j] for i in range(n1) for j in range(n2))
    labels = tuple("(" + ",".join(p) + ")" for p in parts)
    one = r1.one * n2 + r2.one
    spec = f"{r1.spec}x{r2.spec}"
    meta = {"kind": "product", "factors": (r1, r2), "label_parts": parts}
    return Ring(order, add, neg, mul, one, labels, spec, meta=meta)


class RingHom:
    """Unital ring homomorphism given by its value table."""

    def __init__(self, source: Ring, target: Ring, mapping, name: str = "phi",
                 validate: bool = True):
        self.source = source
        self.target = target
        self.mapping = np.ascontiguousarray(mapping, dtype=_DTYPE)
        self.name = name
        if self.mapping.shape != (source.order,):
            raise NotAHomomorphism("map table has wrong length")
        if validate:
            self._validate()

    def _validate(self) -> None:
        f = self.mapping
        s, t = self.source, self.target
        if int(f[s.zero]) != t.zero:
            raise NotAHomomorphism("phi(0) != 0")
        if int(f[s.one]) != t.one:
            raise NotAHomomorphism("phi(1) != 1")
        add_ok = f[s.add_table] == t.add_table[f[:, None], f[None, :]]
        if not add_ok.all():
            a, b = map(int, np.argwhere(~add_ok)[0])
            raise NotAHomomorphism(
                f"phi(a+b) != phi(a)+phi(b) at (a,b)=({s.label(a)},{s.label(b)})"
            )
        mul_ok = f[s.mul_table] == t.mul_table[f[:, None], f[None, :]]
        if not mul_ok.all():
            a, b = map(int, np.argwhere(~mul_ok)[0])
            raise NotAHomomorphism(
                f"phi(ab) != phi(a)phi(b) at (a,b)=({s.label(a)},{s.label(b)})"
            )

    def __call__(self, a: int) -> int:
        return int(self.mapping[a])

    @property
    def surjective(self) -> bool:
        try:
            return self._surjective
        except AttributeError:
            self._surjective = len(np.unique(self.mapping)) == self.target.order
            return self._surjective

    @property
    def kernel(self):
        try:
            return self._kernel
        except AttributeError:
            from .ideals import Ideal

            elems = tuple(int(i) for i in np.flatnonzero(self.mapping == self.target.zero))
            self._kernel = Ideal(self.source, elems, generators=elems)
            return self._kernel

    def image_elements(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.unique(self.mapping))

    def __repr__(self) -> str:
        return f"RingHom({self.name}: {self.source.spec} -> {self.target.spec})"


def make_hom(source: Ring, target: Ring, mapping: Iterable[int], name: str = "phi") -> RingHom:
    return RingHom(source, target, np.fromiter(mapping, dtype=_DTYPE, count=source.order), name)


def identity_hom(r: Ring) -> RingHom:
    return RingHom(r, r, np.arange(r.order, dtype=_DTYPE), name="id", validate=False)


def make_quotient(r: Ring, ideal) -> tuple[Ring, RingHom]:
    """R/I with cosets indexed by their minimal representative (sorted).

    Returns the quotient ring and the canonical surjection.
    """
    from .ideals import Ideal

    same_ring(r, ideal.ring)
    if len(ideal.elements) == r.order:
        raise NotProper(f"cannot quotient {r.spec} by the unit ideal")
    elems = np.fromiter(ideal.elements, dtype=np.int64)
    reps = r.add_table[:, elems].min(axis=1)
    uniq = np.unique(reps)  # sorted
    qindex = np.searchsorted(uniq, reps)
    k = len(uniq)
    qadd = qindex[r.add_table[uniq[:, None], uniq[None, :]]]
    qmul = qindex[r.mul_table[uniq[:, None], uniq[None, :]]]
    qneg = qindex[r.neg_table[uniq]]
    labels = tuple(r.label(int(x)) for x in uniq)
    gens = ideal.generators or (0,)
    gen_str = ",".join(r.label(g) for g in gens)
    spec = f"Q({r.spec},({gen_str}))"
    meta = {"kind": "quotient", "base": r, "ideal": ideal, "reps": tuple(int(x) for x in uniq)}
    q = Ring(k, qadd, qneg, qmul, int(qindex[r.one]), labels, spec, meta=meta)
    pi = RingHom(r, q, qindex.astype(_DTYPE), name=f"canonical({spec})", validate=False)
    ker = tuple(int(i) for i in np.flatnonzero(qindex == 0))
    if ker != ideal.elements:
        raise InvalidRing("quotient kernel mismatch")  # internal consistency
    pi._kernel = Ideal(r, ideal.elements, generators=ideal.generators)
    return q, pi


def product_projections(r: Ring) -> tuple[RingHom, RingHom]:
    if r.meta.get("kind") != "product":
        raise RingMismatch(f"{r.spec} is not a product ring")
    r1, r2 = r.meta["factors"]
    n2 = r2.order
    idx = np.arange(r.order)
    pr1 = RingHom(r, r1, (idx // n2).astype(_DTYPE), name="proj1", validate=False)
    pr2 = RingHom(r, r2, (idx % n2).astype(_DTYPE), name="proj2", validate=False)
    return pr1, pr2


def reduction_hom(zn: Ring, zd: Ring) -> RingHom:
    """x mod d : Z_n -> Z_d, defined exactly when d divides n."""
    if zn.meta.get("kind") != "zn" or zd.meta.get("kind") != "zn":
        raise RingMismatch("reduction_hom expects Z_n rings")
    n, d = zn.meta["n"], zd.meta["n"]
    if n % d:
        raise NotAHomomorphism(f"x mod {d} is not a ring map on Z{n}")
    return RingHom(zn, zd, (np.arange(n) % d).astype(_DTYPE), name=f"mod{d}", validate=False)


def preimage_ideal(hom: RingHom, ideal):
    """phi^{-1}(J) as a verified ideal of the source."""
    from .ideals import Ideal

    same_ring(hom.target, ideal.ring)
    mask = np.zeros(hom.target.order, dtype=bool)
    mask[list(ideal.elements)] = True
    elems = tuple(int(i) for i in np.flatnonzero(mask[hom.mapping]))
    return Ideal(hom.source, elems, generators=elems)


def ring_char(r: Ring) -> int:
    return r.char


def is_unit(r: Ring, a: int) -> bool:
    return r.is_unit(a)
