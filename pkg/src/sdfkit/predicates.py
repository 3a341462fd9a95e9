"""Definitional deciders for the prime / primary / sdf hierarchy.

Everything here is brute force over the full index space, by design: these
are the ground-truth oracles the fast classifiers (zint, fpoly) are checked
against.  The sdf scans run on the selected kernel backend.

Pair conventions differ on purpose between the two sdf predicates: the
sdf-absorbing test quantifies over nonzero a, b only, while the sdf-absorbing
primary test quantifies over all pairs including zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import backend
from .errors import NotProper, TwoNotUnit
from .ideals import Ideal, all_ideals, ideal_sum, principal_ideal, radical
from .ring_core import Ring


class Verdict(NamedTuple):
    """Decider outcome; witness is the first violating pair or None."""

    holds: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _require_proper(i: Ideal, op: str) -> None:
    if not i.is_proper:
        raise NotProper(f"{op} requires a proper ideal in {i.ring.spec}")


def _mul_scan(r: Ring, cond, a_ok, b_ok) -> tuple[int, int] | None:
    """First (a, b) in lexicographic index order with a*b satisfying cond
    while neither escape-set admits its side."""
    viol = (cond[r.mul_table] != 0) & (a_ok == 0)[:, None] & (b_ok == 0)[None, :]
    flat = np.flatnonzero(viol.ravel())
    if flat.size == 0:
        return None
    f = int(flat[0])
    return (f // r.order, f % r.order)


def is_prime(i: Ideal) -> bool:
    _require_proper(i, "is_prime")
    return _mul_scan(i.ring, i.mask, i.mask, i.mask) is None


def is_maximal(i: Ideal) -> bool:
    """Proper, and I + (x) = R for every x outside I."""
    _require_proper(i, "is_maximal")
    r = i.ring
    for x in range(r.order):
        if i.mask[x]:
            continue
        if len(ideal_sum(i, principal_ideal(r, x))) != r.order:
            return False
    return True


def is_primary(i: Ideal) -> bool:
    _require_proper(i, "is_primary")
    return _mul_scan(i.ring, i.mask, i.mask, radical(i).mask) is None


def is_quasi_primary(i: Ideal) -> bool:
    _require_proper(i, "is_quasi_primary")
    return is_prime(radical(i))


def is_sdf_absorbing(i: Ideal) -> Verdict:
    """For all nonzero a, b: a^2 - b^2 in I implies a - b in I or a + b in I."""
    _require_proper(i, "is_sdf_absorbing")
    r = i.ring
    m = i.mask
    w = backend.sdf_scan(r.add_table, r.neg_table, r.squares, m, m, m, False)
    return Verdict(w is None, w)


def is_sdf_absorbing_primary(i: Ideal) -> Verdict:
    """For all a, b (zero allowed): a^2 - b^2 in I implies a + b in sqrt(I)
    or a - b in I."""
    _require_proper(i, "is_sdf_absorbing_primary")
    r = i.ring
    m = i.mask
    rad = radical(i).mask
    w = backend.sdf_scan(r.add_table, r.neg_table, r.squares, m, m, rad, True)
    return Verdict(w is None, w)


def is_quasi_sdf_absorbing(i: Ideal) -> Verdict:
    """sqrt(I) is sdf-absorbing."""
    _require_proper(i, "is_quasi_sdf_absorbing")
    return is_sdf_absorbing(radical(i))


def remark_rr_agree(i: Ideal) -> bool:
    """Evaluate the three formulations of quasi sdf-absorbing independently
    and report whether they agree:

    1. sqrt(I) is sdf-absorbing,
    2. nonzero pairs tested with all three memberships against sqrt(I),
    3. all pairs tested with all three memberships against sqrt(I).
    """
    _require_proper(i, "remark_rr_agree")
    r = i.ring
    rad = radical(i).mask
    f1 = is_sdf_absorbing(radical(i)).holds
    f2 = backend.sdf_scan(r.add_table, r.neg_table, r.squares, rad, rad, rad, False) is None
    f3 = backend.sdf_scan(r.add_table, r.neg_table, r.squares, rad, rad, rad, True) is None
    return f1 == f2 == f3


@dataclass
class StarReport:
    """Outcome of the every-quasi-ideal-is-sdf-primary sweep over one ring."""

    ring_spec: str
    ideals_checked: int = 0
    quasi_sdf_count: int = 0
    violations: list[tuple[Ideal, tuple[int, int]]] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return not self.violations


def satisfies_condition_star(r: Ring) -> StarReport:
    """Check that every quasi sdf-absorbing proper ideal of R is sdf-absorbing
    primary; violations carry the ideal and the primary test's witness pair."""
    report = StarReport(ring_spec=r.spec)
    for i in all_ideals(r):
        if not i.is_proper:
            continue
        report.ideals_checked += 1
        if not is_quasi_sdf_absorbing(i):
            continue
        report.quasi_sdf_count += 1
        v = is_sdf_absorbing_primary(i)
        if not v:
            report.violations.append((i, v.witness))
    return report


def two_unit_equivalence(i: Ideal) -> bool:
    """With 2 a unit, quasi sdf-absorbing and quasi-primary must coincide."""
    _require_proper(i, "two_unit_equivalence")
    r = i.ring
    if not r.is_unit(r.two):
        raise TwoNotUnit(f"2 is not a unit in {r.spec}")
    return is_quasi_sdf_absorbing(i).holds == is_quasi_primary(i)
