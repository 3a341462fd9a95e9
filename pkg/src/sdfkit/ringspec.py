"""Parser for ring spec strings.

Grammar (whitespace ignored):

    spec     := product
    product  := atom ('x' atom)*          left associative
    atom     := 'Z' digits
              | 'Q(' spec ',' gens ')'
              | 'Idl(' spec [',' gens] ')'
              | 'Am(' spec ',' spec ',' hom ',' gens ')'
              | 'Loc(' spec ',' gens ')'
              | 'TP(' spec ',' digits ')'
    gens     := '(' label (',' label)* ')'
    hom      := 'id' | 'mod' digits

Labels inside gens are element labels of the ring being referenced; they may
contain nested parentheses and commas (product rings), so all splitting here
is depth-aware.  Every constructor emits exactly this syntax in Ring.spec, so
parse_ring(r.spec) rebuilds r.
"""

from __future__ import annotations

import re

from .constructions import ModuleSpec, amalgamate, idealize, localize, trunc_poly
from .errors import SpecParseError
from .ideals import ideal_from_generators, mult_closure
from .ring_core import (
    Ring,
    identity_hom,
    make_product,
    make_quotient,
    make_zn,
    reduction_hom,
)

_ZN = re.compile(r"^Z(\d+)$")
_CALL = re.compile(r"^(Q|Idl|Am|Loc|TP)\((.*)\)$", re.S)
_MOD = re.compile(r"^mod(\d+)$")


def _split_depth0(s: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecParseError(f"unbalanced parentheses in {s!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise SpecParseError(f"unbalanced parentheses in {s!r}")
    parts.append("".join(cur))
    return parts


def _parse_gens(r: Ring, text: str, what: str) -> list[int]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise SpecParseError(f"{what}: generator list must be parenthesized, got {text!r}")
    inner = text[1:-1]
    if not inner:
        raise SpecParseError(f"{what}: empty generator list")
    try:
        return [r.index_of_label(lbl) for lbl in _split_depth0(inner, ",")]
    except KeyError as e:
        raise SpecParseError(f"{what}: {e.args[0]}") from None


def parse_ring(spec: str) -> Ring:
    """Build the ring a spec string describes.  Raises SpecParseError."""
    s = "".join(spec.split())
    if not s:
        raise SpecParseError("empty ring spec")
    parts = _split_depth0(s, "x")
    if len(parts) > 1:
        ring = _parse_atom(parts[0])
        for part in parts[1:]:
            ring = make_product(ring, _parse_atom(part))
        return ring
    return _parse_atom(parts[0])


def _parse_atom(s: str) -> Ring:
    m = _ZN.match(s)
    if m:
        return make_zn(int(m.group(1)))
    m = _CALL.match(s)
    if not m:
        raise SpecParseError(f"cannot parse ring spec {s!r}")
    head, body = m.group(1), m.group(2)
    args = _split_depth0(body, ",")
    if head == "Q":
        if len(args) != 2:
            raise SpecParseError(f"Q needs (ring, gens): {s!r}")
        base = parse_ring(args[0])
        ideal = ideal_from_generators(base, _parse_gens(base, args[1], "Q"))
        return make_quotient(base, ideal)[0]
    if head == "Idl":
        if len(args) == 1:
            base = parse_ring(args[0])
            return idealize(base, ModuleSpec.self_module(base))
        if len(args) == 2:
            base = parse_ring(args[0])
            j = ideal_from_generators(base, _parse_gens(base, args[1], "Idl"))
            return idealize(base, ModuleSpec.quotient(base, j))
        raise SpecParseError(f"Idl needs (ring) or (ring, gens): {s!r}")
    if head == "Am":
        if len(args) != 4:
            raise SpecParseError(f"Am needs (ringR, ringS, hom, gens): {s!r}")
        r = parse_ring(args[0])
        ring_s = r if args[1] == args[0] else parse_ring(args[1])
        phi = _parse_hom(args[2], r, ring_s, s)
        j = ideal_from_generators(ring_s, _parse_gens(ring_s, args[3], "Am"))
        return amalgamate(r, ring_s, phi, j)
    if head == "Loc":
        if len(args) != 2:
            raise SpecParseError(f"Loc needs (ring, gens): {s!r}")
        base = parse_ring(args[0])
        mset = mult_closure(base, _parse_gens(base, args[1], "Loc"))
        return localize(base, mset)[0]
    if head == "TP":
        if len(args) != 2 or not args[1].isdigit():
            raise SpecParseError(f"TP needs (ring, degree): {s!r}")
        return trunc_poly(parse_ring(args[0]), int(args[1]))
    raise SpecParseError(f"unknown constructor {head!r}")  # unreachable


def _parse_hom(name: str, r: Ring, s: Ring, spec: str):
    if name == "id":
        if s is not r:
            raise SpecParseError(f"id hom needs equal rings in {spec!r}")
        return identity_hom(r)
    m = _MOD.match(name)
    if m:
        k = int(m.group(1))
        if s.meta.get("kind") != "zn" or s.meta.get("n") != k:
            raise SpecParseError(f"mod{k} hom needs target Z{k} in {spec!r}")
        return reduction_hom(r, s)
    raise SpecParseError(f"unknown hom {name!r} in {spec!r}")
