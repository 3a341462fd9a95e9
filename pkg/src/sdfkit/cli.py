"""Command-line front end.

Subcommands: classify-z, ring-report, verify, search, fpoly.  Output is a
report document in json, csv (classify-z only) or text form.  Exit codes are
a stable contract: 0 success / all verified, 1 usage, 2 bound exceeded,
3 refutation found.

JSON documents are emitted with sorted keys and, under --no-timestamp, are
byte-identical for identical inputs regardless of --jobs.  The command echo
inside the document is normalized: presentation flags (--format, --jobs,
--no-timestamp, --seed) are not part of it, only arguments that change the
payload.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict
from datetime import datetime, timezone

from . import __version__, fpoly, verify, zint
from .errors import (
    ConstantPolynomial,
    DegreeBoundExceeded,
    ExpressionParseError,
    InvalidOrder,
    NotPrime,
    OrderBoundExceeded,
    OutOfRange,
    SpecParseError,
    UnitIdealResult,
    UnknownTheoremId,
    UsageError,
)
from .ideals import proper_ideals
from .predicates import (
    is_maximal,
    is_primary,
    is_prime,
    is_quasi_primary,
    is_quasi_sdf_absorbing,
    is_sdf_absorbing,
    is_sdf_absorbing_primary,
    satisfies_condition_star,
)
from .ringspec import parse_ring

_CSV_COLUMNS = ("n", "factorization", "quasi_sdf", "sdf_primary",
                "quasi_primary", "witness")

_USAGE_ERRORS = (UsageError, SpecParseError, ExpressionParseError,
                 UnknownTheoremId, NotPrime, InvalidOrder, OutOfRange,
                 ConstantPolynomial, UnitIdealResult)
_BOUND_ERRORS = (OrderBoundExceeded, DegreeBoundExceeded)


class _Parser(argparse.ArgumentParser):
    # argparse exits by itself; route through our exception instead so the
    # exit-code contract stays in one place
    def error(self, message):
        raise UsageError(message)


def _document(echo: str, payload, timestamp: bool) -> dict:
    doc = {"tool": "sdfkit", "version": __version__,
           "command": echo, "payload": payload}
    if timestamp:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat()
    return doc


def _emit_json(echo: str, payload, args, out) -> None:
    doc = _document(echo, payload, not args.no_timestamp)
    json.dump(doc, out, sort_keys=True, indent=2)
    out.write("\n")


# -- classify-z ---------------------------------------------------------------


def _parse_ns(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo > hi:
                raise UsageError(f"empty range {text!r}")
            ns = list(range(lo, hi + 1))
        else:
            ns = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"expected N, N..M or comma list, got {text!r}") from None
    for n in ns:
        if n < 2:
            raise UsageError(f"moduli must be >= 2, got {n}")
    return ns


def _fmt_factorization(fact) -> str:
    return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fact)


def _fmt_witness(w) -> str:
    return "" if w is None else f"({w[0]},{w[1]})"


def _zrow(c: zint.ZClassification) -> dict:
    row = asdict(c)
    row["factorization"] = _fmt_factorization(c.factorization)
    row["witness"] = list(c.witness) if c.witness is not None else None
    return row


def cmd_classify_z(args, out) -> int:
    ns = _parse_ns(args.ns)
    rows = [zint.classify(n) for n in ns]
    echo = f"classify-z {args.ns}" + (" --witness" if args.witness else "")
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(_CSV_COLUMNS)
        for c in rows:
            w.writerow([
                c.n,
                _fmt_factorization(c.factorization),
                str(c.quasi_sdf_theorem).lower(),
                "" if c.sdf_primary_oracle is None
                else str(c.sdf_primary_oracle).lower(),
                str(c.quasi_primary).lower(),
                _fmt_witness(c.witness),
            ])
    elif args.format == "json":
        _emit_json(echo, [_zrow(c) for c in rows], args, out)
    else:
        for c in rows:
            line = (f"n={c.n}  {_fmt_factorization(c.factorization)}  "
                    f"quasi_sdf={str(c.quasi_sdf_theorem).lower()}  "
                    f"sdf_primary={'?' if c.sdf_primary_oracle is None else str(c.sdf_primary_oracle).lower()}  "
                    f"quasi_primary={str(c.quasi_primary).lower()}")
            if args.witness and c.witness is not None:
                line += f"  witness={_fmt_witness(c.witness)}"
            out.write(line + "\n")
    return 0


# -- ring-report --------------------------------------------------------------


def _verdict_entry(v) -> dict:
    entry = {"holds": v.holds}
    if v.witness is not None:
        entry["witness"] = list(v.witness)
    return entry


def cmd_ring_report(args, out) -> int:
    r = parse_ring(args.spec)
    ideals = []
    for i in proper_ideals(r):
        ideals.append({
            "generators": i.gens_label(),
            "size": len(i),
            "prime": is_prime(i),
            "maximal": is_maximal(i),
            "primary": is_primary(i),
            "quasi_primary": is_quasi_primary(i),
            "sdf_absorbing": _verdict_entry(is_sdf_absorbing(i)),
            "sdf_primary": _verdict_entry(is_sdf_absorbing_primary(i)),
            "quasi_sdf": _verdict_entry(is_quasi_sdf_absorbing(i)),
        })
    star = satisfies_condition_star(r)
    payload = {
        "ring": r.spec,
        "order": r.order,
        "char": r.char,
        "ideals": ideals,
        "condition_star": {
            "satisfied": star.satisfied,
            "ideals_checked": star.ideals_checked,
            "quasi_sdf_count": star.quasi_sdf_count,
            "violations": [{"ideal": i.gens_label(),
                            "witness": list(w) if w else None}
                           for i, w in star.violations],
        },
    }
    echo = f"ring-report {args.spec}"
    if args.format == "json":
        _emit_json(echo, payload, args, out)
    else:
        out.write(f"{r.spec}: order {r.order}, char {r.char}, "
                  f"{len(ideals)} proper ideals\n")
        for row in ideals:
            flags = [name for name in ("prime", "maximal", "primary",
                                       "quasi_primary") if row[name]]
            flags += [name for name in ("sdf_absorbing", "sdf_primary",
                                        "quasi_sdf") if row[name]["holds"]]
            out.write(f"  {row['generators']:<16} size {row['size']:<4} "
                      f"{' '.join(flags) if flags else '-'}\n")
        verdict = "satisfied" if star.satisfied else "violated"
        out.write(f"condition (*): {verdict} "
                  f"({star.quasi_sdf_count} quasi sdf of "
                  f"{star.ideals_checked} ideals)\n")
    return 0


# -- verify -------------------------------------------------------------------


def _resolve_theorems(names: list[str]) -> list[str] | None:
    if names == ["all"]:
        return None
    resolved = []
    for name in names:
        if name in verify.THEOREMS:
            resolved.append(name)
            continue
        matches = [t for t in verify.THEOREM_IDS
                   if t == name or t.rsplit("_", 1)[0] == name
                   or t.startswith(name + "_")]
        if len(matches) == 1:
            resolved.append(matches[0])
        else:
            raise UnknownTheoremId(
                f"unknown theorem id {name!r}; known: "
                f"{', '.join(verify.THEOREM_IDS)}")
    return resolved


def _report_payload(rep: verify.VerifyReport) -> dict:
    # elapsed stays out: the payload must be identical across runs
    return {
        "theorem": rep.theorem,
        "status": rep.status,
        "instances_checked": rep.instances_checked,
        "counterexamples": rep.counterexamples,
        "skipped": rep.skipped,
        "note": rep.note,
    }


def cmd_verify(args, out) -> int:
    theorems = _resolve_theorems(args.theorems)
    params = verify.CatalogParams(max_order=args.catalog_max_order)
    reports = verify.run(theorems, params=params, jobs=args.jobs)
    named = theorems if theorems is not None else ["all"]
    echo = "verify " + " ".join(named)
    if args.catalog_max_order is not None:
        echo += f" --catalog-max-order {args.catalog_max_order}"
    if args.format == "json":
        _emit_json(echo, [_report_payload(rep) for rep in reports], args, out)
    else:
        for rep in reports:
            out.write(f"{rep.theorem}: {rep.status} "
                      f"({rep.instances_checked} instances, "
                      f"{len(rep.skipped)} skipped, {rep.elapsed:.2f}s)\n")
            for ce in rep.counterexamples:
                out.write(f"  counterexample: {ce}\n")
    return 3 if any(rep.status == "refuted" for rep in reports) else 0


# -- search -------------------------------------------------------------------

_PREDICATES = {
    "prime": is_prime,
    "maximal": is_maximal,
    "primary": is_primary,
    "quasi_primary": is_quasi_primary,
    "sdf": lambda i: is_sdf_absorbing(i).holds,
    "sdf_primary": lambda i: is_sdf_absorbing_primary(i).holds,
    "quasi_sdf": lambda i: is_quasi_sdf_absorbing(i).holds,
}


class _ExprParser:
    """not > and > or, parentheses; names from _PREDICATES.

    Accepts &/|/! and the words and/or/not (plus the usual math glyphs)."""

    def __init__(self, text: str):
        norm = (text.replace("∧", "&").replace("∨", "|").replace("¬", "!")
                .replace("&&", "&").replace("||", "|"))
        self.tokens = self._lex(norm)
        self.pos = 0

    @staticmethod
    def _lex(text: str) -> list[str]:
        tokens, i = [], 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "&|!()":
                tokens.append(ch)
                i += 1
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                word = text[i:j]
                tokens.append({"and": "&", "or": "|", "not": "!"}.get(word, word))
                i = j
            else:
                raise ExpressionParseError(f"unexpected character {ch!r}")
        return tokens

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def parse(self):
        node = self._or()
        if self._peek() is not None:
            raise ExpressionParseError(f"trailing input at {self._peek()!r}")
        return node

    def _or(self):
        node = self._and()
        while self._peek() == "|":
            self._take()
            rhs = self._and()
            node = ("or", node, rhs)
        return node

    def _and(self):
        node = self._not()
        while self._peek() == "&":
            self._take()
            rhs = self._not()
            node = ("and", node, rhs)
        return node

    def _not(self):
        if self._peek() == "!":
            self._take()
            return ("not", self._not())
        return self._atom()

    def _atom(self):
        tok = self._take()
        if tok == "(":
            node = self._or()
            if self._take() != ")":
                raise ExpressionParseError("unbalanced parenthesis")
            return node
        if tok in _PREDICATES:
            return ("pred", tok)
        raise ExpressionParseError(
            f"unknown predicate {tok!r}; known: {', '.join(_PREDICATES)}")


def _eval_expr(node, ideal) -> bool:
    kind = node[0]
    if kind == "pred":
        return bool(_PREDICATES[node[1]](ideal))
    if kind == "not":
        return not _eval_expr(node[1], ideal)
    if kind == "and":
        return _eval_expr(node[1], ideal) and _eval_expr(node[2], ideal)
    return _eval_expr(node[1], ideal) or _eval_expr(node[2], ideal)


def cmd_search(args, out) -> int:
    expr = _ExprParser(args.expression).parse()
    if args.ring is not None:
        rings = [parse_ring(args.ring)]
    else:
        params = verify.CatalogParams(max_order=args.catalog_max_order)
        rings = verify.get_catalog(params).rings
    matches = []
    for r in rings:
        for i in proper_ideals(r):
            if _eval_expr(expr, i):
                matches.append({"ring": r.spec, "ideal": i.gens_label(),
                                "size": len(i)})
    echo = f'search "{args.expression}"'
    if args.ring is not None:
        echo += f" --ring {args.ring}"
    elif args.catalog_max_order is not None:
        echo += f" --catalog-max-order {args.catalog_max_order}"
    if args.format == "json":
        _emit_json(echo, {"matches": matches, "count": len(matches)}, args, out)
    else:
        for m in matches:
            out.write(f"{m['ring']}  {m['ideal']}  size {m['size']}\n")
        out.write(f"{len(matches)} matches\n")
    return 0


# -- fpoly --------------------------------------------------------------------


def _classification_payload(c: fpoly.PrincipalClassification) -> dict:
    d = asdict(c)
    d["factors"] = [list(t) for t in c.factors]
    return d


def _sample_payload(s: fpoly.SampleResult) -> dict:
    d = asdict(s)
    d["contradiction"] = list(s.contradiction) if s.contradiction else None
    return d


def cmd_fpoly(args, out) -> int:
    if args.fpoly_cmd == "classify":
        f = fpoly.parse_poly(args.p, args.poly)
        c = fpoly.classify_principal(f)
        echo = f'fpoly classify -p {args.p} -f "{args.poly}"'
        if args.format == "json":
            _emit_json(echo, _classification_payload(c), args, out)
        else:
            factors = " * ".join(f"({g})^{e}" if e > 1 else f"({g})"
                                 for g, e in c.factors)
            out.write(f"({c.f}) over F_{c.p}: {factors}\n")
            out.write(f"  quasi_sdf={str(c.quasi_sdf).lower()}  "
                      f"sdf_primary={str(c.sdf_primary).lower()}  "
                      f"quasi_primary={str(c.quasi_primary).lower()}\n")
        return 0
    # sweep
    rows = []
    contradictions = 0
    for c, s in fpoly.sweep(args.p, args.degree,
                            sample_degree=args.sample_degree,
                            budget=args.budget):
        if s.contradiction is not None:
            contradictions += 1
        rows.append({"classification": _classification_payload(c),
                     "sample": _sample_payload(s)})
    echo = f"fpoly sweep -p {args.p} -d {args.degree}"
    if args.sample_degree is not None:
        echo += f" --sample-degree {args.sample_degree}"
    if args.format == "json":
        _emit_json(echo, {"rows": rows, "contradictions": contradictions},
                   args, out)
    else:
        for row in rows:
            c, s = row["classification"], row["sample"]
            mark = "CONTRADICTION" if s["contradiction"] else "ok"
            out.write(f"({c['f']})  quasi_sdf={str(c['quasi_sdf']).lower()} "
                      f"sdf_primary={str(c['sdf_primary']).lower()} "
                      f"quasi_primary={str(c['quasi_primary']).lower()}  "
                      f"pairs={s['pairs_checked']}  {mark}\n")
        out.write(f"{len(rows)} polynomials, {contradictions} contradictions\n")
    return 3 if contradictions else 0


# -- wiring -------------------------------------------------------------------


def _add_global_flags(parser, suppress: bool) -> None:
    """Global flags are registered on the root parser and again on every
    subparser (with SUPPRESS defaults, so a subparser that does not see the
    flag leaves the root's value alone).  Both `sdfkit --jobs 2 verify all`
    and `sdfkit verify all --jobs 2` then parse."""
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default=d if suppress else "text")
    parser.add_argument("--no-timestamp", action="store_true",
                        default=d if suppress else False,
                        help="omit the timestamp field from json documents")
    parser.add_argument("--jobs", type=int,
                        default=d if suppress else 1)
    parser.add_argument("--catalog-max-order", type=int,
                        default=d if suppress else None)
    parser.add_argument("--seed", type=int,
                        default=d if suppress else None,
                        help="reserved; current behavior is deterministic")


def build_parser() -> _Parser:
    parser = _Parser(prog="sdfkit", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_command(name: str, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kw)
        _add_global_flags(p, suppress=True)
        return p

    p = add_command("classify-z", help="classify nZ for one or more n")
    p.add_argument("ns", help="N, N..M, or comma-separated list")
    p.add_argument("--witness", action="store_true",
                   help="show violating pairs in text output")
    p.set_defaults(func=cmd_classify_z)

    p = add_command("ring-report", help="classify every ideal of a ring")
    p.add_argument("spec", help="ring spec, e.g. Z12, Z2xZ4, Q(Z12,(4))")
    p.set_defaults(func=cmd_ring_report)

    p = add_command("verify", help="replay results over the catalog")
    p.add_argument("theorems", nargs="+",
                   help="theorem ids or 'all'")
    p.set_defaults(func=cmd_verify)

    p = add_command("search", help="hunt ideals matching an expression")
    p.add_argument("expression",
                   help="e.g. 'quasi_sdf & !sdf_primary'")
    p.add_argument("--ring", default=None,
                   help="restrict to one ring spec instead of the catalog")
    p.set_defaults(func=cmd_search)

    p = add_command("fpoly", help="principal ideals of F_p[x]")
    fsub = p.add_subparsers(dest="fpoly_cmd", required=True)
    pc = fsub.add_parser("classify", help="classify one principal ideal")
    _add_global_flags(pc, suppress=True)
    pc.add_argument("-p", type=int, required=True, help="prime modulus")
    pc.add_argument("-f", dest="poly", required=True,
                    help="polynomial, e.g. 'x^2+1'")
    pd = fsub.add_parser("sweep",
                         help="classify all monic f up to a degree, "
                              "cross-checked by the pair sampler")
    _add_global_flags(pd, suppress=True)
    pd.add_argument("-p", type=int, required=True, help="prime modulus")
    pd.add_argument("-d", dest="degree", type=int, required=True,
                    help="max degree")
    pd.add_argument("--sample-degree", type=int, default=None)
    pd.add_argument("--budget", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_fpoly)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.format == "csv" and args.command != "classify-z":
            raise UsageError("csv output is defined for classify-z only")
        return args.func(args, out)
    except _USAGE_ERRORS as exc:
        print(f"sdfkit: error: {exc}", file=sys.stderr)
        return 1
    except _BOUND_ERRORS as exc:
        print(f"sdfkit: bound exceeded: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
