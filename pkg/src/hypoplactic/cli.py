"""Command line front end.

Exit status: 0 for an affirmative verdict, 1 for a negative one, 2 for
usage, parse or resource-limit errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import golden
from .basis import Derivation, derive_from_basis, find_invalid_step
from .congruence import METHODS, canonical_form
from .embeddings import components_to_json, phi_n
from .errors import ParseError, ResourceLimitError
from .identities import Identity, decide, enumerate_identities, format_pattern
from .monoids import MultiplicationTable, builtin, satisfies
from .tableau import p_symbol
from .words import format_word, parse_word

OK, NO, ERROR = 0, 1, 2


def _show_word(w) -> str:
    return format_word(w) or "ε"


def cmd_insert(args):
    t = p_symbol(parse_word(args.word))
    if args.json:
        print(json.dumps(t.to_json()))
    else:
        print(t.render() if t.rows else "(empty tableau)")
    return OK


def cmd_canon(args):
    print(_show_word(canonical_form(parse_word(args.word))))
    return OK


def cmd_equiv(args):
    u, v = parse_word(args.u), parse_word(args.v)
    same = METHODS[args.method](u, v)
    print(f"{_show_word(u)} {'==' if same else '!='} {_show_word(v)} (method: {args.method})")
    return OK if same else NO


def cmd_check(args):
    ident = Identity.parse(args.identity)
    verdict = decide(ident)
    if verdict.holds:
        print(f"holds: {ident}")
        return OK
    print(f"does not hold: {verdict.reason}")
    return NO


def cmd_derive(args):
    ident = Identity.parse(args.identity)
    verdict = decide(ident)
    if not verdict.holds:
        print(f"does not hold: {verdict.reason}")
        return NO
    d = derive_from_basis(ident)
    if args.json:
        print(json.dumps(d.to_json(), indent=2))
    else:
        print(f"{ident}  ({len(d)} step{'' if len(d) == 1 else 's'})")
        print(d.render())
    return OK


def cmd_verify(args):
    with open(args.file) as fh:
        try:
            d = Derivation.from_json(json.load(fh))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ParseError(f"malformed derivation file: {exc}") from exc
    bad = find_invalid_step(d, d.start, d.end)
    if bad is None:
        print(f"valid derivation of {format_pattern(d.start)} ~ {format_pattern(d.end)} ({len(d)} step{'' if len(d) == 1 else 's'})")
        return OK
    if bad == len(d.steps):
        print("invalid: steps do not connect the stated endpoints")
    else:
        print(f"invalid: step {bad + 1} does not check")
    return NO


def cmd_search(args):
    found = sorted(enumerate_identities(args.vars, args.len), key=lambda i: (i.lhs, i.rhs))
    for ident in found:
        print(ident)
    print(f"{len(found)} identities up to renaming and side swap")
    return OK if found else NO


def cmd_embed(args):
    print(json.dumps(components_to_json(phi_n(parse_word(args.word), args.n)), indent=2))
    return OK


def _parse_assignment(text: str, table: MultiplicationTable) -> dict[str, str]:
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise ParseError(f"assignment must look like 'x=a', got {item!r}", item)
        var, val = (s.strip() for s in item.split("=", 1))
        if val not in table.elements:
            raise ParseError(f"unknown element {val!r}", val)
        out[var] = val
    return out


def cmd_finite_check(args):
    if args.table:
        with open(args.table) as fh:
            table = MultiplicationTable.parse(fh.read())
    else:
        table = builtin(args.builtin)
    ident = Identity.parse(args.identity)
    if args.assign:
        psi = _parse_assignment(args.assign, table)
        missing = [x for x in ident.variables() if x not in psi]
        if missing:
            raise ParseError(f"assignment misses variable {missing[0]!r}", missing[0])
        left, right = table.evaluate(ident.lhs, psi), table.evaluate(ident.rhs, psi)
        out = {"identity": str(ident), "assignment": psi, "lhs": left, "rhs": right, "equal": left == right}
        print(json.dumps(out))
        return OK if left == right else NO
    res = satisfies(table, ident)
    out = {"identity": str(ident), "holds": res.holds}
    if not res.holds:
        out.update(counterexample=res.counterexample, lhs=res.lhs_value, rhs=res.rhs_value)
    print(json.dumps(out))
    return OK if res.holds else NO


def cmd_selftest(args):
    results = golden.run()
    for name, ok in results:
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    return OK if all(ok for _, ok in results) else NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypo", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="print the quasi-ribbon tableau of a word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("canon", help="canonical representative of a word's class")
    p.add_argument("word")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("equiv", help="decide whether two words are congruent")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--method", choices=sorted(METHODS), default="invariants")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("check", help='decide whether hypo satisfies "u ~ v"')
    p.add_argument("identity")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", help="derive an identity from L, M, R")
    p.add_argument("identity")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("verify", help="re-check a JSON derivation")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="list shortest-style identities of a given shape")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("embed", help="components of the product embedding")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("finite-check", help="check an identity in a finite monoid")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", help="multiplication table file")
    src.add_argument("--builtin", help="S, C3, left_zero(k), right_zero(k)")
    p.add_argument("--assign", help="evaluate one assignment instead, e.g. x=a,y=c")
    p.add_argument("identity")
    p.set_defaults(func=cmd_finite_check)

    p = sub.add_parser("selftest", help="run the worked-example checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ResourceLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
