"""Command-line front end.

Exit codes: 0 success (avoids / proved / all pass), 1 a substantive negative
(contains / exceeded / fail), 2 a usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .involutions import Mode, parse_involution
from .patterns import (
    PatternSyntaxError,
    find_occurrence,
    find_occurrence_any_involution,
    parse_pattern,
    theta_complement,
)
from .provers import UnavoidabilityCertificate, prove_unavoidable, scan_confirm, symmetry_reduced_prove
from .reproduce import TARGETS, run_target, seed_table
from .words import Alphabet, DomainError, SpecSyntaxError, parse_wordspec, realize_word

log = logging.getLogger("thetapat")


class UsageError(Exception):
    pass


def _pattern(text: str):
    try:
        return parse_pattern(text)
    except PatternSyntaxError as e:
        raise UsageError(f"bad pattern {text!r}: {e}") from e


def _word(spec_text: str, length: int):
    try:
        spec = parse_wordspec(spec_text)
    except (SpecSyntaxError, ValueError) as e:
        raise UsageError(f"bad word spec {spec_text!r}: {e}") from e
    if length < 0:
        raise UsageError("--len must be non-negative")
    w = realize_word(spec, length)
    if len(w) < length:
        raise UsageError(f"{spec_text!r} has only {len(w)} letters, asked for {length}")
    return w.prefix(length)


def cmd_generate(args) -> int:
    print(_word(args.spec, args.len))
    return 0


def cmd_check(args) -> int:
    p = _pattern(args.pattern)
    host = _word(args.spec, args.len)
    if args.alphabet:
        try:
            host = host.over(Alphabet(args.alphabet))
        except (DomainError, ValueError) as e:
            raise UsageError(str(e)) from e
    if args.max_var_len < 1:
        raise UsageError("--max-var-len must be at least 1")
    if args.theta:
        try:
            theta = parse_involution(args.theta, host.alphabet)
        except ValueError as e:
            raise UsageError(f"bad involution {args.theta!r}: {e}") from e
        occ = find_occurrence(host, p, theta, args.max_var_len)
        scope = str(theta)
    else:
        occ = find_occurrence_any_involution(host, p, Mode(args.mode), args.max_var_len)
        scope = f"all {args.mode} involutions"
    if occ is None:
        print(f"AVOIDS (bounded: len={len(host)} max_var_len={args.max_var_len} {scope}) {p}")
        return 0
    print(f"CONTAINS {p} {occ}")
    return 1


def cmd_prove(args) -> int:
    p = _pattern(args.pattern)
    if args.k < 1 or args.k > 26 or args.max_depth < 1:
        raise UsageError("need 1 <= --k <= 26 and --max-depth >= 1")
    prover = symmetry_reduced_prove if args.reduced else prove_unavoidable
    res = prover(p, args.k, Mode(args.mode), args.max_depth, args.max_var_len)
    doc = res.to_dict()
    if isinstance(res, UnavoidabilityCertificate) and args.confirm:
        scan = scan_confirm(res)
        doc["scan_words_checked"] = scan.words_checked
        doc["scan_all_contain"] = scan.all_contain
        doc["scan_minimal"] = scan.minimal
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    if isinstance(res, UnavoidabilityCertificate):
        print(res.to_text(), end="")
        if args.confirm:
            print(f"scan: {doc['scan_words_checked']} words, all contain: {doc['scan_all_contain']}")
        return 0
    print(f"EXCEEDED witness={res.witness} nodes_explored={res.nodes_explored}")
    return 1


def cmd_reproduce(args) -> int:
    if args.seed_table:
        print(seed_table())
        return 0
    if not args.target:
        raise UsageError("--target is required unless --seed-table is given")
    names = list(TARGETS) if args.target == "all" else [args.target]
    ok = True
    for name in names:
        res = run_target(name)
        print(res, flush=True)
        ok &= res.passed
    if len(names) > 1:
        print(f"{'ALL PASS' if ok else 'SOME FAILED'} ({len(names)} targets)")
    return 0 if ok else 1


def cmd_complement(args) -> int:
    print(theta_complement(_pattern(args.pattern)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thetapat", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = ap.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    g = sub.add_parser("generate", help="print a prefix of a generated word")
    g.add_argument("--spec", required=True, help="e.g. 'fix:a=ab,b=ba@a|a=aacb,b=accb'")
    g.add_argument("--len", type=int, required=True)
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="bounded search for a pattern in a word prefix")
    c.add_argument("--spec", required=True)
    c.add_argument("--pattern", required=True, help="e.g. 'a t(a) a'")
    c.add_argument("--mode", choices=modes, default="morphic")
    c.add_argument("--theta", help="one fixed involution, e.g. 'morphic:(ab)(c)' or 'morphic:id'")
    c.add_argument("--max-var-len", type=int, default=30)
    c.add_argument("--len", type=int, default=10**4)
    c.add_argument("--alphabet", help="host alphabet when it has letters the word does not use")
    c.set_defaults(func=cmd_check)

    p = sub.add_parser("prove", help="search for an unavoidability certificate")
    p.add_argument("--pattern", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=modes, default="morphic")
    p.add_argument("--max-depth", type=int, default=32)
    p.add_argument("--max-var-len", type=int, default=None)
    p.add_argument("--reduced", action="store_true", help="only explore words starting with 'a'")
    p.add_argument("--confirm", action="store_true", help="brute-force re-check of the certificate")
    p.add_argument("--out", help="write the result as JSON")
    p.set_defaults(func=cmd_prove)

    r = sub.add_parser("reproduce", help="re-run frozen finite checks")
    r.add_argument("--target", choices=list(TARGETS) + ["all"])
    r.add_argument("--seed-table", action="store_true", help="print the frozen parameters")
    r.set_defaults(func=cmd_reproduce)

    m = sub.add_parser("complement", help="swap plain and t(...) terms")
    m.add_argument("pattern")
    m.set_defaults(func=cmd_complement)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as e:
        print(f"thetapat: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
