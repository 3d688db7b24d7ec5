"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .errors import InputError, InvariantError
from .lucas import binom_mod_p, first_nonzero_binom_index, leading_binom_value
from .core_arith import check_prime
from .ramification import jumps_from_galois
from .report import TowerInputDocument, emit_report, report_for
from .witt import build_witt_tower, witt_addition_polynomials

EXIT_INPUT = 2
EXIT_INVARIANT = 3


def split_vector(text: str) -> List[str]:
    """Split ``"x, (x+1)^2, 0"`` on top-level commas."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    if any(not s for s in parts):
        raise InputError(f"empty component in Witt vector {text!r}")
    return parts


def _cmd_lucas_binom(args) -> str:
    check_prime(args.p)
    v = binom_mod_p(args.m, args.n, args.p).value
    return json.dumps({"value": v}) if args.json else str(v)


def _cmd_lucas_index(args) -> str:
    check_prime(args.p)
    idx = first_nonzero_binom_index(args.m, args.p)
    lead = leading_binom_value(args.m, args.p).value
    if args.json:
        return json.dumps({"index": idx, "leading_value": lead}, sort_keys=True)
    return f"{idx} {lead}"


def _cmd_witt_polys(args) -> str:
    system = witt_addition_polynomials(args.p, args.n)
    names = system.variable_names()
    if args.json:
        return json.dumps({f"S{i}": S.format(names) for i, S in enumerate(system.addition_polys)},
                          sort_keys=True, indent=2)
    return "\n".join(f"S{i} = {S.format(names)}" for i, S in enumerate(system.addition_polys))


def _emit(tower, wt, args) -> str:
    rd = report_for(tower, wt, galois_check=args.galois_check)
    return emit_report(rd, "json" if args.json else "text").rstrip("\n")


def _cmd_from_witt(args) -> str:
    wt = build_witt_tower(args.p, split_vector(args.vector))
    return _emit(wt.tower, wt, args)


def _cmd_analyze(args) -> str:
    doc = TowerInputDocument.load(args.file)
    tower, wt = doc.build()
    args.galois_check = args.galois_check or doc.galois_check
    if args.galois_check and wt is None:
        raise InputError("--galois-check needs a Witt-generated tower ('witt' input)")
    return _emit(tower, wt, args)


def _cmd_galois_check(args) -> str:
    wt = build_witt_tower(args.p, split_vector(args.vector))
    jumps = jumps_from_galois(wt)
    if args.json:
        return json.dumps({"galois_jumps": jumps, "valuation_jumps": list(wt.tower.jumps),
                           "match": True}, sort_keys=True)
    return (f"Galois jumps:    {', '.join(map(str, jumps))}\n"
            f"Valuation jumps: {', '.join(map(str, wt.tower.jumps))}\nmatch")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hasse-arf",
        description="Ramification jumps and the Hasse-Arf property of Artin-Schreier-Witt towers.")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, func, help_):
        sp = group.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    lucas = sub.add_parser("lucas", help="binomial coefficients mod p").add_subparsers(dest="action", required=True)
    sp = leaf(lucas, "binom", _cmd_lucas_binom, "C(m, n) mod p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = leaf(lucas, "index", _cmd_lucas_index, "least n > 0 with C(m, n) != 0 mod p, and C(m, n)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    witt = sub.add_parser("witt", help="Witt vector addition").add_subparsers(dest="action", required=True)
    sp = leaf(witt, "polys", _cmd_witt_polys, "print the addition polynomials S_0..S_{n-1}")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    tower = sub.add_parser("tower", help="build and analyze towers").add_subparsers(dest="action", required=True)
    sp = leaf(tower, "from-witt", _cmd_from_witt, "tower of a Witt vector over F_p((x))")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--vector", required=True, help='comma separated components, e.g. "x,0,0"')
    sp.add_argument("--galois-check", action="store_true", help="cross-validate jumps via the Galois action")
    sp = leaf(tower, "analyze", _cmd_analyze, "analyze a tower given as a JSON document")
    sp.add_argument("file")
    sp.add_argument("--galois-check", action="store_true", help="cross-validate jumps via the Galois action")

    galois = sub.add_parser("galois", help="Galois action checks").add_subparsers(dest="action", required=True)
    sp = leaf(galois, "check", _cmd_galois_check, "jumps from the Galois action vs valuations")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--vector", required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
