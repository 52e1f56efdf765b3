"""Command-line front end: ``weldbraid <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import burau, gassner
from .fox import fox_action_matrix, fox_derivative
from .galgebra import SemidirectAmbient, delete_rows_cols
from .laurent import parse_bindings
from .presentations import Family, relators
from .verify import verify_rep
from .words import format_word, from_free, parse_word, word_to_auto

GROUPS = [f.value for f in Family]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _emit_matrix(m, as_json: bool) -> None:
    print(_dump(m.to_json()) if as_json else m.render())


def cmd_relators(args) -> int:
    rels = relators(Family(args.group), args.n)
    if args.json:
        print(_dump([r.to_json() for r in rels]))
    else:
        for r in rels:
            print(r)
    return 0


def cmd_artin(args) -> int:
    from .presentations import expand_xi

    a = word_to_auto(expand_xi(parse_word(args.word), args.n), args.n)
    images = [format_word(from_free(img)) or "1" for img in a.images]
    if args.json:
        print(_dump({"rank": args.n, "images": images}))
    else:
        for k, img in enumerate(images, 1):
            print(f"x{k} -> {img}")
    return 0


def cmd_fox(args) -> int:
    d = fox_derivative(parse_word(args.word), args.wrt, args.n)
    if args.json:
        print(_dump({"ambient": SemidirectAmbient(args.n).to_json(), "value": d.to_json()}))
    else:
        print(d)
    return 0


def cmd_foxmat(args) -> int:
    _emit_matrix(fox_action_matrix(parse_word(args.elem), args.n), args.json)
    return 0


def cmd_burau(args) -> int:
    m = burau.word_matrix(parse_word(args.word), burau.BurauParams(args.n), args.mode)
    m = m.substitute(parse_bindings(args.subst))
    _emit_matrix(m, args.json)
    return 0


def cmd_gassner(args) -> int:
    if args.mode == gassner.SYMBOLIC:
        m = gassner.gassner_symbolic(args.i, args.j, args.n)
    else:
        m = gassner.gassner_evaluated(args.i, args.j, args.n)
    _emit_matrix(m, args.json)
    return 0


def cmd_iterate(args) -> int:
    m = gassner.iterate(args.n, args.r, args.i, args.j)
    if args.reduce:
        m = delete_rows_cols(m, [int(k) for k in args.reduce.split(",") if k.strip()])
    _emit_matrix(m, args.json)
    return 0


def cmd_verify(args) -> int:
    report = verify_rep(Family(args.group), args.n, args.rep, parse_bindings(args.subst))
    print(report.dumps() if args.json else report.render())
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weldbraid", description="Matrix representations of virtual and welded braid groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
        sp.set_defaults(func=func)
        return sp

    sp = add("relators", cmd_relators, "list defining relators")
    sp.add_argument("--group", choices=GROUPS, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("artin", cmd_artin, "Artin automorphism of a sigma/tau/xi word")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--word", required=True)

    sp = add("fox", cmd_fox, "Fox derivative of a free word")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--wrt", type=int, required=True, help="differentiate with respect to x_k")

    sp = add("foxmat", cmd_foxmat, "Fox action matrix of an element of F_n x| PW_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--elem", required=True)

    sp = add("burau", cmd_burau, "Burau-variant matrix of a VB_n word")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--mode", choices=[burau.SYMBOLIC, burau.EVALUATED], default=burau.EVALUATED)
    sp.add_argument("--subst", action="append", default=[], help="e.g. b=1 or b=a")

    sp = add("gassner", cmd_gassner, "generalized Gassner matrix of xi_{i,j}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--mode", choices=[gassner.SYMBOLIC, gassner.EVALUATED], default=gassner.EVALUATED)

    sp = add("iterate", cmd_iterate, "iterated Gassner matrix xi^(r)_{i,j}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--reduce", default="", help="comma-separated 1-based rows/columns to delete")

    sp = add("verify", cmd_verify, "verify every relator of a group under a representation")
    sp.add_argument("--group", choices=GROUPS, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--rep", required=True, help="artin, burau-symbolic, burau-evaluated, gassner-symbolic, gassner-evaluated, iterated:R")
    sp.add_argument("--subst", action="append", default=[])
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
