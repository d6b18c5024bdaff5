"""Command-line interface: ``conjlang <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .automata import Alphabet, enumerate_words
from .benois import RationalSubset
from .conjugacy import (
    conjgeo_general,
    conjgeo_reduced_pair,
    conjgeo_unconstrained,
    conjsl_enum,
)
from .gcp import GcpInstance, decide_double_gcp, decide_gcp
from .growth import build_ud, degree_estimate, relative_growth
from .semilinear import alpha_va, load_presentation, load_subset, restrict
from .textio import (
    AutomatonFormatError,
    RegexSyntaxError,
    dump_automaton,
    language_rank,
    load_language,
    parse_automaton,
    parse_regex,
    regex_rank,
)
from .words import conjugacy_test, cyclic_reduce, reduce

EPILOG = """\
formats:
  words      letters a, b, c, ... are generators and A, B, C, ... their
             inverses; "1" or "" is the empty word.  Example: aBAb
  languages  a regular expression over the same letters with | * + ? ( )
             and 1 for the empty word, e.g. "(ab)*|B", or the path of an
             automaton file:
                 states: 3
                 initial: 0
                 final: 2
                 trans: 0 a 1     # one transition per line
                 trans: 1 B 2
  groups     (va) a builtin name (dinf, swap, klein) or a JSON file
                 {"m": 1, "cosets": ["id", "flip"], "Q": [[[1]], [[-1]]],
                  "coset_product": [[0, 1], [1, 0]],
                  "cocycle": [[[0], [0]], [[0], [0]]]}
             where n*s * n'*t = (n + n' Q_s^-1 + cocycle[s][t]) * coset_product[s][t]
             and t^-1 n t = n Q_t (row vectors).
  subsets    (va) JSON: {"components": [{"coset": "flip",
                 "linear": [{"base": [1], "periods": [[2]]}]}]}

The rank defaults to the largest generator used (at least 2); --rank overrides.
Decision commands exit 0 for yes, 1 for no, and 2 on errors.
"""


class CliError(Exception):
    pass


def _rank(args: argparse.Namespace, *texts: str | None, languages: Sequence[str | None] = ()) -> int:
    if args.rank is not None:
        return args.rank
    ranks = [regex_rank(t) for t in texts if t is not None]
    ranks += [language_rank(lang) for lang in languages if lang is not None]
    return max([2, *ranks])


def _subset(spec: str | None, alphabet: Alphabet) -> RationalSubset:
    if spec is None:
        return RationalSubset.whole_group(alphabet)
    return RationalSubset.from_automaton(load_language(spec, alphabet))


def _print_words(alphabet: Alphabet, words) -> None:
    for w in words:
        print(alphabet.format(w))


def cmd_reduce(args) -> int:
    a = Alphabet(_rank(args, args.word))
    w = reduce(a.parse(args.word))
    if args.cyclic:
        core, z = cyclic_reduce(w)
        print(f"{a.format(core)}\t{a.format(z)}")
    else:
        print(a.format(w))
    return 0


def cmd_conjtest(args) -> int:
    a = Alphabet(_rank(args, args.u, args.v))
    z = conjugacy_test(a.parse(args.u), a.parse(args.v))
    if z is None:
        print("no")
        return 1
    print(f"yes\t{a.format(z)}")
    return 0


def cmd_benois(args) -> int:
    spec = args.regex if args.regex is not None else args.automaton
    a = Alphabet(_rank(args, languages=[spec]))
    if args.automaton is not None:
        lang = parse_automaton(Path(args.automaton).read_text(), a)
    else:
        lang = parse_regex(args.regex, a)
    u = RationalSubset.from_automaton(lang)
    if args.enum is not None:
        _print_words(a, enumerate_words(u.reduced, args.enum))
    else:
        sys.stdout.write(dump_automaton(u.reduced))
    return 0


def cmd_conjgeo(args) -> int:
    a = Alphabet(_rank(args, languages=[args.u, args.v]))
    u = _subset(args.u, a)
    if args.v is None and args.method != "reduced-pair":
        result = conjgeo_unconstrained(u)
    else:
        v = _subset(args.v, a)
        if args.method == "reduced-pair":
            result = conjgeo_reduced_pair(u, v)
        else:
            result = conjgeo_general(u, v)
    lang = result.conjminlensl if args.minlen else result.conjgeo
    if args.enum is not None:
        _print_words(a, enumerate_words(lang, args.enum))
    else:
        sys.stdout.write(dump_automaton(lang))
    return 0


def cmd_conjsl(args) -> int:
    a = Alphabet(_rank(args, languages=[args.u]))
    _print_words(a, conjsl_enum(_subset(args.u, a), args.max))
    return 0


def cmd_growth(args) -> int:
    a = Alphabet(_rank(args, languages=[args.u]))
    table = relative_growth(_subset(args.u, a), args.max)
    rows = list(table.rows())
    if args.tsv:
        rows = rows[1:]
    else:
        print("n\tc\tcc")
    for n, c, cc in rows:
        print(f"{n}\t{c}\t{cc}")
    return 0


def cmd_ud(args) -> int:
    ud = build_ud(args.degree)
    table = relative_growth(ud.subset(), args.max)
    n0, n1 = args.window if args.window else (min(8, args.max - 1), args.max)
    try:
        slope = degree_estimate(table, (n0, n1))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if args.table:
        for n, c, cc in table.rows():
            print(f"{n}\t{c}\t{cc}")
    print(f"degree {args.degree} window [{n0},{n1}] slope {slope:.4f}")
    return 0


def cmd_gcp(args) -> int:
    a = Alphabet(_rank(args, args.g, languages=[args.u, args.v]))
    inst = GcpInstance(a.parse(args.g), _subset(args.u, a), _subset(args.v, a))
    result = decide_gcp(inst, witness=args.witness)
    print("yes" if result.answer else "no")
    if args.witness and result.answer:
        if result.witness is None:
            print("witness: not found within the search bound")
        else:
            u, v = result.witness
            print(f"u = {a.format(u)}\nv = {a.format(v)}")
    return 0 if result.answer else 1


def cmd_doublegcp(args) -> int:
    a = Alphabet(_rank(args, languages=[args.u, args.v]))
    answer = decide_double_gcp(_subset(args.u, a), _subset(args.v, a))
    print("yes" if answer else "no")
    return 0 if answer else 1


def cmd_va(args) -> int:
    g = load_presentation(args.group)
    u = load_subset(g, args.subset)
    alpha = alpha_va(g, u)
    for s_set, coset in alpha.components:
        for comp in s_set.components:
            periods = " ".join(str(list(p)) for p in comp.periods) or "-"
            print(f"{g.cosets[coset]}\tbase {list(comp.base)}\tperiods {periods}")
    if args.box is not None:
        for vec, coset in sorted(restrict(alpha.in_box(g, args.box), args.box), key=lambda x: (x[1], x[0])):
            print(f"{g.cosets[coset]}\t{' '.join(map(str, vec))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conjlang",
        description="Conjugacy languages of rational subsets of free groups.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, help="number of free generators (default: inferred)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(
            name, help=help, parents=[common], epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter
        )
        p.set_defaults(func=func)
        return p

    p = add("reduce", cmd_reduce, "free reduction of a word")
    p.add_argument("word")
    p.add_argument("--cyclic", action="store_true", help="print cyclic core and conjugator")

    p = add("conjtest", cmd_conjtest, "are two words conjugate? prints z with z^-1 u z = v")
    p.add_argument("u")
    p.add_argument("v")

    p = add("benois", cmd_benois, "reduced representatives of a rational subset")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--regex")
    src.add_argument("--automaton")
    p.add_argument("--enum", type=int, metavar="N", help="list words up to length N")

    p = add("conjgeo", cmd_conjgeo, "cyclically reduced conjugates of U by V")
    p.add_argument("--u", required=True)
    p.add_argument("--v", help="conjugator set (default: the whole group)")
    p.add_argument("--method", choices=["general", "reduced-pair"], default="general")
    p.add_argument("--minlen", action="store_true", help="emit the minimal-length normal forms")
    p.add_argument("--enum", type=int, metavar="N", help="list words up to length N instead of the automaton")

    p = add("conjsl", cmd_conjsl, "shortlex-least representative of each class meeting U")
    p.add_argument("--u", required=True)
    p.add_argument("--max", type=int, required=True)

    p = add("growth", cmd_growth, "relative conjugacy growth of U")
    p.add_argument("--u", required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--tsv", action="store_true", help="bare rows n=1..max")

    p = add("ud", cmd_ud, "growth degree of the U_d construction")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--max", type=int, default=24)
    p.add_argument("--window", type=int, nargs=2, metavar=("N0", "N1"))
    p.add_argument("--table", action="store_true")

    p = add("gcp", cmd_gcp, "is g = v^-1 u v with u in U and v in V?")
    p.add_argument("--g", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", help="conjugator set (default: the whole group)")
    p.add_argument("--witness", action="store_true")

    p = add("doublegcp", cmd_doublegcp, "does some element of U have a conjugate in V?")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = add("va", cmd_va, "virtually abelian conjugacy closures")
    p.add_argument("action", choices=["alpha"])
    p.add_argument("--group", required=True)
    p.add_argument("--subset", required=True)
    p.add_argument("--box", type=int, metavar="R", help="also list elements with coordinates in [-R, R]")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except AutomatonFormatError as exc:
        print(f"error: automaton {exc}", file=sys.stderr)
    except RegexSyntaxError as exc:
        print(f"error: regex {exc}", file=sys.stderr)
    except (CliError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
