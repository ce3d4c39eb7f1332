"""Command-line front end.

Exit codes: 0 success, 2 usage or parameter error, 3 resource limit,
4 cross-method disagreement.
"""

from __future__ import annotations

import argparse
import sys

from . import digraph as dg
from . import families, oeis
from .errors import (
    EnumerationCapExceeded,
    IterlineError,
    MethodDisagreement,
    ParamOutOfRange,
    ResourceLimit,
)
from .exactla import adjacency_matrix, coarsest_equitable_partition, minimal_polynomial
from .metrics import metric_report
from .sequences import (
    ForbiddenWordSpec,
    SequenceReport,
    forbidden_word_digraph,
    order_sequence,
)

EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_DISAGREEMENT = 4


def _read_digraph(path: str) -> dg.Digraph:
    if path == "-":
        return dg.from_text(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return dg.from_text(fh.read())


def _method_set(name: str) -> tuple[str, ...]:
    return {
        "direct": ("direct",),
        "recurrence": ("recurrence",),
        "both": ("direct", "walk", "recurrence"),
    }[name]


def cmd_gen(args) -> int:
    fams = {
        "debruijn": lambda: families.de_bruijn(args.sigma, args.n),
        "kautz": lambda: families.kautz(args.d, args.l),
        "ck": lambda: families.cyclic_kautz(args.d, args.l),
        "sk": lambda: families.sub_kautz(args.d, args.l),
        "sf": lambda: families.square_free(args.d, args.l),
        "starcycle": lambda: families.star_cycle(args.n),
        "pendant": lambda: families.pendant_cycle(args.n),
        "unicyclic": lambda: families.unicyclic(args.n, args.d),
        "radii": lambda: families.radii_digraph(args.r1, args.r2),
    }
    try:
        g = fams[args.family]()
    except TypeError:
        print("missing parameter for family", file=sys.stderr)
        return EXIT_USAGE
    text = dg.to_text(g)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def _print_report(report: SequenceReport, args) -> None:
    if args.json:
        print(report.to_json())
        return
    if args.table:
        seq = ", ".join(str(t) for t in report.terms)
        print(f"| {report.source} | {seq}, ... |")
        return
    print(args.sep.join(str(t) for t in report.terms))


def cmd_seq(args) -> int:
    g = _read_digraph(args.input)
    if g.n == 0:
        print("error: empty digraph", file=sys.stderr)
        return EXIT_USAGE
    report = order_sequence(g, args.k, methods=_method_set(args.method))
    _print_report(report, args)
    return 0


def _oeis_column(terms, args) -> str:
    if args.oeis_db:
        matches = oeis.match_local(terms, args.oeis_db)
        if matches:
            return ", ".join(m.ident for m in matches)
        if not args.remote:
            return "not in OEIS"
    if args.remote:
        matches = oeis.search_remote(terms)
        if matches:
            return ", ".join(m.ident for m in matches)
        return "not in OEIS"
    return "-"


def cmd_forbid(args) -> int:
    words = tuple(w for w in args.avoid.split(",") if w) if args.avoid else ()
    try:
        spec = ForbiddenWordSpec(sigma=args.sigma, window=args.n, forbidden=words)
    except ParamOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    g = forbidden_word_digraph(spec)
    report = order_sequence(g, args.k)
    if args.format == "json":
        print(report.to_json())
        return 0
    seq = ", ".join(str(t) for t in report.terms)
    words_col = ", ".join(words)
    if args.format == "csv":
        print(f'"{words_col}","{seq}","{_oeis_column(report.terms, args)}"')
    else:
        print(f"| {words_col} | {seq}, ... | {_oeis_column(report.terms, args)} |")
    return 0


def cmd_metrics(args) -> int:
    g = _read_digraph(args.input)
    if args.line:
        g, _ = dg.line_iterate(g, args.line)
    if g.n == 0:
        print("error: empty digraph", file=sys.stderr)
        return EXIT_USAGE
    print(metric_report(g).to_json())
    return 0


def cmd_recur(args) -> int:
    g = _read_digraph(args.input)
    if g.n == 0:
        print("error: empty digraph", file=sys.stderr)
        return EXIT_USAGE
    part = coarsest_equitable_partition(g)
    poly = minimal_polynomial(part.quotient)
    full_poly = minimal_polynomial(adjacency_matrix(g))
    report = order_sequence(g, max(2 * poly.degree + 4, 8))
    print(f"m(x) = {full_poly}")
    if poly.degree != full_poly.degree:
        print(f"quotient m(x) = {poly}")
    if report.recurrence is not None:
        rec = report.recurrence
        print(f"{rec}  (order {rec.order}, start {rec.start})")
    else:
        print("no linear recurrence found at this depth")
    return 0


def cmd_oeis(args) -> int:
    terms = [int(t) for t in args.terms.split(",") if t]
    if args.local:
        matches = oeis.match_local(terms, args.local, min_overlap=args.min_overlap)
    elif args.remote:
        matches = oeis.search_remote(terms)
    else:
        print("error: need --local PATH or --remote", file=sys.stderr)
        return EXIT_USAGE
    if not matches:
        print("not in OEIS")
        return 0
    for m in matches:
        print(f"{m.ident} offset={m.offset} matched={m.matched_length}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iterline")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a digraph family member")
    g.add_argument("--family", required=True, choices=[
        "debruijn", "kautz", "ck", "sk", "sf", "starcycle", "pendant",
        "unicyclic", "radii",
    ])
    g.add_argument("--sigma", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--l", type=int)
    g.add_argument("--r1", type=int)
    g.add_argument("--r2", type=int)
    g.add_argument("--output", "-o", default="-")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("seq", help="order sequence of iterated line digraphs")
    s.add_argument("input")
    s.add_argument("--k", type=int, default=7)
    s.add_argument("--method", choices=["direct", "recurrence", "both"], default="both")
    s.add_argument("--json", action="store_true")
    s.add_argument("--table", action="store_true")
    s.add_argument("--sep", default=" ")
    s.set_defaults(func=cmd_seq)

    f = sub.add_parser("forbid", help="count words avoiding forbidden factors")
    f.add_argument("--sigma", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--avoid", default="")
    f.add_argument("--k", type=int, default=7)
    f.add_argument("--format", choices=["table", "csv", "json"], default="table")
    f.add_argument("--oeis-db")
    f.add_argument("--remote", action="store_true")
    f.set_defaults(func=cmd_forbid)

    m = sub.add_parser("metrics", help="inner metric report")
    m.add_argument("input")
    m.add_argument("--line", type=int, default=0, metavar="K")
    m.set_defaults(func=cmd_metrics)

    r = sub.add_parser("recur", help="minimal polynomial and recurrence")
    r.add_argument("input")
    r.set_defaults(func=cmd_recur)

    o = sub.add_parser("oeis", help="look up terms in OEIS")
    o.add_argument("--terms", required=True)
    o.add_argument("--local")
    o.add_argument("--remote", action="store_true")
    o.add_argument("--min-overlap", type=int, default=8)
    o.set_defaults(func=cmd_oeis)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MethodDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (ResourceLimit, EnumerationCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (IterlineError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
