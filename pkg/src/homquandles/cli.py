"""Command line surface: homquandles <subcommand>.

Subcommands: check (diagnose a quandle file), build (digraph to quandle),
present (quandle to digraph with witness), iso (isomorphism of two files),
classify (catalog one order), table (class counts for a range of orders),
count (closed-form and Burnside counts), qid (the icosidodecahedron
quandle).  Exit codes: 0 success, 1 negative answer, 2 error.  All output
is deterministic for fixed inputs regardless of worker count.
"""

from __future__ import annotations

import argparse
import os
import sys

from .classify import (
    MAX_CLASSIFY_ORDER,
    burnside_details,
    classify_order,
    count_two_p,
    moduli_label,
    reproduce_table,
    write_catalog,
)
from .errors import BudgetExceeded, CapExceeded, FormatError, NotInClass
from .extension import build, inner_order_from_rows, presentation, format_witness
from .geometry import build_qid, verify_no_homogeneous_weight, verify_qid_homogeneous
from .quandle import (
    check_axioms,
    inner_group,
    is_connected,
    is_homogeneous,
    quandle_isomorphic,
    read_qnd,
    write_qnd,
)
from .wdigraph import format_dot, read_wdg, weak_isomorphism, write_wdg

__all__ = ["main"]


def _jobs_arg(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("at least one worker is required")
    return value


def _budget_arg(text):
    value = int(text)
    if value < 10**4:
        raise argparse.ArgumentTypeError("budgets below 10^4 are not useful")
    return value


def _orbit_summary(orbits):
    by_size = {}
    for o in orbits:
        by_size[len(o)] = by_size.get(len(o), 0) + 1
    return ",".join("%dx%d" % (by_size[s], s) for s in sorted(by_size))


def cmd_check(args):
    q = read_qnd(args.path)
    print("order %d" % len(q.table))
    bad = check_axioms(q)
    if bad:
        for name, points in bad:
            print(
                "axiom violated: %s at %s"
                % (name, " ".join(str(p) for p in points))
            )
        return 2
    print("axioms ok")
    inn = inner_group(q)
    abelian = inn.is_abelian()
    print("inner abelian %s" % ("yes" if abelian else "no"))
    if not abelian:
        return 2
    orbits = inn.orbits()
    in_class = len({len(o) for o in orbits}) == 1
    if in_class:
        digraph, _ = presentation(q)
        print("inner order %d" % inner_order_from_rows(digraph))
    else:
        print("inner order %d" % inn.order)
    print("orbits %s" % _orbit_summary(orbits))
    print("connected %s" % ("yes" if is_connected(q) else "no"))
    try:
        if in_class:
            from .wdigraph import is_flip_homogeneous

            hom = is_flip_homogeneous(digraph, args.budget)
        else:
            hom = is_homogeneous(q, args.budget)
        print("homogeneous %s" % ("yes" if hom else "no"))
    except BudgetExceeded:
        print("homogeneous budget-exceeded")
    return 0


def cmd_build(args):
    w = read_wdg(args.path)
    q = build(w)
    out = args.out or os.path.splitext(args.path)[0] + ".qnd"
    write_qnd(q, out)
    print("wrote %s" % out)
    return 0


def cmd_present(args):
    q = read_qnd(args.path)
    digraph, witness = presentation(q)
    sys.stdout.write(format_witness(witness))
    if args.format == "dot":
        out = args.out or os.path.splitext(args.path)[0] + ".dot"
        with open(out, "w", encoding="ascii") as fh:
            fh.write(format_dot(digraph))
    else:
        out = args.out or os.path.splitext(args.path)[0] + ".wdg"
        write_wdg(digraph, out)
    print("wrote %s" % out)
    return 0


def cmd_iso(args):
    exts = tuple(os.path.splitext(p)[1] for p in (args.a, args.b))
    if exts == (".qnd", ".qnd"):
        f = quandle_isomorphic(read_qnd(args.a), read_qnd(args.b), args.budget)
        if f is None:
            print("not isomorphic")
            return 1
        print("isomorphic")
        print("map " + " ".join(str(v) for v in f))
        return 0
    if exts == (".wdg", ".wdg"):
        wit = weak_isomorphism(read_wdg(args.a), read_wdg(args.b), args.budget)
        if wit is None:
            print("not weakly isomorphic")
            return 1
        print("weakly isomorphic")
        print("map " + " ".join(str(v) for v in wit.f))
        print(
            "flips "
            + " ".join(",".join(str(v) for v in s) for s in wit.sigma)
        )
        return 0
    raise FormatError("iso compares two .qnd files or two .wdg files")


def cmd_classify(args):
    catalog = classify_order(args.n, jobs=args.jobs)
    print("order %d" % catalog.order)
    counts = {}
    for e in catalog.entries:
        key = (e.x, e.moduli)
        counts[key] = counts.get(key, 0) + 1
    for x, moduli in sorted(counts):
        print("x %d a %s: %d" % (x, moduli_label(moduli), counts[(x, moduli)]))
    print("total %d" % len(catalog.entries))
    if args.out:
        files = write_catalog(catalog, args.out)
        print("wrote %d files to %s" % (len(files) + 1, args.out))
    return 0


def cmd_table(args):
    counts = reproduce_table(args.max, jobs=args.jobs)
    orders = sorted(counts)
    print(" ".join(str(n) for n in orders))
    print(" ".join(str(counts[n]) for n in orders))
    return 0


def cmd_count(args):
    if args.two_p is not None:
        print(count_two_p(args.two_p))
        return 0
    p, q = args.burnside
    parts, total, orbits = burnside_details(p, q)
    print("parts " + "+".join(str(v) for v in parts))
    print("total %d" % total)
    print("orbits %d" % orbits)
    return 0


def cmd_qid(args):
    code = 0
    if args.export:
        quandle, digraph = build_qid()
        os.makedirs(args.export, exist_ok=True)
        for name, writer, obj in (
            ("qid.qnd", write_qnd, quandle),
            ("qid.wdg", write_wdg, digraph),
        ):
            path = os.path.join(args.export, name)
            writer(obj, path)
            print("wrote %s" % path)
    if args.verify:
        ok_h, lines_h = verify_qid_homogeneous(args.budget)
        ok_n, lines_n = verify_no_homogeneous_weight(args.budget)
        print("homogeneity:")
        for line in lines_h:
            print("  " + line)
        print("no homogeneous weighting:")
        for line in lines_n:
            print("  " + line)
        if not (ok_h and ok_n):
            code = 1
    if not (args.export or args.verify):
        quandle, digraph = build_qid()
        print("order %d" % len(quandle.table))
        print("vertices %d" % digraph.m)
        print("group Z5")
    return code


def _parser():
    top = argparse.ArgumentParser(
        prog="homquandles",
        description="homogeneous quandles with abelian inner automorphism groups",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def budget_opt(p):
        p.add_argument("--budget", type=_budget_arg, default=None,
                       help="search-node cap (default: QUANDLE_BUDGET or 10^8)")

    def jobs_opt(p):
        p.add_argument("--jobs", type=_jobs_arg, default=os.cpu_count() or 1,
                       help="worker count (default: available parallelism)")

    p = sub.add_parser("check", help="diagnose a .qnd file")
    p.add_argument("path")
    budget_opt(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("build", help="expand a .wdg file into a .qnd file")
    p.add_argument("path")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser("present", help="extract a digraph presentation")
    p.add_argument("path")
    p.add_argument("--out")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.set_defaults(handler=cmd_present)

    p = sub.add_parser("iso", help="test two files for isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    budget_opt(p)
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("classify", help="catalog one order")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    jobs_opt(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("table", help="class counts for orders 1..max")
    p.add_argument("--max", type=int, default=MAX_CLASSIFY_ORDER)
    jobs_opt(p)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("count", help="closed-form and Burnside counts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--two-p", type=int, metavar="P",
                       help="classes of order 2p for an odd prime p")
    group.add_argument("--burnside", type=int, nargs=2, metavar=("P", "Q"),
                       help="orbit count of weight lists over Z_q at |X| = p")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("qid", help="the icosidodecahedron quandle")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--export", metavar="DIR")
    budget_opt(p)
    p.set_defaults(handler=cmd_qid)

    return top


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.handler(args)
    except (FormatError, NotInClass, CapExceeded, BudgetExceeded, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
