"""
Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain error or a
failed check, 3 size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration, homology, hopf, koszul
from .expr import evaluate, format_comb
from .forests import ParseError, enumerate_forests, enumerate_trees, render, to_json
from .lincomb import BoundError, DomainError, LinComb
from .operad import compose, dual_compose

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_BOUND = 0, 1, 2, 3

EXPR_HELP = """\
forest expressions:
  forests     o, o[l:o,r:o], "o o[r:o]" (trees separated by blanks), 1
  A * B       concatenation
  A |> B      left graft (A grafted under the first root of B)
  A <| B      right graft (B grafted under the last root of A)
  F @ (A,..)  operad composition, one argument per vertex of F
  2 A - B     integer combinations
precedence: @ > grafts > * > sums; all left-associative
"""


class UsageError(Exception):
    pass


def _comb_json(x: LinComb):
    return [{"coeff": c, "forest": render(f), "tree": to_json(f)}
            for f, c in sorted(x.items(), key=lambda kv: render(kv[0]))]


def _tensor_rows(t: LinComb):
    return sorted(((render(a), render(b), c) for (a, b), c in t),
                  key=lambda r: (len(r[0]), r[0], r[1]))


def _emit(ns, text, data):
    if ns.json:
        print(json.dumps(data, ensure_ascii=False, indent=None))
    else:
        print(text)


def _comb_out(ns, x, **extra):
    data = {"result": format_comb(x), "terms": _comb_json(x)}
    data.update(extra)
    _emit(ns, format_comb(x), data)


# -- subcommands -----------------------------------------------------------

def cmd_eval(args):
    _comb_out(args, evaluate(args.expr), expr=args.expr)


def cmd_coproduct(args):
    x = evaluate(args.expr)
    if args.ass:
        t = hopf.reduced_coproduct_ass(x) if args.reduced else hopf.coproduct_ass(x)
    else:
        t = hopf.reduced_coproduct(x) if args.reduced else hopf.coproduct(x)
    rows = _tensor_rows(t)
    text = "\n".join("%d\t%s\t%s" % (c, a, b) for a, b, c in rows) or "0"
    _emit(args, text, {"expr": args.expr, "kind": "ass" if args.ass else "cut",
                       "reduced": args.reduced,
                       "terms": [{"coeff": c, "left": a, "right": b} for a, b, c in rows]})


def cmd_antipode(args):
    _comb_out(args, hopf.antipode(evaluate(args.expr)), expr=args.expr)


def cmd_dagger(args):
    _comb_out(args, hopf.dagger_elt(evaluate(args.expr)), expr=args.expr)


def cmd_pair(args):
    v = hopf.pairing(evaluate(args.left), evaluate(args.right))
    _emit(args, str(v), {"left": args.left, "right": args.right, "value": v})


def cmd_gram(args):
    basis = enumerate_forests(args.degree, bound=hopf.GRAM_BOUND)
    m = hopf.gram_matrix(args.degree)
    names = [render(f) for f in basis]
    lines = ["\t" + "\t".join(names)]
    lines += [names[i] + "\t" + "\t".join(map(str, row)) for i, row in enumerate(m)]
    from .linalg import rank
    r = rank(m)
    lines.append("# rank %d of %d" % (r, len(m)))
    _emit(args, "\n".join(lines),
          {"degree": args.degree, "basis": names, "matrix": m, "rank": r})


def cmd_compose(args):
    f = evaluate(args.op)
    ins = [evaluate(a) for a in args.args]
    x = dual_compose(f, ins) if args.dual else compose(f, ins)
    _comb_out(args, x, op=args.op, args=args.args, dual=args.dual)


def cmd_count(args):
    n = args.upto
    if args.which == "bt":
        trees, forests = enumeration.tree_counts(n), enumeration.forest_counts(n)
    else:
        trees, forests = enumeration.dual_counts(n)
    data = {"which": args.which, "upto": n, "trees": trees, "forests": forests}
    if args.enumerate:
        bound = 8 if args.which == "bt" else 10
        if n > bound:
            raise BoundError("enumeration cross-check is limited to n <= %d" % bound)
        fs = [enumerate_forests(k, dual_only=args.which == "dual") for k in range(1, n + 1)]
        data["enumerated_forests"] = [len(x) for x in fs]
        data["enumerated_trees"] = [sum(1 for g in x if len(g) == 1) for x in fs]
        data["match"] = (data["enumerated_forests"] == forests
                         and data["enumerated_trees"] == trees)
    text = " ".join(map(str, forests))
    if args.trees:
        text = " ".join(map(str, trees)) + "\n" + text
    _emit(args, text, data)
    if args.enumerate and not data["match"]:
        return EXIT_DOMAIN


def cmd_series(args):
    r = enumeration.inverse_identity_check(args.order)
    ok = r["inverse"] and r["cubic"]
    text = ("F_BG(-F_BG!(-x)) = x mod x^%d: %s\nT^3 - 2T^2 + T = x mod x^%d: %s"
            % (args.order + 1, "ok" if r["inverse"] else "FAIL",
               args.order + 1, "ok" if r["cubic"] else "FAIL"))
    _emit(args, text, r)
    return EXIT_OK if ok else EXIT_DOMAIN


def _mono_json(x):
    return [{"coeff": c, "monomial": koszul.fmt(m)}
            for m, c in sorted(x.items(), key=lambda kv: koszul.fmt(kv[0], False))]


def cmd_rewrite(args):
    try:
        x = koszul.parse_monomials(args.expr)
    except koszul.MonoParseError as e:
        raise UsageError(str(e)) from None
    sysm = koszul.get_system(args.system)
    chain = sysm.chain(x)
    nf = chain[-1]
    lines = [koszul.fmt_comb(c) for c in chain] if args.chain else [koszul.fmt_comb(nf)]
    _emit(args, "\n".join(lines),
          {"system": sysm.name, "input": koszul.fmt_comb(x),
           "normal_form": _mono_json(nf),
           "chain": [koszul.fmt_comb(c) for c in chain]})


def cmd_confluence(args):
    r = koszul.confluence_report(args.system)
    shown = [cp for cp in r["pairs"] if cp["nontrivial"] or args.all]
    lines = []
    for cp in shown:
        m = cp["monomial"]
        lines.append("%s  [%s | %s]  %s" % (
            koszul.fmt(m), koszul.fmt_pattern(cp["rules"][0]),
            koszul.fmt_pattern(cp["rules"][1]),
            "joinable" if cp["joinable"] else "NOT JOINABLE"))
        for side, ch in zip("ab", cp["chains"]):
            lines.append("  %s: %s" % (side, " -> ".join(koszul.fmt_comb(c) for c in ch)))
    term = r["termination"]
    lines.append("# system %s: %d overlaps, %d nontrivial, %s" % (
        r["system"], len(r["pairs"]), len(r["nontrivial"]),
        "all joinable" if r["all_joinable"] else "some NOT joinable"))
    lines.append("# listed critical monomials present: %d of %d" % (
        sum(r["listed_present"]), len(koszul.LISTED_CRITICAL)))
    if term:
        lines.append("# terminates: path order with precedence %s, status %s" % (
            " < ".join(term["precedence"]),
            ", ".join("%s:%s" % kv for kv in term["status"].items())))
    else:
        lines.append("# no path order found; rewrite graph acyclic up to arity %d"
                     % r["acyclic_up_to"])
    data = {
        "system": r["system"],
        "all_joinable": r["all_joinable"],
        "overlaps": len(r["pairs"]),
        "nontrivial": [koszul.fmt(m) for m in r["nontrivial"]],
        "listed_present": r["listed_present"],
        "termination": term,
        "acyclic_up_to": r["acyclic_up_to"],
        "pairs": [{
            "monomial": koszul.fmt(cp["monomial"]),
            "rules": [koszul.fmt_pattern(p) for p in cp["rules"]],
            "nontrivial": cp["nontrivial"],
            "joinable": cp["joinable"],
            "chains": [[koszul.fmt_comb(c) for c in ch] for ch in cp["chains"]],
        } for cp in shown],
    }
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if r["all_joinable"] else EXIT_DOMAIN


def cmd_normal_count(args):
    v = koszul.count_normal_forms(args.arity, args.system)
    _emit(args, str(v), {"arity": args.arity, "system": koszul.get_system(args.system).name,
                         "count": v})


def cmd_homology(args):
    r = homology.homology_dims(args.weight)
    lines = ["n\tarity\tdim_chain\trank_out\trank_in\tdim_H"]
    for row in r["components"]:
        lines.append("%d\t%d\t%d\t%d\t%d\t%d" % (
            row["n"], row["arity"], row["dim_chain"], row["rank_d_out"],
            row["rank_d_in"], row["dim_homology"]))
    lines.append("# euler characteristic %d" % r["euler_characteristic"])
    _emit(args, "\n".join(lines), r)


def cmd_enumerate(args):
    if args.trees:
        fs = [(t,) for t in enumerate_trees(args.degree)]
    else:
        fs = enumerate_forests(args.degree, dual_only=args.dual)
    names = [render(f) for f in fs]
    _emit(args, "\n".join(names), {"degree": args.degree, "dual": args.dual,
                                   "count": len(names), "forests": names})


def cmd_report(args):
    from .report import write_report
    files = write_report(args.out, max_degree=args.max_degree,
                         max_weight=args.max_weight)
    _emit(args, "\n".join(files), {"out": args.out, "files": files})


# -- parser ----------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="bigraft",
        description="Exact computations with l/r-decorated planar forests.",
        epilog=EXPR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", metavar="COMMAND")

    def add(name, func, help):
        sp = sub.add_parser(name, help=help, epilog=EXPR_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate a forest expression")
    sp.add_argument("expr")

    sp = add("coproduct", cmd_coproduct, "cut coproduct (or deconcatenation with --ass)")
    sp.add_argument("expr")
    sp.add_argument("--ass", action="store_true", help="deconcatenation coproduct")
    sp.add_argument("--reduced", action="store_true", help="drop the 1 (x) x and x (x) 1 terms")

    sp = add("antipode", cmd_antipode, "antipode of an element")
    sp.add_argument("expr")

    sp = add("dagger", cmd_dagger, "reverse order and swap l/r")
    sp.add_argument("expr")

    sp = add("pair", cmd_pair, "the recursive pairing <F, G>")
    sp.add_argument("left")
    sp.add_argument("right")

    sp = add("gram", cmd_gram, "Gram matrix of the pairing in one degree")
    sp.add_argument("--degree", type=int, required=True)

    sp = add("compose", cmd_compose, "operad composition F o (A1, ..., An)")
    sp.add_argument("op")
    sp.add_argument("args", nargs="+")
    sp.add_argument("--dual", action="store_true", help="compose in the dual operad")

    sp = add("count", cmd_count, "tree and forest counts")
    sp.add_argument("--which", choices=["bt", "dual"], default="bt")
    sp.add_argument("--upto", type=int, required=True)
    sp.add_argument("--trees", action="store_true", help="also print tree counts")
    sp.add_argument("--enumerate", action="store_true",
                    help="cross-check against explicit enumeration")

    sp = add("series-check", cmd_series, "generating-series identities")
    sp.add_argument("--order", type=int, default=10)

    systems = sorted(koszul.SYSTEMS)
    sp = add("rewrite", cmd_rewrite, "normal form of an operad monomial combination")
    sp.add_argument("expr")
    sp.add_argument("--system", choices=systems, default="bgdual")
    sp.add_argument("--chain", action="store_true", help="show every rewriting step")

    sp = add("confluence", cmd_confluence, "critical pairs of a rewriting system")
    sp.add_argument("--system", choices=systems, default="bgdual")
    sp.add_argument("--all", action="store_true", help="also show monomial-rule overlaps")

    sp = add("normal-count", cmd_normal_count, "count normal monomials of an arity")
    sp.add_argument("--arity", type=int, required=True)
    sp.add_argument("--system", choices=systems, default="bgdual")

    sp = add("homology", cmd_homology, "homology of the free one-generator algebra")
    sp.add_argument("--weight", type=int, required=True)

    sp = add("enumerate", cmd_enumerate, "list the forests of a degree")
    sp.add_argument("--degree", type=int, required=True)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--dual", action="store_true", help="only the dual basis")
    g.add_argument("--trees", action="store_true", help="only trees")

    sp = add("report", cmd_report, "write CSV tables and PNG figures")
    sp.add_argument("--out", required=True)
    sp.add_argument("--max-degree", type=int, default=3)
    sp.add_argument("--max-weight", type=int, default=4)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        code = args.func(args)
    except (ParseError, UsageError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except BoundError as e:
        print("bound exceeded: %s" % e, file=sys.stderr)
        return EXIT_BOUND
    except DomainError as e:
        print("domain error: %s" % e, file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
