"""Command-line entry point: ``maxcross <command> ...``.

Exit status is 0 on success, 1 when an input violates a precondition
(degenerate points, malformed files, ...) and 2 on usage errors.  The worker
count defaults to $MAXCROSS_WORKERS, or 1.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import crossing_oracle, gale, hypergraph, moment_curve, ordertype_db, random_drawing, theorem1
from .exact_geom import PointConfiguration


def _read(path):
    with open(path) as fh:
        return fh.read()


def _write_or_print(text, path):
    if path:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_vec(v):
    return " ".join(str(c) for c in v)


def _default_workers():
    # a string default goes through type=int, so a bad value is a usage error
    return os.environ.get("MAXCROSS_WORKERS", "1")


# -- ordertypes ------------------------------------------------------------

def cmd_ordertypes_convert(args):
    entries = ordertype_db.load_db(args.input)
    _write_or_print(ordertype_db.format_point_sets(entries), args.output)


def cmd_ordertypes_validate(args):
    report = ordertype_db.validate_db(ordertype_db.load_db(args.db))
    sys.stdout.write(report.as_text())
    return 0 if report.ok else 1


# -- K_8^4 bound -------------------------------------------------------------

def cmd_theorem1_verify(args):
    entries = ordertype_db.load_db(args.db)
    report = theorem1.verify_theorem1(entries, workers=args.workers)
    os.makedirs(args.out_dir, exist_ok=True)
    theorem1.write_summary(report, os.path.join(args.out_dir, "balanced_set_max_color.txt"))
    if args.csv_compat:
        theorem1.write_entry_csvs(report, os.path.join(args.out_dir, "feasible_point_sets"))
    print(f"entries = {len(report.results)}")
    print(f"argmax entries = {len(report.argmax_entries)} "
          f"(all convex position: {report.argmax_all_convex})")
    print(f"argmax colorings = {', '.join(report.argmax_colorings)}")
    print(report.summary_line())


def cmd_feasible_sets(args):
    entries = ordertype_db.load_db(args.db)
    if not 1 <= args.entry <= len(entries):
        raise ValueError(f"entry must be in 1..{len(entries)}")
    result = theorem1.analyze_entry(entries[args.entry - 1])
    sys.stdout.write(theorem1.entry_csv(result, with_colors=args.csv_compat))


# -- gale ------------------------------------------------------------------

def _load_points(path):
    drawing = crossing_oracle.parse_drawing(_read(path))
    return PointConfiguration(drawing.uniformity, drawing.positions)


def cmd_gale_transform(args):
    vc = gale.gale_transform(_load_points(args.points))
    print(f"{vc.dim} {len(vc)}")
    for i, v in enumerate(vc.vectors):
        print(f"{i} {_fmt_vec(v)}")


def cmd_gale_diagram(args):
    vc = gale.gale_transform(_load_points(args.points))
    w = gale.balanced_split_direction(vc)
    dg = gale.affine_gale_diagram(vc, w)
    print(f"direction {_fmt_vec(w)}")
    for i, (p, c) in enumerate(zip(dg.points, dg.colors)):
        print(f"{i} {_fmt_vec(p)} {c}")


def cmd_gale_crossings(args):
    print(gale.count_crossing_pairs(_load_points(args.points)))


# -- formulas --------------------------------------------------------------

def cmd_cm(args):
    print(moment_curve.cm_formula(args.d))


def cmd_ctilde(args):
    print(moment_curve.ctilde(args.d))


def cmd_max_value(args):
    if args.d not in (3, 4):
        if not args.conjecture:
            raise ValueError(f"d={args.d}: value is conjectural; rerun with --conjecture")
        print(f"warning: d={args.d} value is conjectured, not proven", file=sys.stderr)
    print(moment_curve.knd_max_value(args.n, args.d, conjecture=args.conjecture))


# -- drawings and counts ---------------------------------------------------

def cmd_draw_moment(args):
    h = hypergraph.parse(_read(args.hypergraph))
    _write_or_print(moment_curve.serialize_drawing(moment_curve.identity_drawing(h)), args.output)


def cmd_draw_random(args):
    drawing = crossing_oracle.random_general_position(args.n, args.d, args.seed, args.bound)
    _write_or_print(crossing_oracle.serialize_drawing(drawing), args.output)


def cmd_count_crossings(args):
    h = hypergraph.parse(_read(args.hypergraph))
    text = _read(args.drawing)
    if args.geometric:
        report = crossing_oracle.count_crossings_geometric(
            h, crossing_oracle.parse_drawing(text), witnesses=args.witnesses)
    else:
        report = moment_curve.count_crossings(
            h, moment_curve.parse_drawing(text), witnesses=args.witnesses)
    print(report.total)
    for e, f in report.witnesses or ():
        print(f"{_fmt_vec(e)} | {_fmt_vec(f)}")


def cmd_theorem2_verify(args):
    ph = hypergraph.complete_dpartite(args.d, args.n)
    got = moment_curve.count_crossings(ph.base, moment_curve.theorem2_drawing(args.d, args.n)).total
    want = moment_curve.theorem2_value(args.d, args.n)
    best = 0
    for k in range(args.trials):
        drawing = random_drawing.random_moment_drawing(ph.base, args.seed, k)
        best = max(best, moment_curve.count_crossings(ph.base, drawing).total)
    print(f"theorem2 drawing = {got}; formula = {want}; best of {args.trials} random = {best}")
    return 0 if got == want and best <= want else 1


def cmd_gadget(args):
    h = hypergraph.parse(_read(args.hypergraph))
    g = hypergraph.build_gadget(h)
    print(f"# t = {g.t}, apex = {g.apex}", file=sys.stderr)
    _write_or_print(hypergraph.serialize(g.gadget), args.output)


def cmd_gen_complete(args):
    _write_or_print(hypergraph.serialize(hypergraph.complete(args.n, args.d)), args.output)


def cmd_gen_dpartite(args):
    _write_or_print(hypergraph.serialize(hypergraph.complete_dpartite(args.d, args.n).base),
                    args.output)


def cmd_random_draw(args):
    h = hypergraph.parse(_read(args.hypergraph))
    report = random_drawing.monte_carlo(h, args.trials, args.seed, workers=args.workers)
    ok, witness = random_drawing.guarantee_check(report)
    sys.stdout.write(report.as_text())
    print(f"guarantee = {'met' if ok else 'not met'}")
    if args.csv:
        random_drawing.write_counts_csv(report, args.csv)
    if args.witness and ok:
        _write_or_print(moment_curve.serialize_drawing(witness.drawing), args.witness)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxcross", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def workers(sp):
        sp.add_argument("--workers", type=int, default=_default_workers())

    def group(name, help):
        g = sub.add_parser(name, help=help).add_subparsers(dest="action", required=True)
        return g

    ot = group("ordertypes", "order-type database utilities")
    sp = ot.add_parser("convert", help="hex database -> decimal point lists")
    sp.add_argument("--input", help="hex database (default: bundled)")
    sp.add_argument("--output", help="output file (default: stdout)")
    sp.set_defaults(func=cmd_ordertypes_convert)
    sp = ot.add_parser("validate", help="check count, ranges and general position")
    sp.add_argument("--db")
    sp.set_defaults(func=cmd_ordertypes_validate)

    t1 = group("theorem1", "balanced-partition maximum over all order types")
    sp = t1.add_parser("verify")
    sp.add_argument("--db", help="hex database (default: bundled)")
    sp.add_argument("--out-dir", default=".")
    sp.add_argument("--csv-compat", action="store_true",
                    help="also write one table per order type")
    workers(sp)
    sp.set_defaults(func=cmd_theorem1_verify)

    sp = sub.add_parser("feasible-sets", help="separable 2- and 4-sets of one entry")
    sp.add_argument("--db")
    sp.add_argument("--entry", type=int, default=1)
    sp.add_argument("--csv-compat", action="store_true", help="append coloring columns")
    sp.set_defaults(func=cmd_feasible_sets)

    ga = group("gale", "Gale transforms and diagrams")
    for name, func in (("transform", cmd_gale_transform), ("diagram", cmd_gale_diagram),
                       ("crossings", cmd_gale_crossings)):
        sp = ga.add_parser(name)
        sp.add_argument("--points", required=True, help="geometric drawing file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("cm", help="crossings of K_2d^d on the moment curve")
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_cm)
    sp = sub.add_parser("ctilde", help="approximation constant")
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_ctilde)
    sp = sub.add_parser("max-value", help="maximum crossings of K_n^d")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--conjecture", action="store_true")
    sp.set_defaults(func=cmd_max_value)

    dr = group("draw", "produce drawings")
    sp = dr.add_parser("moment", help="identity moment-curve drawing of a hypergraph")
    sp.add_argument("--hypergraph", required=True)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_draw_moment)
    sp = dr.add_parser("random", help="random general-position integer points")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_draw_random)

    sp = sub.add_parser("count-crossings")
    sp.add_argument("--hypergraph", required=True)
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--geometric", action="store_true",
                    help="drawing holds coordinates (default: moment-curve parameters)")
    sp.add_argument("--witnesses", action="store_true")
    sp.set_defaults(func=cmd_count_crossings)

    t2 = group("theorem2", "complete d-partite hypergraphs")
    sp = t2.add_parser("verify")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, required=True)
    sp.set_defaults(func=cmd_theorem2_verify)

    sp = sub.add_parser("gadget", help="append the apex star edges")
    sp.add_argument("--hypergraph", required=True)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_gadget)

    gen = group("gen", "generate hypergraphs")
    sp = gen.add_parser("complete")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_gen_complete)
    sp = gen.add_parser("dpartite")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_gen_dpartite)

    sp = sub.add_parser("random-draw", help="Monte Carlo over random moment-curve orders")
    sp.add_argument("--hypergraph", required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--csv", help="write per-trial counts here")
    sp.add_argument("--witness", help="write the best drawing here")
    workers(sp)
    sp.set_defaults(func=cmd_random_draw)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        print("maxcross: --workers must be at least 1", file=sys.stderr)
        return 2
    try:
        status = args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"maxcross: error: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
