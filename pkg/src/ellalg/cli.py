"""Command-line interface: fixtures, ad-hoc computations, and the
verification suite with JSON reports."""

from __future__ import annotations

import argparse
import json
import sys

from . import blowup as bl
from .config import builtin_names, load_fixture
from .hilbert import blowup_series_report, dim_T, ideal_profile, quotient_profile
from .layerings import (
    absorb_divisor,
    absorb_iterated,
    clipped_layering,
    empty_layering,
    layering_max,
    layering_min,
    m_layering,
    m_left_layering,
    parse_layering,
    q_layering,
    q_left_layering,
    relative_point_layering,
    row_deleted_layering,
)
from .verify import run_all


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return repr(obj)


def _fixture(args):
    return load_fixture(args.config if args.config else args.fixture)


def _emit(args, payload):
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True)
    if getattr(args, "report", None):
        with open(args.report, "w") as fh:
            fh.write(text + "\n")
        print("report written to %s" % args.report)
    else:
        print(text)


def cmd_curve_info(args):
    fx = _fixture(args)
    tr = fx.translation
    payload = {
        "fixture": fx.config.name,
        "field": fx.config.field,
        "discriminant": repr(fx.curve.discriminant()),
        "alpha": repr(tr.alpha),
        "alpha_order": tr.order if tr.order else "infinite (torsion bound certified)",
        "translation_window": tr.window,
        "orbit_window": tr.orbit_window,
        "ample_degree": fx.mu,
        "points": {k: repr(v) for k, v in fx.points.items()},
        "grid": [fx.config.grid_lo, fx.config.grid_lo + fx.config.grid_size - 1],
    }
    _emit(args, payload)
    return 0


def cmd_rr(args):
    fx = _fixture(args)
    d = fx.divisor(args.divisor)
    sp = fx.ctx.rr_basis(d)
    payload = {
        "divisor": repr(d),
        "degree": d.degree,
        "dim": sp.dim,
        "basis": [repr(f) for f in sp.basis],
    }
    _emit(args, payload)
    return 0


def cmd_tcr(args):
    fx = _fixture(args)
    ctx = fx.ctx
    if args.tcr_cmd == "dim":
        sp = ctx.graded_piece(args.n)
        _emit(args, {"degree": args.n, "dim": sp.dim})
        return 0
    a, b = args.a, args.b
    va, vb = ctx.graded_piece(a), ctx.graded_piece(b)
    target = ctx.graded_piece(a + b)
    equal, contained, rank = ctx.star_equals(va, vb, target)
    _emit(args, {
        "degrees": [a, b],
        "product_rank": rank,
        "target_dim": target.dim,
        "fills_target": equal,
    })
    return 0


def cmd_layering(args):
    fx = _fixture(args)
    tr = fx.translation

    def parse(expr, side="right"):
        return parse_layering(expr, tr, fx.points, side)

    if args.layering_cmd == "apply":
        z = parse(args.layering) if args.layering else empty_layering(fx.curve)
        d = fx.divisor(args.divisor)
        out = absorb_divisor(tr, d, z)
        _emit(args, {"result": [repr(l) for l in out.layers]})
    elif args.layering_cmd == "closed":
        z = parse(args.layering) if args.layering else empty_layering(fx.curve)
        d = fx.divisor(args.divisor)
        out = absorb_iterated(tr, d, args.n, z)
        _emit(args, {"result": [repr(l) for l in out.layers]})
    elif args.layering_cmd == "lattice":
        a = parse(args.a)
        b = parse(args.b)
        _emit(args, {
            "max": [repr(l) for l in layering_max(tr, a, b).layers],
            "min": [repr(l) for l in layering_min(tr, a, b).layers],
        })
    elif args.layering_cmd == "standard":
        kind = args.kind
        if kind == "M":
            out = m_layering(tr, args.k, fx.divisor(args.divisor))
        elif kind == "Mp":
            out = m_left_layering(tr, args.k, fx.divisor(args.divisor))
        elif kind == "Q":
            out = q_layering(tr, args.k, args.r, args.d, fx.points[args.point])
        elif kind == "Qp":
            out = q_left_layering(tr, args.k, args.r, args.d, fx.points[args.point])
        elif kind == "c":
            out = row_deleted_layering(tr, args.r, args.k, fx.points[args.point])
        elif kind == "build":
            out = clipped_layering(tr, fx.divisor(args.divisor), fx.divisor(args.y), args.k)
        elif kind == "relpoint":
            out = relative_point_layering(tr, fx.divisor(args.divisor), fx.points[args.point], args.k)
        else:
            raise SystemExit("unknown standard kind %r" % kind)
        _emit(args, {"kind": kind, "layers": [repr(l) for l in out.layers]})
    return 0


def cmd_hilbert(args):
    fx = _fixture(args)
    z = parse_layering(args.layering, fx.translation, fx.points)
    prof = quotient_profile(fx.ctx, z, args.upto)
    ideal = ideal_profile(fx.ctx, z, args.upto)
    table = []
    for n in range(args.upto + 1):
        q, i = prof[n], ideal[n]
        table.append({
            "n": n,
            "dim_T": dim_T(fx.mu, n),
            "quotient": q.lo if q.exact else [q.lo, q.hi],
            "ideal": i.lo if i.exact else [i.lo, i.hi],
            "status": q.status if not q.exact else "exact",
        })
    _emit(args, {"layering": [repr(l) for l in z.layers], "table": table})
    return 0


def cmd_blowup(args):
    fx = _fixture(args)
    ctx = fx.ctx
    sub = args.blowup_cmd
    if sub == "series":
        rep = blowup_series_report(ctx, fx.divisor(args.divisor), args.upto, shelf_levels=(1,))
        _emit(args, rep)
        return 0
    if sub == "generation":
        rep = bl.generation_check(ctx, fx.divisor(args.divisor), args.upto)
    elif sub == "iterate":
        rep = bl.iterate_check(ctx, fx.divisor(args.c), fx.divisor(args.e), args.upto)
    elif sub == "line":
        rep = bl.exceptional_filtration(ctx, fx.divisor(args.divisor), fx.points[args.point], args.upto)
    elif sub == "build":
        rep = bl.build_module_check(ctx, fx.divisor(args.divisor), fx.divisor(args.y), args.upto)
    elif sub == "qfamily":
        rep = bl.q_family_checks(ctx, fx.points[args.point], args.upto)
    elif sub == "leftright":
        rep = bl.left_right_checks(ctx, fx.divisor(args.divisor), args.k, args.n)
    elif sub == "c1c2":
        rep = bl.point_space_shadow(ctx, fx.divisor(args.divisor), fx.points[args.point], args.k)
    elif sub == "mult":
        rep = bl.mult_equality_check(ctx, fx.divisor(args.divisor), args.k, args.l, args.m, args.n)
    else:
        raise SystemExit("unknown blowup subcommand %r" % sub)
    _emit(args, rep)
    return 0 if rep["ok"] else 1


def cmd_verify(args):
    name = args.config if args.config else args.fixture
    fx3 = load_fixture(name)
    sibling = args.sibling
    if sibling is None:
        if "mu3" in name:
            sibling = name.replace("mu3", "mu9")
        elif "mu9" in name:
            sibling = name.replace("mu9", "mu3")
        else:
            sibling = name
    fx9 = load_fixture(sibling) if sibling != name else fx3
    level = "full" if fx3.field.char == 0 else "mirror"
    if args.level:
        level = args.level
    report = run_all(fx3, fx9, level, jobs=args.jobs)
    _emit(args, report)
    for c in report["checks"]:
        print("%-28s %s" % (c["id"], "pass" if c["ok"] else "FAIL"), file=sys.stderr)
    return 0 if report["passed"] else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ellalg",
        description="Exact twisted coordinate ring and blowup-layering computations",
    )
    ap.add_argument("--fixture", default="q-mu3", choices=builtin_names(),
                    help="built-in fixture name")
    ap.add_argument("--config", help="path to a JSON config file (overrides --fixture)")
    ap.add_argument("--report", help="write the JSON payload to this path")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("curve", help="curve and fixture information")
    pc = p.add_subparsers(dest="curve_cmd", required=True)
    pc.add_parser("info").set_defaults(func=cmd_curve_info)

    p = sub.add_parser("rr", help="Riemann-Roch bases")
    pr = p.add_subparsers(dest="rr_cmd", required=True)
    basis = pr.add_parser("basis")
    basis.add_argument("--divisor", required=True)
    basis.set_defaults(func=cmd_rr)

    p = sub.add_parser("tcr", help="graded ring pieces and products")
    pt = p.add_subparsers(dest="tcr_cmd", required=True)
    dimp = pt.add_parser("dim")
    dimp.add_argument("--n", type=int, required=True)
    dimp.set_defaults(func=cmd_tcr)
    multp = pt.add_parser("mult")
    multp.add_argument("--a", type=int, required=True)
    multp.add_argument("--b", type=int, required=True)
    multp.set_defaults(func=cmd_tcr)

    p = sub.add_parser("layering", help="layering calculus")
    pl = p.add_subparsers(dest="layering_cmd", required=True)
    ap_apply = pl.add_parser("apply")
    ap_apply.add_argument("--divisor", required=True)
    ap_apply.add_argument("--layering", default="")
    ap_apply.set_defaults(func=cmd_layering)
    ap_closed = pl.add_parser("closed")
    ap_closed.add_argument("--divisor", required=True)
    ap_closed.add_argument("--layering", default="")
    ap_closed.add_argument("--n", type=int, default=1)
    ap_closed.set_defaults(func=cmd_layering)
    ap_lat = pl.add_parser("lattice")
    ap_lat.add_argument("--a", required=True)
    ap_lat.add_argument("--b", required=True)
    ap_lat.set_defaults(func=cmd_layering)
    ap_std = pl.add_parser("standard")
    ap_std.add_argument(
        "--kind", required=True,
        choices=["M", "Mp", "Q", "Qp", "c", "build", "relpoint"],
        help="family kind; k is the depth (row index for kind c, degree "
             "for kinds build/relpoint), r doubles as the deleted row for c",
    )
    ap_std.add_argument("--k", type=int, required=True)
    ap_std.add_argument("--r", type=int, default=0)
    ap_std.add_argument("--d", type=int, default=1)
    ap_std.add_argument("--divisor", default="p")
    ap_std.add_argument("--y", default="0")
    ap_std.add_argument("--point", default="p")
    ap_std.set_defaults(func=cmd_layering)

    p = sub.add_parser("hilbert", help="dimension profiles of layering ideals")
    ph = p.add_subparsers(dest="hilbert_cmd", required=True)
    ideal = ph.add_parser("ideal")
    ideal.add_argument("--layering", required=True)
    ideal.add_argument("--upto", type=int, default=8)
    ideal.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("blowup", help="blowup model checks")
    pb = p.add_subparsers(dest="blowup_cmd", required=True)
    series = pb.add_parser("series")
    series.add_argument("--divisor", required=True)
    series.add_argument("--upto", type=int, default=8)
    series.set_defaults(func=cmd_blowup)
    gen = pb.add_parser("generation")
    gen.add_argument("--divisor", required=True)
    gen.add_argument("--upto", type=int, default=6)
    gen.set_defaults(func=cmd_blowup)
    itp = pb.add_parser("iterate")
    itp.add_argument("--c", required=True)
    itp.add_argument("--e", required=True)
    itp.add_argument("--upto", type=int, default=6)
    itp.set_defaults(func=cmd_blowup)
    line = pb.add_parser("line")
    line.add_argument("--divisor", default="0")
    line.add_argument("--point", default="p")
    line.add_argument("--upto", type=int, default=8)
    line.set_defaults(func=cmd_blowup)
    build = pb.add_parser("build")
    build.add_argument("--divisor", required=True)
    build.add_argument("--y", required=True)
    build.add_argument("--upto", type=int, default=6)
    build.set_defaults(func=cmd_blowup)
    qf = pb.add_parser("qfamily")
    qf.add_argument("--point", default="p")
    qf.add_argument("--upto", type=int, default=7)
    qf.set_defaults(func=cmd_blowup)
    lr = pb.add_parser("leftright")
    lr.add_argument("--divisor", required=True)
    lr.add_argument("--k", type=int, required=True)
    lr.add_argument("--n", type=int, required=True)
    lr.set_defaults(func=cmd_blowup)
    shadow = pb.add_parser("c1c2")
    shadow.add_argument("--divisor", default="0")
    shadow.add_argument("--point", default="p")
    shadow.add_argument("--k", type=int, default=2)
    shadow.set_defaults(func=cmd_blowup)
    multc = pb.add_parser("mult")
    multc.add_argument("--divisor", required=True)
    multc.add_argument("--k", type=int, required=True)
    multc.add_argument("--l", type=int, required=True)
    multc.add_argument("--m", type=int, required=True)
    multc.add_argument("--n", type=int, required=True)
    multc.set_defaults(func=cmd_blowup)

    p = sub.add_parser("verify", help="run the verification suite")
    pv = p.add_subparsers(dest="verify_cmd", required=True)
    allp = pv.add_parser("all")
    allp.add_argument("--sibling", help="fixture for the second ample degree")
    allp.add_argument("--level", choices=["full", "mirror"])
    allp.add_argument("--jobs", type=int, default=1,
                      help="worker processes for independent criteria")
    allp.set_defaults(func=cmd_verify)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
