"""Command-line front end.

Subcommands: povm (build/validate/trange), eval (one-state report), sweep
(parameter sweep to CSV), threshold (bisection of a curve crossing) and
reproduce (the canned figure/analysis datasets, each written as CSV plus a
rendered PNG). CSV files use 17-significant-digit decimals, Unix newlines and
are byte-identical across runs; sweep points are evaluated concurrently
(capped by SNEST_THREADS) and written in ascending order.
"""

import argparse
import concurrent.futures
import json
import math
import os
import sys

import numpy as np

from .basis import gellmann_basis, group_basis, load_grouping
from .criteria import (full_report, klr_constants, schmidt_bound,
                       realignment_sn_bound, isotropic_norm_closed_form,
                       fidelity_implication_check, fidelity_isotropic_threshold,
                       correlation_matrix)
from .errors import (DimensionMismatchError, InvalidStateError, ParameterError,
                     SnestError)
from .matkernel import trace_norm
from .povm import SymmetricPovm, build_h, build_povm, t_range, validate_povm, x_of_t
from .states import (DensityMatrix, example1_state, example2_state,
                     example4_state, isotropic)

DEFAULT_FAMILY = {2: (3, 2, "sequential"), 3: (8, 2, "appendix-B"),
                  4: (5, 4, "appendix-A")}
GALLERIES = ("example1", "example2", "isotropic", "example4")
FMT = "%.17g"


def _fmt(value):
    return FMT % value


def _thread_cap():
    env = os.environ.get("SNEST_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ParameterError(f"SNEST_THREADS = {env!r} is not an integer")
        if n < 1:
            raise ParameterError("SNEST_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def _build_family(d, N, M, scheme, t):
    return build_povm(group_basis(gellmann_basis(d), N, M, scheme), t)


def _measurement_from_args(args, side, d):
    n = getattr(args, f"N{side}")
    m = getattr(args, f"M{side}")
    scheme = getattr(args, f"scheme{side}")
    t = getattr(args, f"t{side}")
    if n is None or m is None:
        if d not in DEFAULT_FAMILY:
            raise ParameterError(
                f"no default measurement family for dimension {d}; "
                f"pass --N{side}/--M{side}/--scheme{side}")
        n, m, default_scheme = DEFAULT_FAMILY[d]
        scheme = scheme or default_scheme
    return _build_family(d, n, m, scheme or "sequential", t)


def _gallery_factory(args):
    """Returns (fixed-parameter dict, function param-name -> state factory)."""
    g = args.gallery
    if g == "example1":
        fixed = {"tau": args.tau if args.tau is not None else 0.9,
                 "q": args.q if args.q is not None else 0.5}
        maker = lambda ps: example1_state(ps["tau"], ps["q"])
    elif g == "example2":
        fixed = {"p": args.p if args.p is not None else 0.5}
        maker = lambda ps: example2_state(ps["p"])
    elif g == "isotropic":
        fixed = {"d": args.d if args.d is not None else 3,
                 "v": args.v if args.v is not None else 0.5}
        maker = lambda ps: isotropic(int(ps["d"]), ps["v"])
    elif g == "example4":
        fixed = {"tau": args.tau if args.tau is not None else 0.5,
                 "q": args.q if args.q is not None else 0.995}
        maker = lambda ps: example4_state(ps["tau"], ps["q"])
    else:
        raise ParameterError(f"unknown gallery {g!r}; choose from {GALLERIES}")
    return fixed, maker


def _load_state(args):
    if args.state:
        return DensityMatrix.load(args.state)
    fixed, maker = _gallery_factory(args)
    return maker(fixed)


def _parse_gsic_a(text, dA, dB):
    parts = [float(x) for x in text.split(",")]
    if len(parts) == 1:
        return parts[0], parts[0]
    if len(parts) == 2:
        return parts[0], parts[1]
    raise ParameterError(f"--gsic-a wants one or two comma-separated values, got {text!r}")


def _grouping_experiment(rho, pA, pB, args):
    """Recompute the correlation trace norm under a seeded random regrouping
    of each party's basis (same d, N, M, t)."""
    rng = np.random.default_rng(202408)
    norms = {}
    for label, p in (("A", pA), ("B", pB)):
        if p.t is None:
            norms[label] = None
            continue
        count = p.d * p.d - 1
        perm = rng.permutation(count)
        groups = [perm[a * (p.M - 1):(a + 1) * (p.M - 1)].tolist()
                  for a in range(p.N)]
        alt = build_povm(group_basis(gellmann_basis(p.d), p.N, p.M, groups), p.t)
        norms[label] = alt
    alt_a = norms["A"] or pA
    alt_b = norms["B"] or pB
    base = trace_norm(correlation_matrix(rho, pA, pB))
    alt = trace_norm(correlation_matrix(rho, alt_a, alt_b))
    return {"trace_norm": base, "trace_norm_regrouped": alt,
            "difference": abs(base - alt)}


# ---------------------------------------------------------------- povm


def cmd_povm(args):
    if args.action == "validate":
        if not args.infile:
            raise ParameterError("povm validate needs --in FILE")
        p = SymmetricPovm.load(args.infile)
        report = validate_povm(p, tol=args.tol)
        for key in ("trace", "purity", "within_family", "cross_family",
                    "completeness"):
            print(f"{key:15s} max deviation {report[key]:.3e}")
        print(f"{'min eigenvalue':15s} {report['min_eigenvalue']:+.3e}")
        print(f"{'inside window':15s} {report['inside_window']}")
        print("PASS" if report["passed"] else f"FAIL: {report['failed_checks']}")
        return 0 if report["passed"] else 2
    if args.grouping_file:
        gb = load_grouping(args.grouping_file)
    else:
        if args.d is None or args.N is None or args.M is None:
            raise ParameterError("povm needs --d, --N, --M (or --grouping-file)")
        gb = group_basis(gellmann_basis(args.d), args.N, args.M,
                         args.scheme or "sequential")
    if args.action == "trange":
        lo, hi = t_range(build_h(gb))
        print(f"admissible t interval: [{_fmt(lo)}, {_fmt(hi)}]")
        print(f"x(t_min) = {_fmt(x_of_t(gb.d, gb.M, lo))}, "
              f"x(t_max) = {_fmt(x_of_t(gb.d, gb.M, hi))}")
        return 0
    if args.action == "build":
        if args.t is None:
            raise ParameterError("povm build needs --t")
        p = build_povm(gb, args.t)
        out = args.out or "povm.json"
        p.save(out)
        print(f"wrote (N,M)=({p.N},{p.M}) family for d={p.d}, t={_fmt(p.t)}, "
              f"x={_fmt(p.x)} to {out}")
        return 0
    raise ParameterError(f"unknown povm action {args.action!r}")


# ---------------------------------------------------------------- eval


def cmd_eval(args):
    rho = _load_state(args)
    pA = _measurement_from_args(args, "A", rho.dA)
    pB = _measurement_from_args(args, "B", rho.dB)
    baselines = tuple(b for b in (args.baselines or "").split(",") if b)
    gsic_a = (_parse_gsic_a(args.gsic_a, rho.dA, rho.dB)
              if args.gsic_a else None)
    report = full_report(rho, pA, pB, baselines=baselines, gsic_purity=gsic_a)
    doc = report.to_dict()
    doc["state"] = {"dA": rho.dA, "dB": rho.dB,
                    "gallery": None if args.state else args.gallery}
    doc["measurements"] = {
        "A": {"d": pA.d, "N": pA.N, "M": pA.M, "t": pA.t, "x": pA.x},
        "B": {"d": pB.d, "N": pB.N, "M": pB.M, "t": pB.t, "x": pB.x}}
    if args.compare_groupings:
        doc["grouping_experiment"] = _grouping_experiment(rho, pA, pB, args)
    json.dump(doc, sys.stdout, indent=2)
    print()
    return 0


# ---------------------------------------------------------------- sweep


def _sweep_rows(args, values):
    """Evaluate the sweep at the given parameter values (concurrently)."""
    fixed, maker = _gallery_factory(args)
    if args.param not in fixed:
        raise ParameterError(
            f"gallery {args.gallery!r} has no parameter {args.param!r} "
            f"(available: {sorted(fixed)})")
    probe = maker({**fixed, args.param: values[0]})
    pA = _measurement_from_args(args, "A", probe.dA)
    pB = _measurement_from_args(args, "B", probe.dB)
    baselines = tuple(b for b in (args.baselines or "").split(",") if b)
    gsic_a = (_parse_gsic_a(args.gsic_a, probe.dA, probe.dB)
              if args.gsic_a else None)

    def eval_point(value):
        rho = maker({**fixed, args.param: value})
        rep = full_report(rho, pA, pB, baselines=baselines, gsic_purity=gsic_a)
        return rep

    with concurrent.futures.ThreadPoolExecutor(max_workers=_thread_cap()) as ex:
        reports = list(ex.map(eval_point, values))
    return reports, baselines


def _write_csv(path, param_name, values, reports, baselines):
    lines = []
    header = [param_name, "trace_norm", "sn_real_lb", "sn_int_lb",
              "concurrence_lb", "sn_real_lb_clamped"] + list(baselines)
    lines.append(",".join(header))
    for v, rep in zip(values, reports):
        row = [_fmt(v), _fmt(rep.trace_norm), _fmt(rep.sn_real_lb),
               str(rep.sn_int_lb), _fmt(rep.concurrence_lb),
               _fmt(max(0.0, rep.sn_real_lb))]
        row += [_fmt(rep.baselines[b]) for b in baselines]
        lines.append(",".join(row))
    with open(path, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_sweep(args):
    if args.lo >= args.hi:
        raise ParameterError(f"sweep needs lo < hi, got [{args.lo}, {args.hi}]")
    if args.points < 2:
        raise ParameterError("sweep needs at least 2 points")
    values = np.linspace(args.lo, args.hi, args.points)
    reports, baselines = _sweep_rows(args, values)
    out = args.csv or "sweep.csv"
    _write_csv(out, args.param, values, reports, baselines)
    print(f"wrote {len(values)} rows to {out}")
    return 0


# ---------------------------------------------------------------- threshold


def _curve_function(args):
    """Scalar curve param -> value for threshold bisection."""
    fixed, maker = _gallery_factory(args)
    if args.param not in fixed:
        raise ParameterError(
            f"gallery {args.gallery!r} has no parameter {args.param!r}")
    probe = maker({**fixed, args.param: args.lo})
    curve = args.curve
    if curve == "realignment":
        return lambda v: realignment_sn_bound(maker({**fixed, args.param: v})) - 1.0
    pA = _measurement_from_args(args, "A", probe.dA)
    pB = _measurement_from_args(args, "B", probe.dB)
    gsic_a = (_parse_gsic_a(args.gsic_a, probe.dA, probe.dB)
              if args.gsic_a else None)
    if curve == "red":
        c = klr_constants(pA.d, pA.M, pA.x, pB.d, pB.M, pB.x)

        def f(v):
            rho = maker({**fixed, args.param: v})
            return schmidt_bound(trace_norm(correlation_matrix(rho, pA, pB)), c)[0]
        return f
    if curve in ("gsic", "sic", "fidelity"):
        def f(v):
            rho = maker({**fixed, args.param: v})
            rep = full_report(rho, pA, pB, baselines=(curve,), gsic_purity=gsic_a)
            return rep.baselines[curve]
        return f
    raise ParameterError(f"unknown curve {curve!r}")


def _bisect(f, level, lo, hi, tol):
    flo = f(lo) - level
    fhi = f(hi) - level
    if flo == 0.0:
        return lo, 0
    if fhi == 0.0:
        return hi, 0
    if flo * fhi > 0:
        raise ParameterError(
            f"level {level} not bracketed on [{lo}, {hi}]: "
            f"endpoint values {flo + level:.6g}, {fhi + level:.6g}")
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        iterations += 1
        if (f(mid) - level) * flo <= 0:
            hi = mid
        else:
            lo = mid
        if iterations > 200:
            break
    return 0.5 * (lo + hi), iterations


def cmd_threshold(args):
    f = _curve_function(args)
    root, iters = _bisect(f, args.level, args.lo, args.hi, args.tol)
    value = f(root)
    doc = {"parameter": args.param, "value": root, "level": args.level,
           "curve": args.curve, "curve_value_at_root": value,
           "achieved_tolerance": args.tol, "iterations": iters}
    json.dump(doc, sys.stdout, indent=2)
    print()
    return 0


# ---------------------------------------------------------------- reproduce


def _render_png(path, xlabel, xs, curves, hline=None):
    """Render the sweep curves next to the CSV (report-path figures)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for label, ys, style in curves:
        ax.plot(xs, ys, style, label=label)
    if hline is not None:
        ax.axhline(hline, color="gray", lw=0.8, ls=":")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("lower bound on SN - 1")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


class _Namespace(argparse.Namespace):
    """Plain attribute bag for programmatic sweep/threshold calls."""


def _args_for(gallery, param, lo, hi, **extra):
    ns = _Namespace()
    ns.gallery = gallery
    ns.state = None
    ns.param = param
    ns.lo, ns.hi = lo, hi
    ns.tau = ns.q = ns.p = ns.v = ns.d = None
    ns.NA = ns.MA = ns.schemeA = None
    ns.NB = ns.MB = ns.schemeB = None
    ns.tA = ns.tB = 0.01
    ns.baselines = ""
    ns.gsic_a = None
    ns.points = 201
    ns.csv = None
    ns.level = 0.0
    ns.curve = "red"
    ns.tol = 1e-6
    for key, value in extra.items():
        setattr(ns, key, value)
    return ns


def _reproduce_fig1(outdir):
    ns = _args_for("example1", "q", 0.0, 1.0, tau=0.9,
                   baselines="gsic", gsic_a="0.1277,0.04984")
    values = np.linspace(0.0, 1.0, ns.points)
    reports, baselines = _sweep_rows(ns, values)
    csv_path = os.path.join(outdir, "fig1.csv")
    _write_csv(csv_path, "q", values, reports, baselines)

    q_star, _ = _bisect(_curve_function(ns), 0.0, 0.0, 1.0, 1e-6)
    green = np.array([r.baselines["gsic"] for r in reports])
    gmax = float(green.max())
    arg = float(values[int(green.argmax())])
    lines = [f"detection threshold q* = {q_star:.6f} (red curve crosses 0)"]
    if gmax <= 0:
        lines.append("GSIC baseline: no detection (stays <= 0 on the whole grid)")
    else:
        gzero, _ = _bisect(lambda v: float(np.interp(v, values, green)),
                           0.0, 0.0, 1.0, 1e-6)
        lines.append(
            f"GSIC baseline: detects for q > {gzero:.5f} "
            f"(max {gmax:+.5f} at q = {arg:g}); no detection below")
    _render_png(os.path.join(outdir, "fig1.png"), "mixing parameter q", values,
                [("trace-norm criterion", [r.sn_real_lb for r in reports], "r-"),
                 ("GSIC baseline", green, "g--")], hline=0.0)
    return csv_path, lines


def _reproduce_fig2(outdir):
    ns = _args_for("example2", "p", 0.0, 1.0, baselines="realignment")
    values = np.linspace(0.0, 1.0, ns.points)
    reports, baselines = _sweep_rows(ns, values)
    csv_path = os.path.join(outdir, "fig2.csv")
    _write_csv(csv_path, "p", values, reports, baselines)

    p_red, _ = _bisect(_curve_function(_args_for("example2", "p", 0.0, 1.0)),
                       1.0, 0.0, 1.0, 1e-6)
    p_orange, _ = _bisect(_curve_function(
        _args_for("example2", "p", 0.0, 1.0, curve="realignment")),
        1.0, 0.0, 1.0, 1e-6)
    lines = [f"red curve crosses level 1 at p* = {p_red:.6f} (SN >= 3 above)",
             f"realignment bound crosses 2 at p* = {p_orange:.6f} "
             "(value - 1 crosses level 1)"]
    _render_png(os.path.join(outdir, "fig2.png"), "mixing parameter p", values,
                [("trace-norm criterion", [r.sn_real_lb for r in reports], "r-"),
                 ("realignment - 1", [r.baselines["realignment"] for r in reports],
                  "-", )], hline=1.0)
    return csv_path, lines


def _reproduce_fig3(outdir):
    ns = _args_for("example4", "tau", 0.05, 0.95, q=0.995, points=19,
                   baselines="gsic,sic,realignment", gsic_a="0.04984")
    values = np.linspace(0.05, 0.95, 19)
    reports, baselines = _sweep_rows(ns, values)
    csv_path = os.path.join(outdir, "fig3.csv")
    _write_csv(csv_path, "tau", values, reports, baselines)

    red = np.array([r.sn_real_lb for r in reports])
    worst = math.inf
    dominated = True
    for key in baselines:
        margin = red - np.array([r.baselines[key] for r in reports])
        worst = min(worst, float(margin.min()))
        dominated = dominated and bool((margin >= -1e-12).all())
    verdict = "holds" if dominated else "FAILS"
    lines = [f"pointwise dominance red >= gsic, sic, realignment: {verdict} "
             f"(worst margin {worst:+.3e})"]
    _render_png(os.path.join(outdir, "fig3.png"), "state parameter tau", values,
                [("trace-norm criterion", red, "r-"),
                 ("GSIC baseline", [r.baselines["gsic"] for r in reports], "g--"),
                 ("SIC baseline", [r.baselines["sic"] for r in reports], "m-."),
                 ("realignment - 1", [r.baselines["realignment"] for r in reports],
                  "y:")], hline=0.0)
    return csv_path, lines


def _reproduce_example3(outdir):
    rows = []
    max_dev = 0.0
    chain_ok = True
    for d in (2, 3, 4):
        n, m, scheme = DEFAULT_FAMILY[d]
        gb = group_basis(gellmann_basis(d), n, m, scheme)
        lo, hi = t_range(build_h(gb))
        for t in (0.35 * hi, 0.85 * hi):
            p = build_povm(gb, t)
            for v in np.linspace(0.0, 1.0, 11):
                closed = isotropic_norm_closed_form(d, n, m, p.x, v)
                numeric = trace_norm(correlation_matrix(isotropic(d, v), p, p))
                dev = abs(closed - numeric)
                max_dev = max(max_dev, dev)
                rows.append((d, t, v, closed, numeric, dev))
                for r in range(1, d):
                    chain_ok = chain_ok and fidelity_implication_check(
                        d, n, m, p.x, r, v)[2]
    csv_path = os.path.join(outdir, "example3.csv")
    header = "d,t,v,closed_form,numeric,abs_difference"
    with open(csv_path, "w", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join([str(row[0])] + [_fmt(x) for x in row[1:]]) + "\n")

    lines = ["v_opt thresholds (visibility above which SN > r):"]
    for d in (2, 3, 4):
        vals = ", ".join(f"r={r}: {fidelity_isotropic_threshold(d, r):.6f}"
                         for r in range(1, d))
        lines.append(f"  d={d}: {vals}")
    lines.append(f"closed form vs numeric max deviation: {max_dev:.3e}")
    lines.append("fidelity-implication chain strict above v_opt: "
                 + ("holds" if chain_ok else "FAILS"))

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    vs = np.linspace(0.0, 1.0, 11)
    for d in (2, 3, 4):
        sub = [r for r in rows if r[0] == d and abs(r[1] - [x for x in
               {row[1] for row in rows if row[0] == d}][0]) < 1e-15]
        sub = sorted(sub, key=lambda r: r[2])[:11]
        ax.plot([r[2] for r in sub], [r[3] for r in sub], "-", label=f"closed d={d}")
        ax.plot([r[2] for r in sub], [r[4] for r in sub], "x", ms=4,
                label=f"numeric d={d}")
    ax.set_xlabel("visibility v")
    ax.set_ylabel("correlation trace norm")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(os.path.join(outdir, "example3.png"), dpi=150)
    plt.close(fig)
    return csv_path, lines


def cmd_reproduce(args):
    outdir = args.outdir or "."
    os.makedirs(outdir, exist_ok=True)
    runner = {"fig1": _reproduce_fig1, "fig2": _reproduce_fig2,
              "fig3": _reproduce_fig3, "example3": _reproduce_example3}
    if args.target not in runner:
        raise ParameterError(f"unknown reproduce target {args.target!r}")
    csv_path, lines = runner[args.target](outdir)
    print(f"wrote {csv_path} (+ PNG alongside)")
    for line in lines:
        print(line)
    return 0


# ---------------------------------------------------------------- parser


def _add_measurement_flags(sub):
    for side in ("A", "B"):
        sub.add_argument(f"--N{side}", type=int)
        sub.add_argument(f"--M{side}", type=int)
        sub.add_argument(f"--scheme{side}")
        sub.add_argument(f"--t{side}", type=float, default=0.01)


def _add_gallery_flags(sub):
    sub.add_argument("--gallery", choices=GALLERIES)
    sub.add_argument("--state", help="density matrix JSON file")
    sub.add_argument("--tau", type=float)
    sub.add_argument("--q", type=float)
    sub.add_argument("--p", type=float)
    sub.add_argument("--v", type=float)
    sub.add_argument("--d", type=int)
    sub.add_argument("--baselines", default="",
                     help="comma list from gsic,sic,realignment,fidelity")
    sub.add_argument("--gsic-a", dest="gsic_a",
                     help="GSIC purities aA,aB (or one value for both)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="snest",
        description="Symmetric measurement families and Schmidt-number "
                    "certification for bipartite states.")
    sp = ap.add_subparsers(dest="command", required=True)

    povm = sp.add_parser("povm", help="build/validate/trange for a family")
    povm.add_argument("action", choices=("build", "validate", "trange"))
    povm.add_argument("--d", type=int)
    povm.add_argument("--N", type=int)
    povm.add_argument("--M", type=int)
    povm.add_argument("--scheme")
    povm.add_argument("--grouping-file", dest="grouping_file")
    povm.add_argument("--t", type=float)
    povm.add_argument("--out")
    povm.add_argument("--in", dest="infile")
    povm.add_argument("--tol", type=float, default=1e-10)
    povm.set_defaults(func=cmd_povm)

    ev = sp.add_parser("eval", help="criterion report for one state")
    _add_gallery_flags(ev)
    _add_measurement_flags(ev)
    ev.add_argument("--compare-groupings", action="store_true",
                    dest="compare_groupings")
    ev.set_defaults(func=cmd_eval)

    sw = sp.add_parser("sweep", help="parameter sweep to CSV")
    _add_gallery_flags(sw)
    _add_measurement_flags(sw)
    sw.add_argument("--param", required=True)
    sw.add_argument("--lo", type=float, required=True)
    sw.add_argument("--hi", type=float, required=True)
    sw.add_argument("--points", type=int, default=201)
    sw.add_argument("--csv")
    sw.set_defaults(func=cmd_sweep)

    th = sp.add_parser("threshold", help="bisect a curve crossing")
    _add_gallery_flags(th)
    _add_measurement_flags(th)
    th.add_argument("--param", required=True)
    th.add_argument("--curve", default="red",
                    choices=("red", "gsic", "sic", "realignment", "fidelity"))
    th.add_argument("--level", type=float, default=0.0)
    th.add_argument("--lo", type=float, default=0.0)
    th.add_argument("--hi", type=float, default=1.0)
    th.add_argument("--tol", type=float, default=1e-6)
    th.set_defaults(func=cmd_threshold)

    rp = sp.add_parser("reproduce", help="canned figure/analysis datasets")
    rp.add_argument("target", choices=("fig1", "fig2", "fig3", "example3"))
    rp.add_argument("--outdir")
    rp.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DimensionMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvalidStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except SnestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
