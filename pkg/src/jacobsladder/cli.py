"""Command line interface.

Exit codes: 0 success, 1 at least one verification report failed,
2 usage or configuration error, 3 numeric failure.

The integral table cache lives under --cache-dir (or
JACOBSLADDER_CACHE_DIR, or ~/.cache/jacobsladder); one file per
evaluator digest and spacing, extended in place when a command needs
greater heights.
"""

import argparse
import math
import os
import sys

import numpy as np

from . import __version__
from .errors import DomainError, LadderError
from .ladder import LadderContext, phi, phi_prime, solve_integral_equation
from .quadrature import build_integral_table, hl_residual, integrate_z2
from .reports import emit_report, ladder_plot, residual_plot, slope_plot
from .tableio import config_digest, load_table, save_table
from .verify import (SuiteReport, _next_zero_at_or_after, microscopic_suite,
                     second_class_suite, verify_interval_formula,
                     verify_tangent_law)
from .zeros import gap_statistics, scan_zeros, zero_count_check
from .zeta import DEFAULT_CFG, z_eval


def _default_cache_dir():
    env = os.environ.get("JACOBSLADDER_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "jacobsladder")


def _table_path(cache_dir, spacing):
    digest = config_digest(DEFAULT_CFG)[:12]
    return os.path.join(cache_dir, f"table-{digest}-s{spacing!r}.jlt")


def _ensure_table(args, t_needed, quiet=False):
    """Load the cached table, extending (or creating) it to cover t_needed."""
    spacing = args.spacing
    quad_tol = args.quad_tol
    os.makedirs(args.cache_dir, exist_ok=True)
    path = _table_path(args.cache_dir, spacing)
    t_max = spacing * math.ceil((t_needed + 50.0) / spacing)
    t_max = max(t_max, 200.0)
    existing = None
    if os.path.exists(path):
        existing = load_table(path, expected_cfg=DEFAULT_CFG)
        if existing.quad_tol != quad_tol:
            raise DomainError(
                f"cache {path} was built with quad_tol={existing.quad_tol}, "
                f"requested {quad_tol}; use a different --cache-dir")
        if existing.t_max >= t_needed:
            return existing
    progress = None
    if not quiet:
        def progress(done, total):
            sys.stderr.write(f"\rtable: {done:.0f}/{total:.0f} gaps")
            sys.stderr.flush()
    table = build_integral_table(t_max, spacing=spacing, quad_tol=quad_tol,
                                 resume_from=existing, progress=progress,
                                 workers=args.workers)
    if not quiet:
        sys.stderr.write("\n")
    save_table(table, path)
    return table


def _emit(args, obj):
    data = emit_report(obj, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        if not args.quiet:
            print(args.out)
    else:
        sys.stdout.write(data.decode())


def _emit_raw(args, data):
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        if not args.quiet:
            print(args.out)
    else:
        sys.stdout.write(data.decode())


def _require_json(args, command):
    if args.format != "json":
        raise DomainError(f"{command} only supports --format json")


def _reports_failed(obj):
    if isinstance(obj, SuiteReport):
        return not obj.all_passed
    if isinstance(obj, (list, tuple)):
        return any(_reports_failed(o) for o in obj)
    return hasattr(obj, "passed") and not obj.passed


def _cmd_z(args):
    _require_json(args, "z")
    _emit(args, [{"t": t, "Z": z_eval(t, DEFAULT_CFG)} for t in args.t])
    return 0


def _cmd_integrate(args):
    _require_json(args, "integrate")
    _emit(args, {"a": args.a, "b": args.b, "tol": args.tol,
                 "value": integrate_z2(args.a, args.b, args.tol)})
    return 0


def _cmd_table(args):
    table = _ensure_table(args, args.t_max, quiet=args.quiet)
    if not args.quiet:
        print(_table_path(args.cache_dir, args.spacing))
        print(f"t_max={table.t_max} I(t_max)={float(table.values[-1])!r}")
    return 0


def _cmd_zeros(args):
    scan = scan_zeros(args.a, args.b, DEFAULT_CFG, tol=args.tol)
    check = zero_count_check(args.a, args.b, DEFAULT_CFG, scan=scan)
    if args.format == "json":
        _emit(args, {
            "count": len(scan),
            "count_check": {"expected": check.expected, "delta": check.delta,
                            "passed": check.passed},
            "warnings": list(scan.warnings),
            "zeros": [{"gamma": r.gamma, "bracket": list(r.bracket),
                       "residual": r.residual} for r in scan],
        })
    else:
        _emit(args, scan)
    return 0


def _cmd_ladder(args):
    table = _ensure_table(args, max(args.T) + 1.0, quiet=args.quiet)
    ctx = LadderContext(table=table, c0=args.c0)
    if args.format == "plot-data":
        lo, hi = min(args.T), max(args.T)
        if lo == hi:
            hi = lo + 1.0
        _emit(args, ladder_plot(ctx, lo, hi))
        return 0
    rows = []
    for t in args.T:
        row = {"T": t, "phi": phi(ctx, t)}
        if args.phi_prime:
            row["phi_prime"] = phi_prime(ctx, t)
        rows.append(row)
    if args.format == "json":
        _emit(args, rows)
    else:
        cols = ["T", "phi"] + (["phi_prime"] if args.phi_prime else [])
        lines = [",".join(cols)]
        lines += [",".join(repr(r[c]) for c in cols) for r in rows]
        _emit_raw(args, ("\n".join(lines) + "\n").encode())
    return 0


def _cmd_solve(args):
    _require_json(args, "solve")
    table = _ensure_table(args, args.T + 1.0, quiet=args.quiet)
    ctx = LadderContext(table=table, c0=args.c0)
    sol = solve_integral_equation(ctx, args.T, args.mu_coefficient)
    _emit(args, {
        "T": args.T,
        "mu_coefficient": args.mu_coefficient,
        "x": float(sol),
        "mu": sol.mu,
        "w_value": sol.w_value,
        "residual": sol.residual,
        "monotone": sol.monotone,
    })
    return 0


def _cmd_verify(args):
    if args.what == "tangent":
        table = _ensure_table(args, args.T + args.U + 1.0, quiet=args.quiet)
        ctx = LadderContext(table=table, c0=args.c0)
        obj = verify_tangent_law(ctx, table, args.T, args.U)
    elif args.what == "intervals":
        table = _ensure_table(args, args.M + 1.0, quiet=args.quiet)
        ctx = LadderContext(table=table, c0=args.c0)
        obj = verify_interval_formula(ctx, table, args.N, args.M,
                                      lnN_anchor=args.anchor,
                                      tan_beta=args.tan_beta)
    elif args.what == "microscopic":
        table = _ensure_table(args, args.gamma + 10.0, quiet=args.quiet)
        ctx = LadderContext(table=table, c0=args.c0)
        gamma = _next_zero_at_or_after(args.gamma, DEFAULT_CFG)
        obj = microscopic_suite(ctx, table, gamma)
    else:
        jump = args.gamma ** (1.0 / 3.0 + 2.0 * args.eps)
        table = _ensure_table(args, args.gamma + jump + 20.0, quiet=args.quiet)
        ctx = LadderContext(table=table, c0=args.c0)
        gamma = _next_zero_at_or_after(args.gamma, DEFAULT_CFG)
        obj = second_class_suite(ctx, table, gamma, eps=args.eps, eta=args.eta)
    _emit(args, obj)
    return 1 if _reports_failed(obj) else 0


def _cmd_gaps(args):
    _require_json(args, "gaps")
    rep = gap_statistics(args.T, args.eps, args.A, DEFAULT_CFG)
    _emit(args, {
        "T": rep.T, "A": rep.A, "eps": rep.eps, "count": rep.count,
        "mean_normalized": rep.mean_normalized,
        "min_normalized": rep.min_normalized,
        "max_normalized": rep.max_normalized,
        "below_eps": rep.below_eps,
        "fraction_below_eps": rep.fraction_below_eps,
    })
    return 0


def _cmd_residual(args):
    table = _ensure_table(args, args.hi + 1.0, quiet=args.quiet)
    if args.format == "plot-data":
        _emit(args, residual_plot(table, args.lo, args.hi, args.n))
        return 0
    recs = [hl_residual(table, float(t))
            for t in np.linspace(args.lo, args.hi, args.n)]
    if args.format == "json":
        _emit(args, [{"T": r.T, "I": r.I, "main_term": r.main_term, "R": r.R}
                     for r in recs])
    else:
        lines = ["T,I,main_term,R"]
        lines += [f"{r.T!r},{r.I!r},{r.main_term!r},{r.R!r}" for r in recs]
        _emit_raw(args, ("\n".join(lines) + "\n").encode())
    return 0


def _cmd_slopes(args):
    if args.format != "plot-data":
        raise DomainError("slopes only supports --format plot-data")
    u0_hi = args.hi ** (1.0 / 3.0 + 2.0 * args.eps)
    table = _ensure_table(args, args.hi + u0_hi + 1.0, quiet=args.quiet)
    ctx = LadderContext(table=table, c0=args.c0)
    anchors = [float(t) for t in np.linspace(args.lo, args.hi, args.n)]
    _emit(args, slope_plot(ctx, anchors, eps=args.eps))
    return 0


def _add_common(parser, suppress):
    """Global flags, usable before or after the subcommand.

    The top-level parser carries the real defaults; subparsers get the
    same flags with SUPPRESS defaults so a flag after the subcommand
    overrides one before it without clobbering anything else.
    """
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--cache-dir", default=d(_default_cache_dir()),
                        help="integral table cache directory "
                             "(env JACOBSLADDER_CACHE_DIR)")
    parser.add_argument("--format", choices=("json", "csv", "plot-data"),
                        default=d("json"))
    parser.add_argument("--out", default=d(None),
                        help="write output to a file")
    parser.add_argument("--quiet", action="store_true", default=d(False))
    parser.add_argument("--c0", type=float, default=d(0.0),
                        help="integration constant of the defining equation")
    parser.add_argument("--quad-tol", dest="quad_tol", type=float,
                        default=d(1e-8))
    parser.add_argument("--spacing", type=float, default=d(1.0))
    parser.add_argument("--workers", type=int, default=d(1),
                        help="process pool size for table building")


def build_parser():
    p = argparse.ArgumentParser(
        prog="jladder",
        description="Ladders over the second moment of Z on the critical "
                    "line")
    p.add_argument("--version", action="version", version=__version__)
    _add_common(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def new(parent, name, func, **kw):
        sp = parent.add_parser(name, **kw)
        _add_common(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    q = new(sub, "z", _cmd_z, help="evaluate Z(t)")
    q.add_argument("--t", type=float, action="append", required=True)

    q = new(sub, "integrate", _cmd_integrate, help="integrate Z^2 over [a, b]")
    q.add_argument("--a", type=float, required=True)
    q.add_argument("--b", type=float, required=True)
    q.add_argument("--tol", type=float, default=1e-8)

    q = new(sub, "table", _cmd_table, help="build or extend the cached table")
    q.add_argument("--t-max", dest="t_max", type=float, required=True)

    q = new(sub, "zeros", _cmd_zeros, help="scan a window for zeros of Z")
    q.add_argument("--a", type=float, required=True)
    q.add_argument("--b", type=float, required=True)
    q.add_argument("--tol", type=float, default=1e-9)

    q = new(sub, "ladder", _cmd_ladder,
            help="evaluate phi (and phi') at heights")
    q.add_argument("--T", type=float, action="append", required=True)
    q.add_argument("--phi-prime", dest="phi_prime", action="store_true")

    q = new(sub, "solve", _cmd_solve,
            help="weighted integral equation solver")
    q.add_argument("--T", type=float, required=True)
    q.add_argument("--mu-coefficient", dest="mu_coefficient", type=float,
                   default=7.0)

    q = sub.add_parser("verify", help="run a verification")
    vs = q.add_subparsers(dest="what", required=True)
    v = new(vs, "tangent", _cmd_verify)
    v.add_argument("--T", type=float, required=True)
    v.add_argument("--U", type=float, required=True)
    v = new(vs, "intervals", _cmd_verify)
    v.add_argument("--N", type=float, required=True)
    v.add_argument("--M", type=float, required=True)
    v.add_argument("--anchor", choices=("lnN", "phi"), default="lnN")
    v.add_argument("--tan-beta", dest="tan_beta", type=float, default=None)
    v = new(vs, "microscopic", _cmd_verify)
    v.add_argument("--gamma", type=float, required=True,
                   help="suite anchors at the first zero at or after this")
    v = new(vs, "second-class", _cmd_verify)
    v.add_argument("--gamma", type=float, required=True,
                   help="suite anchors at the first zero at or after this")
    v.add_argument("--eps", type=float, default=0.01)
    v.add_argument("--eta", type=float, default=0.05)

    q = new(sub, "gaps", _cmd_gaps, help="normalized gap statistics")
    q.add_argument("--T", type=float, required=True)
    q.add_argument("--A", type=float, required=True)
    q.add_argument("--eps", type=float, default=0.5)

    q = new(sub, "residual", _cmd_residual,
            help="mean-value residual R(T) sweep")
    q.add_argument("--lo", type=float, required=True)
    q.add_argument("--hi", type=float, required=True)
    q.add_argument("--n", type=int, default=64)

    q = new(sub, "slopes", _cmd_slopes,
            help="tan alpha(T, U0) vs asymptotic slope")
    q.add_argument("--lo", type=float, required=True)
    q.add_argument("--hi", type=float, required=True)
    q.add_argument("--n", type=int, default=50)
    q.add_argument("--eps", type=float, default=0.01)

    return p


def run_cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LadderError as exc:
        print(f"numeric failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
