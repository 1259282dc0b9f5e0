"""Release acceptance campaign.

Builds every input from a cold cache, runs the ten numbered checks, and
writes one JSON file per check plus summary.json into out_dir.  Output is
fully deterministic (sorted keys, seeded RNG, no timestamps or host paths),
so two cold runs must produce byte-identical files; that reproducibility is
itself the final check and is asserted by the test driver, not here.

Usage: python3 acceptance_runner.py OUT_DIR CACHE_DIR
"""

import json
import math
import os
import sys

import numpy as np

from jacobsladder.chords import Interval, chord, find_parallel_chords
from jacobsladder.ladder import (LadderContext, phi, phi_many, phi_prime,
                                 phi_prime_central, solve_integral_equation)
from jacobsladder.quadrature import (EULER_GAMMA, LN_TWO_PI,
                                     build_integral_table, hl_integral,
                                     hl_residual)
from jacobsladder.tableio import config_digest, load_table, save_table
from jacobsladder.verify import (asymptotic_tan, microscopic_suite,
                                 second_class_suite, verify_interval_formula,
                                 verify_tangent_law)
from jacobsladder.zeros import refine_zero, scan_zeros, zero_count_check
from jacobsladder.zeta import DEFAULT_CFG, hardy_z, oracle_z, z_eval

T_MAX = 100100.0
SEED = 20260819
FIRST_ZERO = 14.134725


def _say(msg):
    print(msg, file=sys.stderr, flush=True)


def _jsonable(obj):
    """Recursively coerce to plain JSON types; non-finite floats become None."""
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        f = float(obj)
        return f if math.isfinite(f) else None
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"not serializable: {type(obj)!r}")


def _ensure_table(cache_dir):
    digest = config_digest(DEFAULT_CFG)[:12]
    path = os.path.join(cache_dir, f"acceptance-{digest}.jlt")
    if os.path.exists(path):
        table = load_table(path, expected_cfg=DEFAULT_CFG)
        if table.t_max >= T_MAX:
            _say(f"acceptance: reusing cached table to {table.t_max:.0f}")
            return table
    _say(f"acceptance: building table to {T_MAX:.0f} (one-time)")

    def progress(done, total):
        _say(f"acceptance: table {done}/{total}")

    table = build_integral_table(T_MAX, cfg=DEFAULT_CFG, progress=progress)
    save_table(table, path)
    return table


# --- the ten checks -------------------------------------------------------

def c01_evaluator(_table, _ctx):
    """Pointwise evaluator accuracy against the high-precision oracle."""
    grid = np.geomspace(50.0, 1e5, 100)
    rows = []
    worst = 0.0
    ok = True
    for t in grid:
        t = float(t)
        z = hardy_z(t)
        ref = float(oracle_z(t))
        bound = 10.0 * t ** -2.75
        diff = abs(z - ref)
        ratio = diff / bound
        worst = max(worst, ratio)
        ok = ok and diff <= bound
        rows.append({"t": t, "diff": diff, "bound": bound})
    return {
        "criterion": "c01",
        "pass": ok,
        "tolerances": {"bound": "10 * t^(-11/4)", "grid": "100-point log grid on [50, 1e5]",
                       "oracle_digits": DEFAULT_CFG.oracle_digits},
        "data": {"worst_ratio": worst, "rows": rows},
    }


def c02_zero_census(_table, _ctx):
    """Windowed zero counts against the phase integral, plus the first zero."""
    scan = scan_zeros(50.0, 10000.0)
    windows = []
    ok = True
    worst = 0.0
    for lo in np.arange(50.0, 10000.0, 100.0):
        lo = float(lo)
        hi = min(lo + 100.0, 10000.0)
        subset = [r for r in scan if lo <= r.gamma < hi]
        chk = zero_count_check(lo, hi, scan=subset)
        ok = ok and chk.passed
        worst = max(worst, abs(chk.delta))
        windows.append({"lo": lo, "hi": hi, "count": chk.count,
                        "expected": chk.expected, "delta": chk.delta})
    head = scan_zeros(10.0, 20.0)
    g1 = refine_zero(head[0].bracket, tol=1e-12).gamma
    first_err = abs(g1 - FIRST_ZERO)
    ok = ok and first_err <= 1e-6
    return {
        "criterion": "c02",
        "pass": ok,
        "tolerances": {"count_window": "count within +-2 per 100-unit window",
                       "first_zero": "within 1e-6 of 14.134725"},
        "data": {"total_zeros": len(scan), "worst_delta": worst,
                 "first_zero": float(g1), "first_zero_err": first_err,
                 "windows": windows},
    }


def c03_residual(table, _ctx):
    """Moment residual bound at every checkpoint in [1e3, 1e5]."""
    sel = (table.grid >= 1e3) & (table.grid <= 1e5)
    g = table.grid[sel]
    main = g * np.log(g) + (2.0 * EULER_GAMMA - 1.0 - LN_TWO_PI) * g
    resid = table.values[sel] - main
    bound = 2.0 * g ** 0.4
    margins = np.abs(resid) / bound
    ok = bool(np.all(np.abs(resid) <= bound))
    # spot-check the vectorized arithmetic against the scalar route
    spots = []
    for idx in np.linspace(0, len(g) - 1, 5).astype(int):
        rec = hl_residual(table, float(g[idx]))
        spots.append({"T": float(g[idx]), "R": rec.R,
                      "vector_R": float(resid[idx]),
                      "agree": bool(abs(rec.R - resid[idx]) <= 1e-9)})
    ok = ok and all(s["agree"] for s in spots)
    iworst = int(np.argmax(margins))
    return {
        "criterion": "c03",
        "pass": ok,
        "tolerances": {"bound": "2 * T^0.4 at every grid checkpoint in [1e3, 1e5]"},
        "data": {"checkpoints": int(len(g)), "worst_margin": float(margins[iworst]),
                 "worst_T": float(g[iworst]), "worst_R": float(resid[iworst]),
                 "spots": spots},
    }


def c04_ladder(_table, ctx):
    """Ladder sanity: log ratio, monotonicity, derivative identity."""
    ratios = []
    ok = True
    for T in (1e3, 1e4, 1e5):
        r = math.log(0.5 * phi(ctx, T)) / math.log(T)
        err = abs(r - 1.0)
        bnd = 2.0 / math.log(T) ** 2
        ok = ok and err <= bnd
        ratios.append({"T": T, "ratio": r, "err": err, "bound": bnd})

    grid = np.linspace(100.0, 1e5, 1000)
    vals = phi_many(ctx, grid)
    increasing = bool(np.all(np.diff(vals) > 0.0))
    ok = ok and increasing

    rng = np.random.default_rng(SEED)
    derivs = []
    rejected = 0
    while len(derivs) < 50:
        t = float(rng.uniform(200.0, 99000.0))
        if abs(z_eval(t)) < 0.3:
            rejected += 1  # derivative vanishes at zeros, rel compare useless
            continue
        a = phi_prime(ctx, t)
        # Richardson pair: kills the h^2 truncation term, which otherwise
        # dominates the relative error wherever phi' is small (|Z| near a zero)
        d1 = phi_prime_central(ctx, t, h=2e-3)
        d2 = phi_prime_central(ctx, t, h=1e-3)
        b = (4.0 * d2 - d1) / 3.0
        rel = abs(a - b) / max(abs(a), 1e-12)
        ok = ok and rel <= 1e-4
        derivs.append({"t": t, "exact": a, "central": b, "rel": rel})
    worst_rel = max(d["rel"] for d in derivs)
    return {
        "criterion": "c04",
        "pass": ok,
        "tolerances": {"log_ratio": "|ln(phi/2)/ln T - 1| <= 2/ln^2 T",
                       "grid": "strictly increasing on 1000 points of [100, 1e5]",
                       "derivative": "Richardson pair of central differences "
                                     "(h = 2e-3 and 1e-3) within 1e-4 relative, "
                                     "heights drawn with seed 20260819, draws "
                                     "with |Z(t)| < 0.3 rejected"},
        "data": {"ratios": ratios, "increasing": increasing,
                 "derivative_worst_rel": worst_rel, "rejected_draws": rejected,
                 "derivatives": derivs},
    }


def c05_tangent(table, ctx):
    """Tangent law across the height/width matrix."""
    reports = []
    ok = True
    for T in (1e3, 1e4, 3e4):
        for U in (1e-3, 1.0, 10.0, T ** (1.0 / 3.0)):
            rep = verify_tangent_law(ctx, table, T, U)
            entry = rep.to_dict()
            entry["rel_residual"] = (abs(rep.residual) / abs(rep.lhs)
                                     if rep.lhs != 0.0 else None)
            good = rep.passed
            if U >= 1.0:
                good = good and abs(rep.residual) <= 1e-2 * abs(rep.lhs)
            entry["accepted"] = good
            ok = ok and good
            reports.append(entry)
    return {
        "criterion": "c05",
        "pass": ok,
        "tolerances": {"bound": "per-report error budget",
                       "relative": "additionally 1e-2 relative for U >= 1"},
        "data": {"reports": reports},
    }


def c06_median_slope(_table, ctx):
    """Median chord slope against the asymptotic value at U0 = T^(1/3+0.02)."""
    anchors = np.linspace(1e4, 2e4, 50)
    devs = []
    tans = []
    rows = []
    for T in anchors:
        T = float(T)
        U0 = T ** (1.0 / 3.0 + 0.02)
        tan = chord(ctx, T, U0).tan_alpha
        asym = asymptotic_tan(T)
        devs.append(abs(tan - asym))
        tans.append(tan)
        rows.append({"T": T, "U0": U0, "tan": tan, "asym": asym})
    med_dev = float(np.median(devs))
    med_tan = float(np.median(tans))
    clause_dev = med_dev <= 0.05
    clause_below_one = med_tan < 1.0
    return {
        "criterion": "c06",
        "pass": clause_dev and clause_below_one,
        "clauses": {"median_deviation": clause_dev,
                    "median_below_one": clause_below_one},
        "tolerances": {"median_deviation": "median |tan - asym| <= 0.05 over "
                                           "50 anchors in [1e4, 2e4]",
                       "median_below_one": "median tan < 1"},
        "data": {"median_deviation": med_dev, "median_tan": med_tan,
                 "rows": rows},
    }


def c07_intervals(table, ctx):
    """Parallel-chord intervals in a T^(1/3+0.02) window above 1e4."""
    T = 1e4
    width = T ** (1.0 / 3.0 + 0.02)
    slope = asymptotic_tan(T)
    ivs = find_parallel_chords(ctx, slope, Interval(T, T + width), 8)
    reports = []
    ok = len(ivs) >= 5
    ok = ok and len({iv.N for iv in ivs}) == len(ivs)
    for iv in ivs:
        rep = verify_interval_formula(ctx, table, iv.N, iv.M)
        rel = abs(rep.residual) / abs(rep.lhs)
        entry = rep.to_dict()
        entry["rel_residual"] = rel
        ok = ok and rel <= 0.05
        reports.append(entry)
    return {
        "criterion": "c07",
        "pass": ok,
        "tolerances": {"count": ">= 5 distinct intervals from 8 requested",
                       "relative": "interval formula within 0.05 relative"},
        "data": {"window": [T, T + width], "slope": slope,
                 "found": len(ivs), "shortfall": bool(ivs.shortfall),
                 "reports": reports},
    }


def _first_zeros_above_1e4():
    scan = scan_zeros(10000.0, 10004.0)
    return [r.gamma for r in scan[:3]]


def c08_microscopic(table, ctx):
    """In-gap geometry suites at the first three zero pairs above 1e4."""
    suites = []
    ok = True
    for g in _first_zeros_above_1e4():
        s = microscopic_suite(ctx, table, g)
        cx = s.context
        good = (cx["phi_prime_rho"] > 0.0 and s.all_passed
                and cx["parallel_count"] == 4
                and not cx["parallel_shortfall"])
        span = cx["rho"] - cx["gamma"]
        for u in cx["solved_U"]:
            good = good and u is not None and 0.0 < u < span
        ok = ok and good
        d = s.to_dict()
        d["accepted"] = good
        suites.append(d)
    return {
        "criterion": "c08",
        "pass": ok,
        "tolerances": {"suite": "all 8 rotating + 4 interval reports pass, "
                                "inflection slope positive, every solved "
                                "width inside (0, rho - gamma)"},
        "data": {"suites": suites},
    }


def c09_second_class(table, ctx):
    """Second-class chord suites at the first three zeros above 1e4.

    The grid-angle and pi/6 checks are the acceptance surface; the
    asymptotic-slope and interval reports the suite also emits are
    recorded but judged elsewhere (they carry their own error budgets).
    """
    suites = []
    ok = True
    inv_sqrt3 = 1.0 / math.sqrt(3.0)
    for g in _first_zeros_above_1e4():
        s = second_class_suite(ctx, table, g)
        cx = s.context
        good = cx["delta"] >= 0.0
        good = good and cx["left_negative"] and cx["right_positive"]
        grid44 = [r for r in s.reports if r.formula_id == "4.4"]
        good = good and len(grid44) == 9
        for r in grid44:
            tgt = r.inputs["tan_alpha"]
            good = good and 0.05 <= tgt <= 0.95 and r.passed
        pi6 = [r for r in s.reports if r.formula_id == "pi6"]
        twin = [r for r in grid44 if r.inputs["tan_alpha"] == inv_sqrt3]
        good = good and len(pi6) == 1 and len(twin) == 1
        if pi6 and twin:
            identical = (pi6[0].lhs == twin[0].lhs
                         and pi6[0].rhs == twin[0].rhs)
            good = good and identical
        ok = ok and good
        d = s.to_dict()
        d["accepted"] = good
        suites.append(d)
    return {
        "criterion": "c09",
        "pass": ok,
        "tolerances": {"delta": "gamma_bar overshoot nonnegative",
                       "crossing": "curve below chord on the left of rho_bar, "
                                   "above on the right",
                       "angles": "all targets in [0.05, 0.95] pass",
                       "pi6": "dedicated path bit-identical to general path"},
        "data": {"suites": suites},
    }


def c10_weighted_equation(table, ctx):
    """Weighted integral equation solved to 1e-6 relative residual."""
    rows = []
    ok = True
    for T in (1e3, 1e4):
        sol = solve_integral_equation(ctx, T, 7.0)
        I = hl_integral(table, T)
        good = abs(sol.residual) <= 1e-6 * I and sol.monotone
        ok = ok and good
        rows.append({"T": T, "x": float(sol), "mu": sol.mu,
                     "w_value": sol.w_value, "residual": sol.residual,
                     "target": I, "bracket": list(sol.bracket),
                     "monotone": bool(sol.monotone), "accepted": good})
    return {
        "criterion": "c10",
        "pass": ok,
        "tolerances": {"residual": "|W(x) - I(T)| <= 1e-6 * I(T), coefficient 7"},
        "data": {"solutions": rows},
    }


CHECKS = [c01_evaluator, c02_zero_census, c03_residual, c04_ladder,
          c05_tangent, c06_median_slope, c07_intervals, c08_microscopic,
          c09_second_class, c10_weighted_equation]


def run_all(out_dir, cache_dir):
    """Run every check, write cNN.json files and summary.json, return the
    result dicts keyed by criterion id."""
    os.makedirs(out_dir, exist_ok=True)
    os.makedirs(cache_dir, exist_ok=True)
    table = _ensure_table(cache_dir)
    ctx = LadderContext(table=table)

    results = {}
    for fn in CHECKS:
        res = _jsonable(fn(table, ctx))
        cid = res["criterion"]
        _say(f"acceptance: {cid} {'pass' if res['pass'] else 'FAIL'}")
        with open(os.path.join(out_dir, f"{cid}.json"), "wb") as fh:
            fh.write(json.dumps(res, indent=2, sort_keys=True).encode())
            fh.write(b"\n")
        results[cid] = res

    summary = {
        "criteria": {cid: res["pass"] for cid, res in results.items()},
        "all_pass": all(res["pass"] for res in results.values()),
        "table_t_max": table.t_max,
        "config_digest": config_digest(table.cfg),
    }
    with open(os.path.join(out_dir, "summary.json"), "wb") as fh:
        fh.write(json.dumps(summary, indent=2, sort_keys=True).encode())
        fh.write(b"\n")
    return results


if __name__ == "__main__":
    if len(sys.argv) != 3:
        print(__doc__, file=sys.stderr)
        sys.exit(2)
    out = run_all(sys.argv[1], sys.argv[2])
    sys.exit(0 if all(r["pass"] for r in out.values()) else 1)
