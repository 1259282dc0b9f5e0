"""Generate src/jacobsladder/_rs_coeffs.py.

The asymptotic Z evaluator needs the remainder functions C_0(p) .. C_4(p)
on p in [0, 1]. Rather than transcribing derivative formulas from the
literature, each C_j is extracted numerically: at fixed p the scaled
remainder

    (Z(t) - mainsum(t)) * (-1)^(N-1) * (t/2pi)^(1/4),   t = 2pi (N+p)^2

equals sum_j C_j(p) (N+p)^(-j), so a high-precision Vandermonde solve over
a window of N values recovers the C_j(p) to ~1e-13 or better (mpmath's
siegelz supplies Z). The functions are then interpolated by Chebyshev
series on 65 Lobatto points and frozen as float64 arrays.

Cross-checks performed here:
  * C_0 against the closed form Psi(p) = cos(2pi(p^2-p-1/16))/cos(2pi p);
  * C_1 against -Psi'''(p)/(96 pi^2);
  * the parity C_j(1-p) = (-1)^j C_j(p) (used to halve the work, then
    verified on the fitted series);
  * Chebyshev tail decay (series are truncated at 1e-18 relative).

Run from the repository root:  python3 tools/gen_rs_coeffs.py
"""

import time

import mpmath as mp
import numpy as np
from numpy.polynomial import chebyshev

mp.mp.dps = 60

N_LOBATTO = 64          # interpolation on N_LOBATTO + 1 points
FIT_WINDOW = range(34, 46)
FIT_ORDERS = 12
N_KEEP = 5              # C_0 .. C_4
TRUNC_REL = 1e-18

OUT_PATH = "src/jacobsladder/_rs_coeffs.py"


def mainsum(t, n_cut):
    th = mp.siegeltheta(t)
    s = mp.mpf(0)
    for n in range(1, n_cut + 1):
        s += mp.cos(th - t * mp.log(n)) / mp.sqrt(n)
    return 2 * s


def remainder_scaled(p, n):
    # the cut is part of the definition: p in [0, 1) goes with cut n,
    # so passing n explicitly keeps the endpoint p = 0 well defined
    tau = n + p
    t = 2 * mp.pi * tau ** 2
    z = mp.siegelz(t)
    ms = mainsum(t, n)
    # (t/2pi)^(1/4) = sqrt(tau)
    return (z - ms) * (-1) ** (n - 1) * mp.sqrt(tau)


def fit_c(p):
    """C_0(p) .. C_{FIT_ORDERS-1}(p) by a square Vandermonde solve."""
    p = mp.mpf(p)
    rows, rhs = [], []
    for n in FIT_WINDOW:
        tau = n + p
        rows.append([tau ** (-j) for j in range(FIT_ORDERS)])
        rhs.append(remainder_scaled(p, n))
    sol = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
    return [float(sol[j]) for j in range(N_KEEP)]


def psi(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def main():
    t0 = time.time()
    x = np.cos(np.pi * np.arange(N_LOBATTO + 1) / N_LOBATTO)
    p_nodes = (1.0 + x) / 2.0

    # fit only p <= 0.5 (p = 1 sits on a cut boundary and is reached by
    # the mirror), fill the rest through C_j(1-p) = (-1)^j C_j(p)
    vals = np.empty((N_LOBATTO + 1, N_KEEP))
    for i in range(N_LOBATTO // 2, N_LOBATTO + 1):
        c = fit_c(float(p_nodes[i]))
        vals[i] = c
        mirror = N_LOBATTO - i
        vals[mirror] = [cj * (-1) ** j for j, cj in enumerate(c)]
        print(f"node {i:2d}  p={p_nodes[i]:.6f}  "
              f"C0={c[0]:+.6e}  C4={c[4]:+.6e}", flush=True)

    series = []
    for j in range(N_KEEP):
        coef = chebyshev.chebfit(x, vals[:, j], N_LOBATTO)
        scale = np.abs(coef).max()
        keep = np.nonzero(np.abs(coef) > TRUNC_REL * scale)[0]
        coef = coef[: keep[-1] + 1]
        series.append(coef)
        print(f"C{j}: {len(coef)} Chebyshev coefficients, "
              f"tail at {np.abs(coef[-1]) / scale:.1e} relative")

    # cross-checks
    print("cross-checking against closed forms...")
    worst0 = worst1 = 0.0
    for p in (0.05, 0.17, 0.31, 0.42, 0.55, 0.63, 0.88, 0.97):
        u = 2 * p - 1
        c0 = chebyshev.chebval(u, series[0])
        c1 = chebyshev.chebval(u, series[1])
        ref0 = float(psi(mp.mpf(p)))
        ref1 = float(-mp.diff(psi, mp.mpf(p), 3) / (96 * mp.pi ** 2))
        worst0 = max(worst0, abs(c0 - ref0))
        worst1 = max(worst1, abs(c1 - ref1))
    print(f"  max |C0 - Psi| = {worst0:.2e}, max |C1 + Psi'''/96pi^2| = {worst1:.2e}")
    assert worst0 < 1e-13 and worst1 < 1e-13

    lines = [
        '"""Chebyshev tables for the remainder functions of the asymptotic Z',
        "evaluator, on the fractional-part variable p in [0, 1] mapped to",
        "u = 2p - 1. Generated by tools/gen_rs_coeffs.py; do not edit by hand.",
        '"""',
        "",
        "import numpy as np",
        "",
        "RS_CHEB_COEFFS = [",
    ]
    for j, coef in enumerate(series):
        lines.append(f"    # C_{j}")
        lines.append("    np.array([")
        for v in coef:
            lines.append(f"        {v!r},")
        lines.append("    ]),")
    lines.append("]")
    lines.append("")
    with open(OUT_PATH, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {OUT_PATH} in {time.time() - t0:.0f} s")


if __name__ == "__main__":
    main()
