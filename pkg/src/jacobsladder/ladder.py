"""The ladder function phi and its calculus.

phi(T) is defined implicitly by

    (phi/2) log(phi/2) + (c - log 2pi) (phi/2) + c0 = I(T),

with I(T) the cumulative integral of Z^2 and c Euler's constant.  The
left side, as a function of u = phi/2, has derivative log u - a with
a = log 2pi - 1 - c, so it is strictly increasing for u > e^a and the
equation has exactly one root on that branch whenever
I(T) - c0 > -e^a.  All heights of interest sit far inside that region.

solve_integral_equation treats the related exponentially weighted
equation: find x with

    W(x) = int_0^{mu(x)} Z(t)^2 exp(-2t/x) dt = I(T),
    mu(x) = mu_coefficient * x * log x.

W is evaluated from per-cell polynomial moments of Z^2 (built once per
solve), which turns every trial x into a cheap weighted sum instead of
a fresh quadrature; only the partial cell at the cut is integrated
fresh.  The weight makes the tail beyond ~8 x negligible, so moments
are built on [0, 8.3 x_hi] and truncation contributes relative error
below 1e-7.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (BracketError, DomainError, InflectionNotFoundError,
                     NoRootError, PrecisionError)
from .quadrature import (EULER_GAMMA, LN_TWO_PI, IntegralTable,
                         build_weighted_moments, hl_integral,
                         weighted_integral)
from .zeta import z_eval

_TRUNC_MULT = 8.3
_WIDE_MULT = 3.3


@dataclass(frozen=True)
class LadderContext:
    """Everything a ladder computation needs: the integral table plus
    the constants of the defining equation."""
    table: IntegralTable
    c: float = EULER_GAMMA
    c0: float = 0.0
    inversion_tol: float = 1e-10
    a: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "a", LN_TWO_PI - 1.0 - self.c)


def _ladder_lhs(u, ctx):
    return u * math.log(u) + (ctx.c - LN_TWO_PI) * u + ctx.c0


def _invert(I, ctx):
    """Solve u log u + (c - log 2pi) u + c0 = I on the increasing branch."""
    ea = math.exp(ctx.a)
    if not (I - ctx.c0 > -ea):
        raise NoRootError(
            f"no root on the increasing branch: I - c0 = {I - ctx.c0:.6g} "
            f"<= -e^a = {-ea:.6g}")
    lo = ea
    hi = max(4.0, 2.0 * ea)
    for _ in range(200):
        if _ladder_lhs(hi, ctx) >= I:
            break
        hi *= 2.0
    else:
        raise PrecisionError(f"could not bracket the ladder root for I={I}")
    flo = _ladder_lhs(lo, ctx) - I
    for _ in range(80):
        if hi - lo <= ctx.inversion_tol * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        fm = _ladder_lhs(mid, ctx) - I
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    u = 0.5 * (lo + hi)
    # a couple of Newton pulls sharpen the bisection result to the
    # float64 floor; the derivative log u - a is safely positive here
    for _ in range(3):
        slope = math.log(u) - ctx.a
        if slope <= 0.0:
            break
        step = (_ladder_lhs(u, ctx) - I) / slope
        u -= step
        if abs(step) <= 1e-16 * u:
            break
    resid = abs(_ladder_lhs(u, ctx) - I)
    if resid > 1e-6 * max(1.0, abs(I)):
        raise PrecisionError(
            f"ladder inversion stalled: residual {resid:.3g} at I={I:.6g}")
    return u


def phi(ctx, T):
    """The ladder value phi(T).  Requires T >= 100."""
    if T < 100.0:
        raise DomainError(f"phi requires T >= 100, got {T}")
    I = hl_integral(ctx.table, T)
    return 2.0 * _invert(I, ctx)


def phi_many(ctx, heights):
    """phi at each height of an array; plain loop, returns ndarray."""
    out = np.empty(len(heights))
    for i, t in enumerate(heights):
        out[i] = phi(ctx, t)
    return out


def phi_prime(ctx, t):
    """Exact derivative 2 Z(t)^2 / (log(phi/2) - a).

    Differentiating the defining equation gives
    (log u - a) du/dT = Z(T)^2 with u = phi/2.
    """
    u = 0.5 * phi(ctx, t)
    zz = z_eval(t, ctx.table.cfg)
    return 2.0 * zz * zz / (math.log(u) - ctx.a)


def phi_prime_central(ctx, t, h=1e-3):
    """Finite-difference sanity estimate of phi'."""
    return (phi(ctx, t + h) - phi(ctx, t - h)) / (2.0 * h)


@dataclass(frozen=True)
class InflectionPoint:
    rho: float
    phi_rho: float
    phi_prime_rho: float


def find_inflection(ctx, gamma, gamma_prime):
    """First inflection of phi in (gamma, gamma_prime).

    Scans for the sign change of phi'' from + to - with step
    max(1e-3, gap/200) and refines it to 1e-6.  phi'' is estimated by
    central differences of the exact phi'.
    """
    if not (gamma < gamma_prime):
        raise DomainError("need gamma < gamma_prime")
    gap = gamma_prime - gamma
    h = max(1e-3, gap / 200.0)
    delta = min(1e-4, h / 8.0)

    def second(t):
        return (phi_prime(ctx, t + delta) - phi_prime(ctx, t - delta)) \
            / (2.0 * delta)

    profile = []
    t_prev = gamma + h
    s_prev = second(t_prev)
    profile.append((t_prev, s_prev))
    t = t_prev + h
    found = None
    while t < gamma_prime - 0.5 * h:
        s = second(t)
        profile.append((t, s))
        if s_prev > 0.0 and s <= 0.0:
            found = (t_prev, t)
            break
        t_prev, s_prev = t, s
        t += h
    if found is None:
        raise InflectionNotFoundError(
            f"no + to - sign change of phi'' in ({gamma}, {gamma_prime})",
            profile=profile)
    lo, hi = found
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if second(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    rho = 0.5 * (lo + hi)
    return InflectionPoint(rho=rho, phi_rho=phi(ctx, rho),
                           phi_prime_rho=phi_prime(ctx, rho))


class EqSolution(float):
    """Root of the weighted integral equation, with diagnostics."""

    def __new__(cls, x, mu, w_value, residual, bracket, monotone):
        obj = super().__new__(cls, x)
        obj.mu = mu
        obj.w_value = w_value
        obj.residual = residual
        obj.bracket = bracket
        obj.monotone = monotone
        return obj


def _analytic_seed(I, c):
    """Solve (x/2)(log(x/(4pi)) + c) = I, the mean-density model of W."""
    x = max(8.0, 2.0 * I / max(1.0, math.log(max(I, 2.0))))
    for _ in range(60):
        g = math.log(x / (4.0 * math.pi)) + c
        f = 0.5 * x * g - I
        fp = 0.5 * (g + 1.0)
        step = f / fp
        x -= step
        if abs(step) <= 1e-12 * x:
            break
    return x


def solve_integral_equation(ctx, T, mu_coefficient):
    """Find x with int_0^{mu(x)} Z^2 exp(-2t/x) dt = I(T).

    mu(x) = mu_coefficient * x * log x.  Requires T >= 100 and a
    positive coefficient.  The returned EqSolution is the root as a
    float, carrying .mu, .w_value, .residual, .bracket and .monotone.
    """
    if T < 100.0:
        raise DomainError(f"solve_integral_equation requires T >= 100, got {T}")
    if not (mu_coefficient > 0.0):
        raise DomainError("mu_coefficient must be positive")
    I = hl_integral(ctx.table, T)
    cfg = ctx.table.cfg

    x_est = _analytic_seed(I, ctx.c)
    lo = 0.85 * x_est
    hi = 1.18 * x_est

    wm = build_weighted_moments(_TRUNC_MULT * hi, _WIDE_MULT * hi, cfg)

    def W(x):
        mu = mu_coefficient * x * math.log(x)
        cut = min(mu, _TRUNC_MULT * x)
        return weighted_integral(wm, x, cut, cfg)

    flo = W(lo) - I
    fhi = W(hi) - I
    scanned = [(lo, flo + I), (hi, fhi + I)]
    widen = 0
    while flo * fhi > 0.0:
        widen += 1
        if widen > 8:
            raise BracketError(
                f"could not bracket the weighted-equation root near "
                f"x ~ {x_est:.6g}", scanned=scanned)
        lo /= 1.5
        hi *= 1.5
        if _TRUNC_MULT * hi > wm.t_end:
            wm = build_weighted_moments(_TRUNC_MULT * hi, _WIDE_MULT * hi, cfg)
        flo = W(lo) - I
        fhi = W(hi) - I
        scanned.append((lo, flo + I))
        scanned.append((hi, fhi + I))
    bracket = (lo, hi)

    for _ in range(60):
        if hi - lo <= 1e-13 * hi:
            break
        mid = 0.5 * (lo + hi)
        fm = W(mid) - I
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    x = 0.5 * (lo + hi)
    for _ in range(3):
        denom = fhi - flo
        if denom == 0.0:
            break
        cand = lo - flo * (hi - lo) / denom
        if not (lo < cand < hi):
            break
        fc = W(cand) - I
        x = cand
        if (fc < 0.0) == (flo < 0.0):
            lo, flo = cand, fc
        else:
            hi, fhi = cand, fc

    wx = W(x)
    resid = abs(wx - I)
    if resid > 1e-6 * max(1.0, I):
        raise PrecisionError(
            f"weighted equation residual {resid:.3g} exceeds tolerance "
            f"{1e-6 * max(1.0, I):.3g}")

    xs = np.geomspace(bracket[0], bracket[1], 16)
    ws = [W(v) for v in xs]
    monotone = all(ws[i] <= ws[i + 1] + 1e-9 * abs(ws[i + 1])
                   for i in range(15))

    return EqSolution(x, mu=mu_coefficient * x * math.log(x), w_value=wx,
                      residual=resid, bracket=bracket, monotone=monotone)
