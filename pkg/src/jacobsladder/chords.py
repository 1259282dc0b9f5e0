"""Chords of the curve y = phi(T)/2 and their geometry.

The chord over [T, T+U] has slope tan_alpha = (phi(T+U) - phi(T))/(2U).
Three solvers live here: the rotating chord (given an anchor and a
target slope, find the width), parallel chords (given a slope and a
window, find intervals whose chord matches it), and the curve/chord
crossing point between two zeros.

The crossing scan needs phi on ten thousand points spanning a few
units, where calling the table-backed phi per point would repeat the
same tail quadrature over and over.  _phi_profile instead integrates
Z^2 once across the span with per-segment Gauss rules (the segments
are ~1e-4 units wide, so a 4-point rule is far below float64 noise),
accumulates, and inverts the ladder equation at every grid point.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoCrossingError, NotAttainedError
from .ladder import _invert, phi, phi_prime
from .quadrature import hl_integral
from .zeta import z_eval_vec

_GL4_X = (-0.8611363115940526, -0.3399810435848563,
          0.3399810435848563, 0.8611363115940526)
_GL4_W = (0.34785484513745385, 0.6521451548625461,
          0.6521451548625461, 0.34785484513745385)


@dataclass(frozen=True)
class Chord:
    """Chord of y = phi/2 over [T, T+U]; tan_alpha is its slope."""
    T: float
    U: float
    y_left: float
    y_right: float
    tan_alpha: float


@dataclass(frozen=True)
class Interval:
    N: float
    M: float

    def __post_init__(self):
        if not (self.N < self.M):
            raise DomainError(f"interval needs N < M, got [{self.N}, {self.M}]")


def chord(ctx, T, U):
    """The chord over [T, T+U].  Requires U > 0."""
    if not (U > 0.0):
        raise DomainError(f"chord width must be positive, got {U}")
    y_left = 0.5 * phi(ctx, T)
    y_right = 0.5 * phi(ctx, T + U)
    return Chord(T=T, U=U, y_left=y_left, y_right=y_right,
                 tan_alpha=(y_right - y_left) / U)


def _tan_alpha(ctx, anchor, y_anchor, t):
    return (0.5 * phi(ctx, t) - y_anchor) / (t - anchor)


def solve_chord_for_angle(ctx, anchor, tan_target, u_max):
    """Smallest U in (0, u_max] with tan_alpha(anchor, U) = tan_target.

    Scans at step u_max/1000 for a sign change of
    g(U) = tan_alpha - tan_target (the U -> 0 limit phi'(anchor)/2
    serves as the left sentinel), then bisects to |g| <= 1e-8.
    Raises NotAttainedError when the sweep never reaches the target.
    """
    if not (tan_target > 0.0 and u_max > 0.0):
        raise DomainError("need tan_target > 0 and u_max > 0")
    y_anchor = 0.5 * phi(ctx, anchor)
    step = u_max / 1000.0

    g_prev = 0.5 * phi_prime(ctx, anchor) - tan_target
    if g_prev == 0.0:
        return step * 1e-9  # target equals the initial slope; degenerate
    u_prev = 0.0
    swept_lo = swept_hi = g_prev + tan_target
    bracket = None
    for k in range(1, 1001):
        u = k * step
        g = _tan_alpha(ctx, anchor, y_anchor, anchor + u) - tan_target
        swept_lo = min(swept_lo, g + tan_target)
        swept_hi = max(swept_hi, g + tan_target)
        if g == 0.0:
            return u
        if (g < 0.0) != (g_prev < 0.0):
            bracket = (u_prev, u, g_prev)
            break
        u_prev, g_prev = u, g
    if bracket is None:
        raise NotAttainedError(
            f"tan_alpha never reached {tan_target:.6g} on (0, {u_max:.6g}]",
            swept=(swept_lo, swept_hi))

    lo, hi, glo = bracket
    g_mid = None
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        g_mid = _tan_alpha(ctx, anchor, y_anchor, anchor + mid) - tan_target
        if abs(g_mid) <= 1e-8 or hi - lo <= 1e-15 * max(1.0, hi):
            return mid
        if (g_mid < 0.0) == (glo < 0.0):
            lo, glo = mid, g_mid
        else:
            hi = mid
    raise NotAttainedError(
        f"bisection stalled at |g| = {abs(g_mid):.3g} for target "
        f"{tan_target:.6g}", swept=(swept_lo, swept_hi))


class ParallelChords(list):
    """Intervals whose chords match a requested slope; .shortfall is
    True when fewer than the requested count were found."""

    def __init__(self, intervals=(), shortfall=False):
        super().__init__(intervals)
        self.shortfall = shortfall


def find_parallel_chords(ctx, slope, window, count):
    """Up to count intervals [N, M] inside window with chord slope equal
    to slope within 1e-6.

    Left endpoints are a 64-seed grid across the window; for each seed
    the right endpoint is found by a 256-step scan plus bisection, the
    same monotone bracketing as the rotating chord.  A shortfall is a
    flag, not an error.
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    seeds = np.linspace(window.N, window.M, 65)[:64]
    found = []
    for n_left in seeds:
        if len(found) >= count:
            break
        y_left = 0.5 * phi(ctx, n_left)
        span = window.M - n_left
        if span <= 0.0:
            continue
        m_grid = n_left + span * np.arange(1, 257) / 256.0
        g_prev = None
        hit = None
        for m in m_grid:
            g = _tan_alpha(ctx, n_left, y_left, m) - slope
            if abs(g) <= 1e-9:
                hit = (m, None)
                break
            if g_prev is not None and (g < 0.0) != (g_prev[1] < 0.0):
                hit = (None, (g_prev[0], m, g_prev[1]))
                break
            g_prev = (m, g)
        if hit is None:
            continue
        m_exact, brk = hit
        if brk is not None:
            lo, hi, glo = brk
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                g = _tan_alpha(ctx, n_left, y_left, mid) - slope
                if abs(g) <= 1e-6 * max(1.0, abs(slope)) or hi - lo <= 1e-14 * hi:
                    m_exact = mid
                    break
                if (g < 0.0) == (glo < 0.0):
                    lo, glo = mid, g
                else:
                    hi = mid
            if m_exact is None:
                continue
        found.append(Interval(N=float(n_left), M=float(m_exact)))
    return ParallelChords(found, shortfall=len(found) < count)


class CrossingPoint(float):
    """Crossing abscissa rho_bar, carrying the premise checks."""

    def __new__(cls, x, left_negative, right_positive):
        obj = super().__new__(cls, x)
        obj.left_negative = left_negative
        obj.right_positive = right_positive
        return obj


def _phi_profile(ctx, grid):
    """phi at every point of an ascending grid sharing one tail.

    Integrates Z^2 across the grid with a per-segment 4-point Gauss
    rule (segments this narrow put the rule's error far below float64
    resolution), accumulates from I(grid[0]), and inverts the ladder
    equation pointwise.
    """
    base = hl_integral(ctx.table, grid[0])
    mids = 0.5 * (grid[:-1] + grid[1:])
    halfw = 0.5 * np.diff(grid)
    nodes = mids[:, None] + halfw[:, None] * np.asarray(_GL4_X)[None, :]
    zz = z_eval_vec(nodes.ravel(), ctx.table.cfg).reshape(nodes.shape)
    seg = halfw * ((zz * zz) @ np.asarray(_GL4_W))
    I = np.empty(len(grid))
    I[0] = base
    np.cumsum(seg, out=I[1:])
    I[1:] += base
    return np.array([2.0 * _invert(v, ctx) for v in I])


def find_crossing_point(ctx, gamma, gamma_bar):
    """First point in (gamma, gamma_bar) where the curve phi/2 meets the
    chord joining its values at the two zeros.

    The curve must lie below the chord just right of gamma and above it
    just left of gamma_bar; the crossing is the first - to + sign
    change of the difference, scanned at step (gamma_bar - gamma)/1e4
    and bisected to 1e-8.
    """
    if not (gamma < gamma_bar):
        raise DomainError("need gamma < gamma_bar")
    grid = np.linspace(gamma, gamma_bar, 10001)
    halfphi = 0.5 * _phi_profile(ctx, grid)
    s = (halfphi[-1] - halfphi[0]) / (gamma_bar - gamma)
    d = halfphi - (halfphi[0] + s * (grid - gamma))
    # endpoints are on the chord by construction
    inner = d[1:-1]
    left_negative = bool(inner[0] < 0.0)
    right_positive = bool(inner[-1] > 0.0)

    sign = np.sign(inner)
    sign[sign == 0.0] = 1.0
    flips = np.nonzero((sign[:-1] < 0.0) & (sign[1:] > 0.0))[0]
    if len(flips) == 0 or not left_negative:
        prof = [(float(grid[i]), float(d[i]))
                for i in range(1, len(grid) - 1, max(1, len(grid) // 32))]
        raise NoCrossingError(
            f"no - to + crossing between {gamma:.6f} and {gamma_bar:.6f}",
            profile=prof)
    i = flips[0] + 1  # index into grid
    lo, hi = grid[i], grid[i + 1]

    y0 = halfphi[0]

    def dval(t):
        return 0.5 * phi(ctx, t) - (y0 + s * (t - gamma))

    dlo = dval(lo)
    for _ in range(60):
        if hi - lo <= 1e-8:
            break
        mid = 0.5 * (lo + hi)
        dm = dval(mid)
        if (dm < 0.0) == (dlo < 0.0):
            lo, dlo = mid, dm
        else:
            hi = mid
    return CrossingPoint(0.5 * (lo + hi), left_negative=left_negative,
                         right_positive=right_positive)
