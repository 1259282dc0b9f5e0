"""Panel quadrature for Z^2 and the checkpointed second-moment table.

The integral I(T) = int_0^T Z^2(t) dt is the expensive asset everything
else stands on, so this module is built around two ideas:

  * a fixed absolute panel layout. The axis is cut into unit cells
    [k, k+1); each cell carries a panel partition that depends only on k.
    Any requested range integrates the cells it overlaps, cutting only
    the two boundary panels. Two overlapping requests therefore share
    bit-identical panel values on their common full panels, so
    differences like I(T+U) - I(T) cancel the shared quadrature error
    exactly instead of accumulating it.

  * exactly rounded accumulation. Node sums, panel sums and cell sums
    go through math.fsum, which makes every reported value independent
    of chunking and safe to reproduce run over run.

Per panel the rule is fixed-order Gauss-Legendre (8 nodes) plus one
refinement pass (the two halves at the same order); the refined value is
returned and |base - refined| serves as the error estimate. Panels are
sized to at most a quarter of the local mean zero gap 2pi/ln(t/2pi).

Below cfg.min_height the asymptotic evaluator is invalid; that head is
integrated once with the arbitrary-precision oracle and cached.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ToleranceNotMetError
from .zeta import DEFAULT_CFG, EULER_GAMMA, LN_TWO_PI, TWO_PI, RSConfig, z_eval_vec

# Gauss-Legendre nodes and weights, n = 8, on [-1, 1]; frozen so the
# layout can never drift with a library update.
_GL8_X = np.array([
    -0.9602898564975363,
    -0.7966664774136267,
    -0.525532409916329,
    -0.1834346424956498,
    0.1834346424956498,
    0.525532409916329,
    0.7966664774136267,
    0.9602898564975363,
])
_GL8_W = np.array([
    0.10122853629037626,
    0.22238103445337448,
    0.31370664587788727,
    0.362683783378362,
    0.362683783378362,
    0.31370664587788727,
    0.22238103445337448,
    0.10122853629037626,
])

# cells per evaluation batch; results do not depend on this (fsum), it
# only bounds the memory of one vectorized Z call
_CHUNK_CELLS = 128

_HEAD_CACHE = {}


def _cell_panel_count(k):
    """Number of equal panels for unit cell [k, k+1)."""
    t_hi = k + 1.0
    # below t = 2*pi*e the mean-gap formula loses meaning; clamping the
    # log at 1 caps the panel width instead of letting it blow up
    ln_term = max(1.0, math.log(t_hi / TWO_PI))
    width = (TWO_PI / ln_term) / 4.0
    return max(1, int(math.ceil(1.0 / width)))


def _oracle_segment(lo, hi, digits):
    """int_lo^hi Z^2 dt by the arbitrary-precision oracle, cached."""
    key = (float(lo), float(hi), int(digits))
    cached = _HEAD_CACHE.get(key)
    if cached is not None:
        return cached
    import mpmath as mp

    with mp.workdps(digits):
        v = mp.quad(lambda t: mp.siegelz(t) ** 2, [mp.mpf(float(lo)), mp.mpf(float(hi))])
        out = float(v)
    _HEAD_CACHE[key] = out
    return out


def _panel_values(plo, phi, cfg):
    """Refined values and error estimates for panels [plo[i], phi[i]].

    Returns (values, estimates) as float lists in input order. The
    refined value is the sum of the two half-panels; the estimate is the
    difference against the single full-width rule.
    """
    plo = np.asarray(plo, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    n = plo.size
    mid = 0.5 * (plo + phi)
    half = 0.5 * (phi - plo)
    lmid = 0.5 * (plo + mid)
    lhalf = 0.5 * (mid - plo)
    rmid = 0.5 * (mid + phi)
    rhalf = 0.5 * (phi - mid)

    ts = np.concatenate([
        mid[:, None] + half[:, None] * _GL8_X,
        lmid[:, None] + lhalf[:, None] * _GL8_X,
        rmid[:, None] + rhalf[:, None] * _GL8_X,
    ], axis=1)
    z = z_eval_vec(ts.ravel(), cfg)
    z2 = (z * z).reshape(n, 24)

    w = _GL8_W
    values, estimates = [], []
    for i in range(n):
        row = z2[i]
        base = math.fsum([row[j] * w[j] for j in range(8)]) * half[i]
        left = math.fsum([row[8 + j] * w[j] for j in range(8)]) * lhalf[i]
        right = math.fsum([row[16 + j] * w[j] for j in range(8)]) * rhalf[i]
        refined = left + right
        values.append(refined)
        estimates.append(abs(base - refined))
    return values, estimates


def _range_panels(lo, hi):
    """The panel layout covering [lo, hi]: two float lists (plo, phi).

    Panels come from the fixed per-cell partitions; only the panels
    straddling lo or hi are cut.
    """
    plo_all, phi_all = [], []
    k0 = int(math.floor(lo))
    k1 = int(math.ceil(hi))
    for k in range(k0, k1):
        clo = max(float(k), lo)
        chi = min(float(k + 1), hi)
        if chi <= clo:
            continue
        m = _cell_panel_count(k)
        for j in range(m):
            e0 = k + j / m
            e1 = k + (j + 1) / m
            a = max(e0, clo)
            b = min(e1, chi)
            if b > a:
                plo_all.append(a)
                phi_all.append(b)
    return plo_all, phi_all


def _integrate_range(lo, hi, cfg):
    """(value, error_estimate, n_panels, worst_panel) over [lo, hi].

    Splits off the oracle head below cfg.min_height, then runs the fixed
    panel layout. The total is one fsum over every part in ascending
    order.
    """
    lo = float(lo)
    hi = float(hi)
    if hi <= lo:
        return 0.0, 0.0, 0, None

    parts, ests = [], []
    n_panels = 0
    worst = None
    worst_est = -1.0

    mh = float(cfg.min_height)
    rs_lo = lo
    if lo < mh:
        head_hi = min(hi, mh)
        parts.append(_oracle_segment(lo, head_hi, cfg.oracle_digits))
        n_panels += 1
        rs_lo = head_hi

    if hi > rs_lo:
        plo, phi = _range_panels(rs_lo, hi)
        for start in range(0, len(plo), _CHUNK_CELLS * 8):
            stop = min(start + _CHUNK_CELLS * 8, len(plo))
            vals, errs = _panel_values(plo[start:stop], phi[start:stop], cfg)
            parts.extend(vals)
            ests.extend(errs)
            for i, e in enumerate(errs):
                if e > worst_est:
                    worst_est = e
                    worst = (plo[start + i], phi[start + i])
        n_panels += len(plo)

    return math.fsum(parts), math.fsum(ests), n_panels, worst


def integrate_z2(a, b, tol, cfg=DEFAULT_CFG):
    """int_a^b Z^2(t) dt with total estimated error at most tol."""
    a = float(a)
    b = float(b)
    if not (0.0 <= a <= b):
        raise DomainError(f"need 0 <= a <= b, got a={a}, b={b}")
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    if a == b:
        return 0.0
    value, est, _, worst = _integrate_range(a, b, cfg)
    if est > tol:
        raise ToleranceNotMetError(
            f"integrate_z2({a}, {b}): estimated error {est:.3e} exceeds tol {tol:.3e}"
            f" (worst panel {worst})",
            achieved=est,
            panel=worst,
        )
    return value


@dataclass(frozen=True)
class IntegralTable:
    """Checkpointed cumulative I(t) on an ascending grid."""

    grid: np.ndarray
    values: np.ndarray
    spacing: float
    cfg: RSConfig
    quad_tol: float

    def __post_init__(self):
        if self.grid.shape != self.values.shape or self.grid.ndim != 1:
            raise DomainError("grid/values must be matching 1-d arrays")
        if self.grid[0] != 0.0 or self.values[0] != 0.0:
            raise DomainError("table must start at (0, 0)")
        if not (self.spacing > 0.0):
            raise DomainError("spacing must be positive")
        if np.any(np.diff(self.grid) <= 0.0):
            raise DomainError("grid must be strictly increasing")
        if np.any(np.diff(self.values) <= 0.0):
            raise DomainError("values must be strictly increasing")

    @property
    def t_max(self):
        return float(self.grid[-1])


@dataclass(frozen=True)
class ResidualRecord:
    """I(T) against the second-moment main term."""

    T: float
    I: float
    main_term: float
    R: float


def main_term(T):
    """T ln T + (2c - 1 - ln 2pi) T, the smooth part of I(T)."""
    T = float(T)
    if T == 0.0:
        return 0.0
    return T * math.log(T) + (2.0 * EULER_GAMMA - 1.0 - LN_TWO_PI) * T


def build_integral_table(t_max, spacing=1.0, quad_tol=1e-8, cfg=DEFAULT_CFG,
                         resume_from=None, progress=None, workers=1):
    """Cumulative table of I at 0, spacing, 2*spacing, ... >= t_max.

    The error budget is quad_tol per panel: each grid gap must come in
    under quad_tol times its panel count or the build aborts with the
    offending panel. With resume_from, a previously built table with
    identical parameters seeds the prefix bit-exactly and only the new
    gaps are integrated. workers > 1 farms the per-gap integrals out to
    a process pool; gaps are independent and assembled in grid order, so
    the result is bit-identical to the serial build.
    """
    t_max = float(t_max)
    spacing = float(spacing)
    if t_max < 100.0:
        raise DomainError(f"t_max must be >= 100, got {t_max}")
    if not (0.0 < spacing <= 10.0):
        raise DomainError(f"spacing must be in (0, 10], got {spacing}")
    if not quad_tol > 0.0:
        raise DomainError(f"quad_tol must be positive, got {quad_tol}")

    n = int(math.ceil(t_max / spacing - 1e-12))
    while n * spacing < t_max:
        n += 1

    vals = [0.0]
    if resume_from is not None:
        r = resume_from
        if r.spacing != spacing or r.quad_tol != quad_tol or r.cfg != cfg:
            raise DomainError("resume table was built with different parameters")
        if len(r.grid) >= n + 1:
            return r
        vals = [float(v) for v in r.values]

    start = len(vals) - 1
    if workers > 1 and n - start > 2 * workers:
        results = _pool_gap_results(start, n, spacing, cfg, workers, progress)
    else:
        results = None
    for i in range(start, n):
        g0 = i * spacing
        g1 = (i + 1) * spacing
        if results is not None:
            value, est, npan, worst = results[i - start]
        else:
            value, est, npan, worst = _integrate_range(g0, g1, cfg)
        budget = quad_tol * max(1, npan)
        if est > budget:
            raise ToleranceNotMetError(
                f"table gap [{g0}, {g1}]: estimated error {est:.3e} exceeds "
                f"budget {budget:.3e} (worst panel {worst})",
                achieved=est,
                panel=worst,
            )
        vals.append(vals[-1] + value)
        if progress is not None and results is None and (
                (i + 1) % 1024 == 0 or i + 1 == n):
            progress(i + 1, n)

    grid = spacing * np.arange(n + 1, dtype=np.float64)
    values = np.array(vals, dtype=np.float64)
    grid.setflags(write=False)
    values.setflags(write=False)
    return IntegralTable(grid=grid, values=values, spacing=spacing,
                         cfg=cfg, quad_tol=quad_tol)


def _gap_job(args):
    i, spacing, cfg = args
    return _integrate_range(i * spacing, (i + 1) * spacing, cfg)


def _pool_gap_results(start, n, spacing, cfg, workers, progress):
    import multiprocessing

    jobs = [(i, spacing, cfg) for i in range(start, n)]
    results = []
    with multiprocessing.Pool(processes=workers) as pool:
        for k, res in enumerate(pool.imap(_gap_job, jobs, chunksize=64)):
            results.append(res)
            if progress is not None and ((k + 1) % 1024 == 0
                                         or k + 1 == len(jobs)):
                progress(start + k + 1, n)
    return results


def hl_integral(table, T):
    """I(T) = checkpoint value below T plus a fresh tail integral."""
    T = float(T)
    if not (0.0 <= T <= table.t_max):
        raise DomainError(f"T={T} outside table range [0, {table.t_max}]")
    i = int(np.searchsorted(table.grid, T, side="right")) - 1
    g = float(table.grid[i])
    base = float(table.values[i])
    if g == T:
        return base
    tail, _, _, _ = _integrate_range(g, T, table.cfg)
    return base + tail


def hl_residual(table, T):
    """ResidualRecord at T: R = I - T ln T - (2c - 1 - ln 2pi) T."""
    I = hl_integral(table, T)
    m = main_term(T)
    return ResidualRecord(T=float(T), I=I, main_term=m, R=I - m)


# ---------------------------------------------------------------------------
# weighted quadrature support for the experimental integral-equation solver
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightedMoments:
    """Per-cell monomial moments of Z^2 for exponentially weighted sums.

    For cell [left, left+width) the stored m-th moment is
    int Z^2(t) ((t - left)/width)^m dt by single-pass GL8 panels. Any
    integral int Z^2(t) exp(-2t/x) dt then reduces to a weighted sum of
    moments per cell, with the weight Taylor-expanded inside the cell
    (the cells are narrow against the scale x/2 of the weight).
    """

    lefts: np.ndarray
    widths: np.ndarray
    moments: np.ndarray  # shape (4, n_cells)
    t_end: float


def build_weighted_moments(t_end, wide_from, cfg=DEFAULT_CFG):
    """Moment table on [0, t_end): unit cells, 4-unit cells past wide_from.

    wide_from marks where the exponential weight of the caller is already
    a few e-foldings down, so panels there may be coarser; it is rounded
    up to the next integer boundary. The head below cfg.min_height uses
    the oracle integrand at the same nodes.
    """
    t_end = float(t_end)
    if t_end <= 10.0:
        raise DomainError(f"t_end must exceed 10, got {t_end}")
    k_wide = int(math.ceil(max(10.0, min(wide_from, t_end))))

    lefts, widths = [], []
    k = 0
    while k < k_wide:
        lefts.append(float(k))
        widths.append(1.0)
        k += 1
    while k < int(math.ceil(t_end)):
        lefts.append(float(k))
        widths.append(4.0)
        k += 4

    n_cells = len(lefts)
    moments = np.zeros((4, n_cells))
    mh = float(cfg.min_height)

    # oracle head, unit cells with plain GL8 (the integrand is smooth
    # and zero-free this low)
    import mpmath as mp

    head_end = min(int(mh), k_wide)
    with mp.workdps(cfg.oracle_digits):
        for ci in range(head_end):
            nodes = lefts[ci] + 0.5 + 0.5 * _GL8_X
            z2 = np.array([float(mp.siegelz(mp.mpf(float(t))) ** 2) for t in nodes])
            s = nodes - lefts[ci]
            for m in range(4):
                moments[m, ci] = math.fsum(
                    [z2[j] * _GL8_W[j] * s[j] ** m for j in range(8)]) * 0.5

    # asymptotic-range cells, GL8 panels at the standard density
    node_t, node_w, node_cell = [], [], []
    for ci in range(head_end, n_cells):
        left = lefts[ci]
        width = widths[ci]
        if width == 1.0:
            m = _cell_panel_count(int(left))
        else:
            # wide cells sit where the caller's weight is several
            # e-foldings down; a quarter of the standard panel density
            # is enough there
            c = _cell_panel_count(int(left + width) - 1)
            m = max(1, int(math.ceil(width * c / 4.0)))
        for j in range(m):
            a = left + width * j / m
            b = left + width * (j + 1) / m
            pm = 0.5 * (a + b)
            ph = 0.5 * (b - a)
            node_t.append(pm + ph * _GL8_X)
            node_w.append(ph * _GL8_W)
            node_cell.append(np.full(8, ci, dtype=np.int64))
    if node_t:
        node_t = np.concatenate(node_t)
        node_w = np.concatenate(node_w)
        node_cell = np.concatenate(node_cell)
        chunk = 200_000
        z2 = np.empty_like(node_t)
        for s0 in range(0, node_t.size, chunk):
            s1 = min(s0 + chunk, node_t.size)
            zz = z_eval_vec(node_t[s0:s1], cfg)
            z2[s0:s1] = zz * zz
        srel = (node_t - np.asarray(lefts)[node_cell]) / np.asarray(widths)[node_cell]
        base = z2 * node_w
        for m in range(4):
            moments[m, head_end:] += np.bincount(
                node_cell - head_end, weights=base * srel ** m,
                minlength=n_cells - head_end)

    lefts = np.array(lefts)
    widths = np.array(widths)
    lefts.setflags(write=False)
    widths.setflags(write=False)
    moments.setflags(write=False)
    return WeightedMoments(lefts=lefts, widths=widths, moments=moments,
                           t_end=float(lefts[-1] + widths[-1]))


def weighted_integral(wm, x, cut, cfg=DEFAULT_CFG):
    """int_0^cut Z^2(t) exp(-2t/x) dt from a WeightedMoments table.

    Full cells use the third-order in-cell expansion of the weight about
    the cell's left edge; the single cell containing the cut is done
    fresh with the exact weight at its nodes.
    """
    x = float(x)
    cut = float(cut)
    if cut <= 0.0:
        return 0.0
    if cut > wm.t_end:
        raise DomainError(f"cut {cut} beyond moment table end {wm.t_end}")

    rights = wm.lefts + wm.widths
    full = rights <= cut
    u = -2.0 * wm.widths[full] / x
    m0, m1, m2, m3 = (wm.moments[m][full] for m in range(4))
    series = m0 + u * (m1 + u * (0.5 * m2 + u * (m3 / 6.0)))
    total = float(np.add.reduce(series * np.exp(-2.0 * wm.lefts[full] / x)))

    # partial cell at the cut, exact weight
    idx = np.nonzero(~full)[0]
    if idx.size:
        ci = int(idx[0])
        left = float(wm.lefts[ci])
        if cut > left:
            plo, phi = _range_panels(left, cut)
            plo = np.asarray(plo)
            phi = np.asarray(phi)
            mid = 0.5 * (plo + phi)
            half = 0.5 * (phi - plo)
            ts = (mid[:, None] + half[:, None] * _GL8_X).ravel()
            if left < cfg.min_height:
                import mpmath as mp

                with mp.workdps(cfg.oracle_digits):
                    z = np.array([float(mp.siegelz(mp.mpf(float(t)))) for t in ts])
            else:
                z = z_eval_vec(ts, cfg)
            z2w = z * z * np.exp(-2.0 * ts / x)
            w = np.tile(_GL8_W, plo.size) * np.repeat(half, 8)
            total += math.fsum([z2w[j] * w[j] for j in range(z2w.size)])
    return total
