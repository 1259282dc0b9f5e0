"""Double-double (hi/lo float64 pair) arithmetic, vectorized over numpy arrays.

The phase theta(t) - t ln n reaches ~5e5 at t = 1e5, so plain float64 leaves
only ~1e-11 of absolute phase accuracy, far too coarse for the evaluator
error target of order t^(-11/4). Every quantity that enters a phase is
therefore carried as an unevaluated hi + lo sum with |lo| <= ulp(hi)/2,
using the classical error-free transformations (Dekker, Knuth). Only the
operations the phase pipeline needs are implemented.

All functions accept scalars or arrays and follow numpy broadcasting.
"""

import numpy as np

# Dekker splitter for 53-bit significands: 2^27 + 1.
_SPLIT = 134217729.0

TWO_PI_HI = 6.283185307179586
TWO_PI_LO = 2.4492935982947064e-16
_INV_TWO_PI = 0.15915494309189535

# ln 2 and ln 2pi as hi/lo pairs (hi correctly rounded, lo the residue).
LN2_HI = 0.6931471805599453
LN2_LO = 2.3190468138462996e-17
LN_TWO_PI_HI = 1.8378770664093456
LN_TWO_PI_LO = -7.756588316134483e-17

# pi/8 as a hi/lo pair, for the theta expansion.
PI_OVER_8_HI = 0.39269908169872414
PI_OVER_8_LO = 1.5308084989341915e-17


def two_sum(a, b):
    """Error-free a + b: returns (s, err) with s + err == a + b exactly."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    """two_sum assuming |a| >= |b|."""
    s = a + b
    err = b - (s - a)
    return s, err


def split(a):
    """Dekker split of a into hi + lo with 26/27-bit halves."""
    c = _SPLIT * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b, a_hi=None, a_lo=None, b_hi=None, b_lo=None):
    """Error-free a * b: returns (p, err) with p + err == a * b exactly.

    Pre-split halves may be passed when one factor is reused across many
    products (the split is the expensive part without an fma).
    """
    p = a * b
    if a_hi is None:
        a_hi, a_lo = split(a)
    if b_hi is None:
        b_hi, b_lo = split(b)
    err = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, err


def dd_add(xh, xl, yh, yl):
    """(xh,xl) + (yh,yl), renormalized."""
    sh, sl = two_sum(xh, yh)
    sl = sl + (xl + yl)
    return quick_two_sum(sh, sl)


def dd_add_f(xh, xl, y):
    """(xh,xl) + float y."""
    sh, sl = two_sum(xh, y)
    sl = sl + xl
    return quick_two_sum(sh, sl)


def dd_mul(xh, xl, yh, yl):
    """(xh,xl) * (yh,yl), renormalized."""
    ph, pl = two_prod(xh, yh)
    pl = pl + (xh * yl + xl * yh)
    return quick_two_sum(ph, pl)


def dd_mul_f(xh, xl, y, y_hi=None, y_lo=None):
    """(xh,xl) * exact float y."""
    ph, pl = two_prod(xh, y, b_hi=y_hi, b_lo=y_lo)
    pl = pl + xl * y
    return quick_two_sum(ph, pl)


def dd_div_f(xh, xl, y):
    """(xh,xl) / exact float y via one Newton correction."""
    q = xh / y
    rh, rl = two_prod(q, y)
    # residual = (xh - q*y) + xl, exact to working accuracy
    res = ((xh - rh) - rl) + xl
    return quick_two_sum(q, res / y)


def dd_mod_2pi(xh, xl):
    """Reduce (xh,xl) modulo 2*pi into roughly [-pi, pi].

    k stays below ~1e5 here, so k * TWO_PI is exactly representable in the
    two_prod sense and no Payne-Hanek style reduction is needed.
    """
    k = np.rint(xh * _INV_TWO_PI)
    ph, pl = two_prod(k, TWO_PI_HI)
    rh, rl = two_sum(xh, -ph)
    rl = rl + (xl - pl - k * TWO_PI_LO)
    return quick_two_sum(rh, rl)


# ---------------------------------------------------------------------------
# Logarithm. ln x = e ln 2 + ln c_j + ln(1 + s) with x = m 2^e, m in [0.5, 1),
# c_j the nearest of 64 anchor points, and |s| <= 2^-7 so thirteen Taylor
# terms reach ~1e-28. Anchor logs are generated once with mpmath.
# ---------------------------------------------------------------------------

_ANCHORS = None  # (c, ln_hi, ln_lo) arrays, built lazily


def _series_coeff(k):
    # (-1)^(k+1)/k as a hi/lo pair; a bare 1.0/k carries a 2^-53 relative
    # rounding that would cap the series at ~1e-23 absolute
    hi = 1.0 / k
    p, e = two_prod(hi, float(k))
    lo = ((1.0 - p) - e) / k
    if k % 2 == 0:
        return -hi, -lo
    return hi, lo


_SERIES_COEFFS = [None] + [_series_coeff(k) for k in range(1, 14)]


def _anchor_tables():
    global _ANCHORS
    if _ANCHORS is None:
        import mpmath as mp

        j = np.arange(64)
        c = (129 + 2 * j) / 256.0  # exact midpoints of the 64 bins of [0.5, 1)
        hi = np.empty(64)
        lo = np.empty(64)
        with mp.workdps(50):
            for i in range(64):
                v = mp.log(mp.mpf(c[i]))
                hi[i] = float(v)
                lo[i] = float(v - mp.mpf(hi[i]))
        _ANCHORS = (c, hi, lo)
    return _ANCHORS


def dd_log(x):
    """ln x as a hi/lo pair, elementwise; x must be positive and finite.

    Absolute accuracy ~1e-28 relative, which keeps t/2 * ln(t/2pi) good to
    ~1e-24 at the top of the desk range.
    """
    c_tab, lnc_hi, lnc_lo = _anchor_tables()
    x = np.asarray(x, dtype=np.float64)
    m, e = np.frexp(x)
    e = e.astype(np.float64)
    j = np.clip(((m - 0.5) * 128).astype(np.int64), 0, 63)
    c = c_tab[j]
    # s = (m - c)/c in dd; m - c is exact (same binade, Sterbenz)
    u = m - c
    sh, sl = dd_div_f(u, np.zeros_like(u), c)
    # ln(1+s) = sum_{k=1..13} (-1)^(k+1) s^k / k by Horner in dd
    th = np.full_like(m, _SERIES_COEFFS[13][0])
    tl = np.full_like(m, _SERIES_COEFFS[13][1])
    for k in range(12, 0, -1):
        th, tl = dd_mul(th, tl, sh, sl)
        ch, cl = _SERIES_COEFFS[k]
        th, tl = dd_add(th, tl, np.full_like(m, ch), np.full_like(m, cl))
    th, tl = dd_mul(th, tl, sh, sl)
    # ln x = e*ln2 + ln c + series
    rh, rl = dd_mul_f(LN2_HI, LN2_LO, e)
    rh, rl = dd_add(rh, rl, lnc_hi[j], lnc_lo[j])
    return dd_add(rh, rl, th, tl)
