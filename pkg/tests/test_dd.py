"""Hi/lo pair arithmetic: exactness of the error-free transforms and
accuracy of the compound operations against mpmath."""

from fractions import Fraction

import mpmath as mp
import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from jacobsladder import _dd

finite = st.floats(allow_nan=False, allow_infinity=False,
                   min_value=-1e150, max_value=1e150)


@given(finite, finite)
def test_two_sum_exact(a, b):
    s, err = _dd.two_sum(a, b)
    assert Fraction(s) + Fraction(err) == Fraction(a) + Fraction(b)


# two_prod is exact only while a*b stays in the normal range; keep the
# operands away from under/overflow (the library never leaves ~[1e-30, 1e30]).
prod_safe = st.floats(allow_nan=False, allow_infinity=False,
                      min_value=-1e150, max_value=1e150).filter(
    lambda x: x == 0.0 or 1e-140 < abs(x) < 1e140)


@given(prod_safe, prod_safe)
def test_two_prod_exact(a, b):
    p, err = _dd.two_prod(a, b)
    if not np.isfinite(p):
        return  # product overflowed, transform does not apply
    if a != 0.0 and b != 0.0 and abs(p) < 2.0 ** -1021:
        return  # product underflowed, error term not representable
    assert Fraction(p) + Fraction(err) == Fraction(a) * Fraction(b)


@given(finite, finite)
def test_dd_add_renormalized(a, b):
    h, l = _dd.dd_add(a, 0.0, b, 0.0)
    assert Fraction(h) + Fraction(l) == Fraction(a) + Fraction(b)
    if h != 0.0:
        assert abs(l) <= np.spacing(abs(h))


@given(st.floats(min_value=1e-100, max_value=1e100),
       st.floats(min_value=1e-100, max_value=1e100))
def test_dd_mul_accuracy(a, b):
    h, l = _dd.dd_mul(a, 0.0, b, 0.0)
    with mp.workdps(60):
        exact = mp.mpf(a) * mp.mpf(b)
        got = mp.mpf(h) + mp.mpf(l)
        assert abs(got - exact) <= abs(exact) * mp.mpf(2) ** -95


@given(st.floats(min_value=1e-6, max_value=1e7))
def test_dd_log_accuracy(x):
    h, l = _dd.dd_log(x)
    with mp.workdps(60):
        exact = mp.log(mp.mpf(x))
        got = mp.mpf(float(h)) + mp.mpf(float(l))
        # dd_log promises roughly 1e-28 relative
        assert abs(got - exact) <= max(abs(exact), 1) * mp.mpf("1e-27")


@given(st.floats(min_value=-6e5, max_value=6e5))
def test_dd_mod_2pi(x):
    h, l = _dd.dd_mod_2pi(x, 0.0)
    assert abs(h) <= np.pi + 1e-9
    with mp.workdps(60):
        exact = mp.mpf(x) - mp.nint(mp.mpf(x) / (2 * mp.pi)) * 2 * mp.pi
        got = mp.mpf(float(h)) + mp.mpf(float(l))
        # same residue class and near-exact reduction
        k = mp.nint((got - exact) / (2 * mp.pi))
        assert abs(got - exact - k * 2 * mp.pi) < mp.mpf("1e-25")


def test_dd_div_f_roundtrip():
    rng = np.random.default_rng(7)
    for _ in range(200):
        x = float(rng.uniform(-1e8, 1e8))
        y = float(rng.uniform(0.5, 2e6))
        qh, ql = _dd.dd_div_f(x, 0.0, y)
        with mp.workdps(60):
            back = (mp.mpf(qh) + mp.mpf(ql)) * mp.mpf(y)
            assert abs(back - mp.mpf(x)) <= abs(mp.mpf(x)) * mp.mpf(2) ** -100


def test_constant_pairs():
    with mp.workdps(60):
        for hi, lo, exact in [
            (_dd.TWO_PI_HI, _dd.TWO_PI_LO, 2 * mp.pi),
            (_dd.LN2_HI, _dd.LN2_LO, mp.log(2)),
            (_dd.LN_TWO_PI_HI, _dd.LN_TWO_PI_LO, mp.log(2 * mp.pi)),
            (_dd.PI_OVER_8_HI, _dd.PI_OVER_8_LO, mp.pi / 8),
        ]:
            got = mp.mpf(hi) + mp.mpf(lo)
            assert abs(got - exact) < mp.mpf("1e-32")
            assert hi == float(exact)  # hi is the correctly rounded half


def test_vectorized_matches_scalar():
    xs = np.array([1.5, 200.0, 12345.678, 99999.25])
    vh, vl = _dd.dd_log(xs)
    for i, x in enumerate(xs):
        sh, sl = _dd.dd_log(float(x))
        assert float(vh[i]) == float(sh) and float(vl[i]) == float(sl)
    vh, vl = _dd.dd_mod_2pi(xs * 7.3, np.zeros_like(xs))
    for i, x in enumerate(xs):
        sh, sl = _dd.dd_mod_2pi(float(x * 7.3), 0.0)
        assert float(vh[i]) == float(sh) and float(vl[i]) == float(sl)
