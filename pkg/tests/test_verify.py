"""Verification reports: schema, bounds, the two suites, special cases."""

import math

import numpy as np
import pytest

from jacobsladder.errors import DomainError
from jacobsladder.ladder import LadderContext, phi
from jacobsladder.quadrature import EULER_GAMMA, hl_integral
from jacobsladder.verify import (SCHEMA_VERSION, SuiteReport,
                                 VerificationReport, asymptotic_tan,
                                 balasubramanian_rhs, microscopic_suite,
                                 second_class_suite, verify_asymptotic_slope,
                                 verify_interval_formula, verify_tangent_law)

GAMMA_1E4 = 10000.065345414536


def test_report_integrity(ctx10k, table10k):
    r = verify_tangent_law(ctx10k, table10k, 1000.0, 5.0)
    assert r.residual == r.lhs - r.rhs
    assert r.passed == (abs(r.residual) <= r.bound)
    d = r.to_dict()
    assert d["schema_version"] == SCHEMA_VERSION
    assert set(d) == {"schema_version", "formula_id", "inputs", "lhs", "rhs",
                      "terms", "residual", "bound", "pass"}
    assert d["pass"] is True


def test_unknown_formula_id_rejected():
    with pytest.raises(DomainError):
        VerificationReport(formula_id="9.9", inputs={}, lhs=0.0, rhs=0.0,
                           terms={}, residual=0.0, bound=0.0, passed=True)


def test_tangent_law_passes_across_widths(ctx10k, table10k):
    T = 1000.0
    for U in (1e-3, 1.0, 10.0, T ** (1.0 / 3.0)):
        r = verify_tangent_law(ctx10k, table10k, T, U)
        assert r.passed, (U, r.residual, r.bound)
        if U >= 1.0:
            assert abs(r.residual) <= 1e-2 * abs(r.lhs)


def test_tangent_law_domain(ctx10k, table10k):
    with pytest.raises(DomainError):
        verify_tangent_law(ctx10k, table10k, 50.0, 1.0)
    with pytest.raises(DomainError):
        verify_tangent_law(ctx10k, table10k, 1000.0, 0.0)
    with pytest.raises(DomainError):
        verify_tangent_law(ctx10k, table10k, 1000.0, 50.0)


def test_c0_cancellation(table10k):
    """The integration constant shifts phi but must cancel out of the
    tangent-law check to first order."""
    base = LadderContext(table=table10k, c0=0.0)
    shifted = LadderContext(table=table10k, c0=10.0)
    for U in (1.0, 5.0):
        r0 = verify_tangent_law(base, table10k, 10000.0, U)
        r1 = verify_tangent_law(shifted, table10k, 10000.0, U)
        assert r0.lhs == r1.lhs
        assert abs(r0.rhs - r1.rhs) <= 1e-3 * abs(r0.rhs)


def test_asymptotic_tan_frozen():
    assert asymptotic_tan(1e4) == pytest.approx(0.9540967740579059,
                                                abs=1e-12)
    got = asymptotic_tan(1e6)
    assert got == 1.0 - (1.0 - EULER_GAMMA) / math.log(1e6)
    with pytest.raises(DomainError):
        asymptotic_tan(500.0)


def test_asymptotic_slope_report_shape(ctx10k):
    r = verify_asymptotic_slope(ctx10k, 10000.0, 25.0)
    assert r.formula_id == "2.6"
    assert r.rhs == asymptotic_tan(10000.0)
    assert r.bound == 10.0 * 10000.0 ** 0.25 / (25.0 * math.log(10000.0))


def test_interval_formula_anchor_variants(ctx10k, table10k):
    N, M = 5000.0, 5010.0
    r_ln = verify_interval_formula(ctx10k, table10k, N, M)
    r_phi = verify_interval_formula(ctx10k, table10k, N, M,
                                    lnN_anchor="phi")
    assert r_ln.formula_id == "2.8" and r_phi.formula_id == "2.8"
    assert r_ln.lhs == r_phi.lhs
    assert r_ln.rhs != r_phi.rhs  # the anchors genuinely differ
    with pytest.raises(DomainError):
        verify_interval_formula(ctx10k, table10k, M, N)
    with pytest.raises(DomainError):
        verify_interval_formula(ctx10k, table10k, N, M, lnN_anchor="bad")


def test_interval_formula_slope_weighted(ctx10k, table10k):
    N, M = 5000.0, 5005.0
    beta = 0.5 * (phi(ctx10k, M) - phi(ctx10k, N)) / (M - N)
    r = verify_interval_formula(ctx10k, table10k, N, M, tan_beta=beta)
    assert r.formula_id == "3.3"
    assert r.passed  # the interval's own slope makes this an identity


def test_balasubramanian_identity(ctx10k, table10k):
    # with N = T and M = T + U the mean-value rhs degenerates to the
    # prediction formula, bit for bit
    T, U = 1000.0, 25.0
    r = verify_interval_formula(ctx10k, table10k, T, T + U)
    assert balasubramanian_rhs(T, U) == r.rhs
    with pytest.raises(DomainError):
        balasubramanian_rhs(500.0, 1.0)
    with pytest.raises(DomainError):
        balasubramanian_rhs(2000.0, 0.0)


def test_microscopic_suite(ctx10k, table10k):
    suite = microscopic_suite(ctx10k, table10k, GAMMA_1E4)
    assert isinstance(suite, SuiteReport)
    assert suite.all_passed
    ids = [r.formula_id for r in suite.reports]
    assert ids.count("3.2") == 8
    assert ids.count("3.3") == 4
    ctx = suite.context
    assert ctx["gamma"] == GAMMA_1E4
    assert ctx["gamma"] < ctx["rho"] < ctx["gamma_prime"]
    assert ctx["phi_prime_rho"] > 0.0
    assert ctx["tan_beta"] == pytest.approx(0.0175193, abs=1e-5)
    assert not ctx["parallel_shortfall"]
    # solved widths increase with the target angle on the convex stretch
    widths = [u for u in ctx["solved_U"] if u is not None]
    assert widths == sorted(widths)


def test_second_class_suite(ctx10k, table10k):
    suite = second_class_suite(ctx10k, table10k, GAMMA_1E4)
    ctx = suite.context
    assert ctx["delta"] >= 0.0
    assert ctx["left_negative"] and ctx["right_positive"]
    assert ctx["gamma"] < ctx["rho_bar"] < ctx["gamma_bar"]
    by_id = {}
    for r in suite.reports:
        by_id.setdefault(r.formula_id, []).append(r)
    # all grid angles of the rotating chord verify
    assert len(by_id["4.4"]) == 9
    assert all(r.passed for r in by_id["4.4"])
    # the dedicated pi/6 path equals the general path bit for bit
    pi6 = by_id["pi6"][0]
    twin = [r for r in by_id["4.4"] if r.lhs == pi6.lhs]
    assert twin and twin[0].rhs == pi6.rhs
    assert "lngamma_variant" in pi6.terms
    # mean-value forms are recorded but allowed to fail at this height
    assert len(by_id["4.5"]) == 4
    assert len(by_id["2.6"]) == 1


def test_second_class_domain(ctx10k, table10k):
    with pytest.raises(DomainError):
        second_class_suite(ctx10k, table10k, 500.0)
    with pytest.raises(DomainError):
        second_class_suite(ctx10k, table10k, GAMMA_1E4, eta=0.7)


def test_suite_report_serialization(ctx10k, table10k):
    suite = microscopic_suite(ctx10k, table10k, GAMMA_1E4)
    d = suite.to_dict()
    assert d["schema_version"] == SCHEMA_VERSION
    assert len(d["reports"]) == len(suite.reports)
    assert d["anchor"] == suite.anchor
    assert isinstance(d["context"]["solved_U"], list)
