import cmath
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dini_radius.errors import DomainError
from dini_radius.radius import RadiusQuery, phi_g, radius_convexity
from dini_radius.verify import (
    DiskScanConfig,
    VerificationReport,
    angular_distance,
    check_inequalities,
    disk_min_scan,
    hurwitz_limit_residual,
    inequality_suite,
    mittag_leffler_residual,
    product_residual,
    run_suite,
)
from dini_radius.zeros import Family, bessel_catalog, dini_catalog

CFG = DiskScanConfig(16, 128)


@pytest.fixture(scope="module")
def g_catalog():
    return dini_catalog(-1.5, Family.DINI_G, 200)


def test_disk_scan_g():
    r_star = radius_convexity(RadiusQuery("g", -1.5)).radius
    scan = disk_min_scan("g", -1.5, 0.9 * r_star, CFG)
    assert scan.min_re > 0
    assert scan.min_re == pytest.approx(phi_g(-1.5, 0.9 * r_star), abs=1e-6)
    step = 2 * math.pi / CFG.angular_steps
    assert angular_distance(scan.argmin, (math.pi / 2, 3 * math.pi / 2)) <= step
    assert disk_min_scan("g", -1.5, 1.05 * r_star, CFG).min_re < 0


def test_disk_scan_h():
    r_star = radius_convexity(RadiusQuery("h", -1.5)).radius
    scan = disk_min_scan("h", -1.5, 0.9 * r_star, CFG)
    assert angular_distance(scan.argmin, (math.pi,)) <= 2 * math.pi / CFG.angular_steps


def test_disk_config_validation():
    with pytest.raises(ValueError):
        DiskScanConfig(4, 128)


def test_mittag_leffler_examples(g_catalog):
    assert mittag_leffler_residual("g", -1.5, 0.0, 50, g_catalog).residual == 0
    res = mittag_leffler_residual("g", -1.5, 1.0, 50, g_catalog)
    closed = (3 * math.cos(1) - math.sin(1)) / (2 * math.cos(1) + math.sin(1))
    assert res.direct.real == pytest.approx(closed, rel=1e-13)
    assert res.residual <= res.tail_bound
    with pytest.raises(DomainError):
        mittag_leffler_residual("g", -1.5, complex(g_catalog.real_zeros[0]), 50, g_catalog)


@pytest.mark.xfail(strict=True, reason="the omitted tail sum of 2/x_n^2 over n > 50 is itself about 4e-3")
def test_mittag_leffler_fifty_zeros_within_1e3(g_catalog):
    assert mittag_leffler_residual("g", -1.5, 1.0, 50, g_catalog).residual <= 1e-3


def test_product_examples(g_catalog):
    assert product_residual("g", -1.5, 0.0, 200, g_catalog) <= 1e-15
    assert product_residual("g", -1.5, 1.0, 200, g_catalog) <= 5e-3


@pytest.mark.parametrize("family", ["g", "h"])
def test_expansions_improve_with_more_zeros(family):
    cat = dini_catalog(-1.2, Family.DINI_G if family == "g" else Family.DINI_H, 200)
    z = 0.3 + 0.2j
    ml = [mittag_leffler_residual(family, -1.2, z, n, cat).residual for n in (10, 50, 200)]
    pr = [product_residual(family, -1.2, z, n, cat) for n in (10, 50, 200)]
    assert ml[0] > ml[1] > ml[2] and pr[0] > pr[1] > pr[2]


def test_inequality_examples():
    f = check_inequalities(0.5, 2.0)
    assert f.ineq_a and f.ineq_b and f.ineq_c
    assert (0.5 / (2 - 0.5)) == pytest.approx(1 / 3)
    v = 1j
    assert (v / (2 - v)).real == pytest.approx(-0.2)
    assert all(vars(check_inequalities(1j, 2.0)).values())
    assert all(vars(check_inequalities(1.0, 2.0, 3.0, 1.0)).values())
    assert (1 / ((2 + 1) * (3 - 1))) == pytest.approx(1 / 6)
    with pytest.raises(DomainError):
        check_inequalities(2.0, 2.0)


@settings(max_examples=200)
@given(st.floats(0.05, 3), st.floats(0.01, 3), st.floats(0, 3), st.floats(0, 1), st.floats(0, 2 * math.pi))
def test_inequalities_property(r, d_gap, g_gap, frac, theta):
    delta = r + d_gap
    v = cmath.rect(r * frac, theta)
    f = check_inequalities(v, delta, delta + g_gap, max(r, abs(v)))
    assert f.ineq_a and f.ineq_b and f.ineq_c


def test_inequality_suite_is_deterministic():
    assert inequality_suite(7, 2000) == inequality_suite(7, 2000) == (0, 2000)


def test_hurwitz_residual_zero_point():
    assert hurwitz_limit_residual(12, -1.5, 0.4, 0.0) <= 1e-15


def test_report_json():
    rep = VerificationReport.at_most("x", np.float64(0.5), 1.0, nu=-1.5)
    d = json.loads(json.dumps(rep.as_dict()))
    assert d == {"claim": "x", "pass": True, "measured": 0.5, "bound": 1.0, "params": {"nu": -1.5}}


@pytest.mark.parametrize("suite", ["interlace", "rayleigh", "product", "ml", "lemma25"])
def test_suites_pass(suite):
    reports = run_suite(suite, (-1.5,), seed=7)
    assert reports and all(r.passed for r in reports), [r for r in reports if not r.passed]
    json.dumps([r.as_dict() for r in reports])


def test_disk_suite_passes():
    reports = run_suite("disk", (-1.2,), seed=7)
    assert all(r.passed for r in reports)


def test_hurwitz_suite_reports_stated_bound():
    reports = {(r.claim, r.params["alpha"]): r for r in run_suite("hurwitz")}
    assert reports["hurwitz_limit_decreasing", 0.0].passed
    assert reports["hurwitz_limit_decreasing", 0.4].passed
    # the m = 12 bound is reported as measured; see the acceptance module
    assert reports["hurwitz_limit_m12", 0.4].measured > 1e-6


def test_unknown_suite():
    with pytest.raises(DomainError):
        run_suite("nope")
