"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (with the measured quantity) that the
conftest prints in the terminal summary.  Tolerances are the stated ones.
"""
import math

import numpy as np
import pytest
import scipy.special as sc

from dini_radius.lommel import (
    dini_lommel,
    expected_classification,
    lommel_coefficients,
    poly_zeros_classified,
)
from dini_radius.radius import RadiusQuery, domain_cap, phi_g, radius_convexity
from dini_radius.verify import (
    DiskScanConfig,
    angular_distance,
    boundary_min_angles,
    disk_min_scan,
    hurwitz_grid,
    hurwitz_max_residual,
    inequality_suite,
    mittag_leffler_residual,
    product_residual,
    rolle_chain_margin,
)
from dini_radius.zeros import Family, bessel_catalog, dini_catalog, rayleigh_sum

NUS = (-1.2, -1.5, -1.8)
RESULTS: dict[int, str] = {}


def record(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def bisection(f, lo, hi, tol=1e-15):
    flo = f(lo)
    while hi - lo > tol * max(1.0, abs(lo)):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.fixture(scope="module")
def catalogs():
    out = {}
    for nu in NUS:
        b = bessel_catalog(nu, 201)
        out[nu, "bessel"] = b
        out[nu, "g"] = dini_catalog(nu, Family.DINI_G, 200, bessel=b)
        out[nu, "h"] = dini_catalog(nu, Family.DINI_H, 200, bessel=b)
    return out


def test_criterion_01_radius_g_oracle():
    oracle = bisection(
        lambda r: r * r * math.sinh(r) + math.sinh(r) + 4 * r * math.cosh(r) - math.cosh(r) / r, 0.1, 0.7
    )
    res = radius_convexity(RadiusQuery("g", -1.5, 0.0))
    r = res.radius
    # Bessel-form equation at the returned radius, evaluated with a library I
    i0, i1, i2 = (float(sc.iv(v, r)) for v in (-1.5, -0.5, 0.5))
    eq = 1 + r * (r * i2 + 3 * i1) / (i0 + r * i1)
    err = abs(r - oracle)
    ok = err <= 1e-9 and abs(eq) <= 1e-10 and abs(res.residual) <= 1e-10
    record(1, ok, f"r={r:.15g} oracle={oracle:.15g} |diff|={err:.2e} residual={abs(eq):.2e}")


def test_criterion_02_radius_h_oracle():
    t = bisection(
        lambda t: t * t * math.sinh(t) + 4 * math.sinh(t) + 6 * t * math.cosh(t) - 4 * math.cosh(t) / t,
        0.1, 0.85,
    )
    res = radius_convexity(RadiusQuery("h", -1.5, 0.0))
    r = res.radius
    s = math.sqrt(r)
    i0, i1, i2 = (float(sc.iv(v, s)) for v in (-1.5, -0.5, 0.5))
    eq = 1 + (r * i2 + 4 * s * i1) / (4 * i0 + 2 * s * i1)
    err = abs(r - t * t)
    ok = err <= 1e-9 and abs(eq) <= 1e-10 and abs(res.residual) <= 1e-10
    record(2, ok, f"r={r:.15g} oracle={t * t:.15g} |diff|={err:.2e} residual={abs(eq):.2e}")


def test_criterion_03_rayleigh_sums(catalogs):
    worst_excess, worst_tail, parts = -math.inf, 0.0, []
    for nu in NUS:
        for fam, target in (("g", 0.75 / (nu + 1)), ("h", 0.5 / (nu + 1))):
            rs = rayleigh_sum(catalogs[nu, fam])
            assert rs.target == pytest.approx(target, rel=1e-15)
            worst_excess = max(worst_excess, abs(rs.partial - rs.target) - rs.tail_bound)
            worst_tail = max(worst_tail, rs.tail_bound)
            parts.append(f"{fam}{nu}:{abs(rs.partial - rs.target):.1e}")
    ok = worst_excess <= 0 and worst_tail <= 1e-3
    record(3, ok, f"max(|err|-tail)={worst_excess:.2e} max tail={worst_tail:.2e} ({' '.join(parts)})")


def test_criterion_04_zero_structure_as_stated(catalogs):
    """The chain j_2 < alpha_2 < j_3 < alpha_3 < j_4 < alpha_4, with index 1 the
    imaginary zero (the labelling the Rayleigh sums use)."""
    worst, imag_ok = math.inf, True
    for nu in NUS:
        b, d = catalogs[nu, "bessel"], catalogs[nu, "g"]
        imag_ok &= d.imaginary is not None and b.imaginary is not None and d.imaginary < b.imaginary
        j = (None, b.imaginary) + b.real_zeros
        al = (None, d.imaginary) + d.real_zeros
        chain = [j[2], al[2], j[3], al[3], j[4], al[4]]
        worst = min(worst, min(y - x for x, y in zip(chain, chain[1:])))
    ok = imag_ok and worst > 1e-8
    record(4, ok, f"one imaginary pair and a<b: {imag_ok}; chain margin={worst:.4g} (need > 1e-8)")


def test_zero_structure_dini_below_bessel(catalogs):
    """The ordering that actually holds: alpha_2 < j_2 < alpha_3 < j_3 < ..."""
    worst = math.inf
    for nu in NUS:
        for fam in ("g", "h"):
            b, d = catalogs[nu, "bessel"], catalogs[nu, fam]
            chain = [v for k in range(4) for v in (d.real_zeros[k], b.real_zeros[k])]
            worst = min(worst, min(y - x for x, y in zip(chain, chain[1:])))
            assert d.imaginary < b.imaginary
    assert worst > 1e-8


def test_criterion_05_lommel_classification():
    rng = np.random.default_rng(2024)
    samples = mismatches = 0
    cases = ((-0.99, 3.0, 1), (-1.99, -1.01, 1), (-2.99, -2.01, 2))  # a, b with s=0, c with s=1
    for lo, hi, m_min in cases:
        for _ in range(200):
            m = int(rng.integers(m_min, 13))
            nu = float(rng.uniform(lo, hi))
            samples += 1
            mismatches += poly_zeros_classified(lommel_coefficients(m, nu)).counts != expected_classification(m, nu)
    worst = math.inf
    for nu in (-1.99, -1.9, -1.75, -1.5, -1.25, -1.1, -1.01):
        for m in range(1, 11):
            xs = poly_zeros_classified(lommel_coefficients(m, nu)).real
            ys = poly_zeros_classified(dini_lommel(m, nu, 0.4)).real
            worst = min(worst, rolle_chain_margin(xs, ys))
    ok = mismatches == 0 and worst > 0
    record(5, ok, f"classification mismatches={mismatches}/{samples}; Rolle chain min gap={worst:.3g}")


def test_criterion_06_expansions(catalogs):
    rng = np.random.default_rng(6)
    worst_ml, worst_prod = -math.inf, 0.0
    for nu in NUS:
        for fam in ("g", "h"):
            cat = catalogs[nu, fam]
            first = cat.real_zeros[0]
            if fam == "g":
                rad = 0.8 * min(cat.imaginary, first)
            else:
                rad = 0.8 * min(cat.imaginary, first) ** 2  # h' lives in the squared variable
            pts = [complex(*(rad * math.sqrt(rng.uniform()) * np.array([math.cos(t), math.sin(t)])))
                   for t in rng.uniform(0, 2 * math.pi, 20)]
            for z in pts:
                e = mittag_leffler_residual(fam, nu, z, 100, cat)
                worst_ml = max(worst_ml, e.residual - e.tail_bound)
                if fam == "g":
                    worst_prod = max(worst_prod, product_residual("g", nu, z, 200, cat))
    ok = worst_ml <= 0 and worst_prod <= 1e-2
    record(6, ok, f"max(ML residual - tail)={worst_ml:.2e}; max g' product residual={worst_prod:.2e}")


def test_criterion_07_convexity_region():
    cfg = DiskScanConfig()
    step = 2 * math.pi / cfg.angular_steps
    bad = []
    for nu in NUS:
        for fam in ("g", "h"):
            for alpha in (0.0, 0.5):
                res = radius_convexity(RadiusQuery(fam, nu, alpha))
                inner = disk_min_scan(fam, nu, 0.95 * res.radius, cfg)
                if inner.min_re < alpha - 1e-6:
                    bad.append((fam, nu, alpha, "min_re", inner.min_re))
                if angular_distance(inner.argmin, boundary_min_angles(fam)) > step:
                    bad.append((fam, nu, alpha, "argmin", inner.argmin))
                r_out = min(1.05 * res.radius, 0.5 * (res.radius + res.domain_cap))
                outer = disk_min_scan(fam, nu, r_out, cfg)
                if not outer.min_re < alpha:
                    bad.append((fam, nu, alpha, "outer", outer.min_re))
    record(7, not bad, f"12 configurations, violations={bad or 0}")


def test_criterion_08_inequalities():
    violations, n = inequality_suite(seed=7, n=10_000)
    record(8, violations == 0, f"violations={violations}/{n} at slack 1e-12")


def test_criterion_09_hurwitz_limit():
    grid = hurwitz_grid(2.0)
    parts, ok = [], True
    for alpha in (0.0, 0.4):
        r12 = hurwitz_max_residual(12, -1.5, alpha, grid)
        r6 = hurwitz_max_residual(6, -1.5, alpha, grid)
        ok &= r12 <= 1e-6 and r12 < r6
        parts.append(f"alpha={alpha}: m=12 {r12:.3e} (need <= 1e-6), m=6 {r6:.3e}")
    record(9, ok, "; ".join(parts))


def test_criterion_10_monotonicity():
    bad = []
    for nu in NUS:
        a = domain_cap("g", nu)
        vals = [phi_g(nu, a * k / 101) for k in range(1, 101)]
        if not all(x > y for x, y in zip(vals, vals[1:])):
            bad.append(("phi_g", nu))
        for fam in ("g", "h"):
            rs = [radius_convexity(RadiusQuery(fam, nu, al)).radius for al in (0, 0.25, 0.5, 0.75)]
            if not all(x > y for x, y in zip(rs, rs[1:])):
                bad.append((fam, nu, rs))
    record(10, not bad, f"phi_g decreasing on 100 points, radius decreasing in alpha; violations={bad or 0}")
