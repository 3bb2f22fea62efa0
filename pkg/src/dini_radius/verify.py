"""Numerical checks of the analytic claims behind the radius formulas.

Every check produces ``VerificationReport`` records; ``run_suite`` groups them
the way the CLI exposes them.  Residual bounds are numerical evidence only.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError
from .lommel import (
    dini_lommel,
    dini_perturb,
    expected_classification,
    lommel_coefficients,
    poly_zeros_classified,
    scaled_lommel_coefficients,
)
from .radius import RadiusFamily, RadiusQuery, _family, boundary_phi, radius_convexity
from .special_fn import (
    Order,
    SeriesPolicy,
    as_order,
    g_derivatives,
    h_derivatives,
    hurwitz_f,
)
from .zeros import (
    Family,
    ZeroCatalog,
    bessel_catalog,
    dini_catalog,
    interlacing_check,
    rayleigh_sum,
    spacing_tail,
)

SUITES = ("interlace", "rayleigh", "product", "ml", "disk", "lemma25", "hurwitz")
DEFAULT_NUS = (-1.2, -1.5, -1.8)
INEQUALITY_SLACK = 1e-12
ZERO_PROXIMITY = 1e-6


@dataclass(frozen=True)
class DiskScanConfig:
    radial_steps: int = 24
    angular_steps: int = 256

    def __post_init__(self):
        if self.radial_steps < 8 or self.angular_steps < 8:
            raise ValueError("radial_steps and angular_steps must both be >= 8")


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    passed: bool
    measured: float
    bound: float
    params: dict = field(default_factory=dict)

    @classmethod
    def at_most(cls, claim, measured, bound, **params) -> "VerificationReport":
        return cls(claim, bool(measured <= bound), float(measured), float(bound), params)

    @classmethod
    def at_least(cls, claim, measured, bound, **params) -> "VerificationReport":
        return cls(claim, bool(measured >= bound), float(measured), float(bound), params)

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "pass": self.passed,
            "measured": self.measured,
            "bound": self.bound,
            "params": self.params,
        }


# ---------------------------------------------------------------- disk scan


@dataclass(frozen=True)
class DiskScan:
    min_re: float
    argmin: complex
    angle_index: int
    radial_index: int


def convexity_expression(family, order, z, policy=None) -> complex:
    """1 + z f''(z) / f'(z) for f = g_nu or h_nu."""
    if _family(family) is RadiusFamily.G:
        d1, d2 = g_derivatives(order, z, policy)
    else:
        d1, d2 = h_derivatives(order, z, policy)
    return 1.0 + z * d2 / d1


def disk_min_scan(
    family: RadiusFamily | str,
    order: Order | float,
    r: float,
    cfg: DiskScanConfig = DiskScanConfig(),
    policy: SeriesPolicy | None = None,
) -> DiskScan:
    """Minimum of Re(1 + z f''/f') over a polar grid on the closed disk |z| <= r.

    Ties go to the smallest angle index, then the smallest radius.
    """
    order = as_order(order)
    best = DiskScan(convexity_expression(family, order, 0.0, policy).real, 0j, -1, 0)
    for j in range(cfg.angular_steps):
        theta = 2.0 * math.pi * j / cfg.angular_steps
        u = complex(math.cos(theta), math.sin(theta))
        for i in range(1, cfg.radial_steps + 1):
            z = r * i / cfg.radial_steps * u
            v = convexity_expression(family, order, z, policy).real
            if v < best.min_re:
                best = DiskScan(v, z, j, i)
    return best


def angular_distance(z: complex, targets) -> float:
    """Smallest angle between arg z and any of ``targets`` (radians)."""
    ang = cmath.phase(z) % (2 * math.pi)
    return min(abs((ang - t + math.pi) % (2 * math.pi) - math.pi) for t in targets)


def boundary_min_angles(family) -> tuple[float, ...]:
    return (0.5 * math.pi, 1.5 * math.pi) if _family(family) is RadiusFamily.G else (math.pi,)


# ------------------------------------------------------ expansions over zeros


def _catalog_for(family, order, n_zeros, catalog, policy) -> ZeroCatalog:
    if catalog is None:
        catalog = dini_catalog(order, _family(family).dini, n_zeros, policy)
    if len(catalog.real_zeros) < n_zeros:
        raise DomainError(f"catalog has {len(catalog.real_zeros)} real zeros, need {n_zeros}")
    return catalog.truncated(n_zeros)


def _check_away_from_zeros(family, z, squares):
    for s in squares:
        if _family(family) is RadiusFamily.G:
            root = cmath.sqrt(s)
            d = min(abs(z - root), abs(z + root))
        else:
            d = abs(z - s)
        if d < ZERO_PROXIMITY:
            raise DomainError(f"z={z} lies within {d:.3g} of a zero")


@dataclass(frozen=True)
class ExpansionResidual:
    residual: float
    tail_bound: float
    direct: complex
    truncated: complex


def partial_fraction_sum(family, z: complex, squares) -> complex:
    """-sum 2z/(s - z^2) for g''/g', or -sum z/(s - z) for z h''/h'."""
    if _family(family) is RadiusFamily.G:
        return -sum(2 * z / (s - z * z) for s in squares)
    return -sum(z / (s - z) for s in squares)


def mittag_leffler_residual(
    family: RadiusFamily | str,
    order: Order | float,
    z: complex,
    n_zeros: int,
    catalog: ZeroCatalog | None = None,
    policy: SeriesPolicy | None = None,
) -> ExpansionResidual:
    """Compare g''/g' (or z h''/h') with its partial-fraction sum over zeros.

    ``n_zeros`` counts real zeros; the imaginary pair is always included.
    """
    family = _family(family)
    if n_zeros < 10:
        raise DomainError("n_zeros must be >= 10")
    order = as_order(order)
    cat = _catalog_for(family, order, n_zeros, catalog, policy)
    z = complex(z)
    squares = cat.squared()
    _check_away_from_zeros(family, z, squares)
    if family is RadiusFamily.G:
        d1, d2 = g_derivatives(order, z, policy)
        direct = d2 / d1
        rho = abs(z)
        tail = spacing_tail(
            cat.real_zeros, lambda last, s: math.log((last + rho) / (last - rho)) / s
        )
    else:
        d1, d2 = h_derivatives(order, z, policy)
        direct = z * d2 / d1
        rho = math.sqrt(abs(z))
        tail = spacing_tail(
            cat.real_zeros, lambda last, s: rho / (2 * s) * math.log((last + rho) / (last - rho))
        )
    truncated = partial_fraction_sum(family, z, squares)
    return ExpansionResidual(abs(direct - truncated), tail, direct, truncated)


def truncated_product(family, z: complex, squares) -> complex:
    """prod (1 - z^2/s) for g', prod (1 - z/s) for h'."""
    w = z * z if _family(family) is RadiusFamily.G else z
    out = 1.0 + 0j
    for s in squares:
        out *= 1.0 - w / s
    return out


def product_residual(
    family: RadiusFamily | str,
    order: Order | float,
    z: complex,
    n_zeros: int,
    catalog: ZeroCatalog | None = None,
    policy: SeriesPolicy | None = None,
) -> float:
    """|f'(z) - truncated product over zeros| for f = g_nu or h_nu.

    For h_nu the product represents h'_nu, not h_nu itself: h_nu(0) = 0 while
    the product equals 1 at 0.
    """
    family = _family(family)
    if n_zeros < 10:
        raise DomainError("n_zeros must be >= 10")
    order = as_order(order)
    cat = _catalog_for(family, order, n_zeros, catalog, policy)
    z = complex(z)
    if family is RadiusFamily.G:
        d1, _ = g_derivatives(order, z, policy)
    else:
        d1, _ = h_derivatives(order, z, policy)
    return abs(d1 - truncated_product(family, z, cat.squared()))


# ------------------------------------------------------------- inequalities


@dataclass(frozen=True)
class InequalityFlags:
    ineq_a: bool
    ineq_b: bool
    ineq_c: bool


def _holds(lo: float, mid: float, hi: float = math.inf) -> bool:
    slack = INEQUALITY_SLACK * max(1.0, abs(lo), abs(mid), abs(hi) if math.isfinite(hi) else 0.0)
    return mid - lo >= -slack and hi - mid >= -slack


def check_inequalities(
    v: complex, delta: float, gamma: float | None = None, r: float | None = None
) -> InequalityFlags:
    """Evaluate the three bounds on Re(v/(delta -+ v)) and Re(v^2/((delta+v)(gamma-v))).

    gamma and r default to delta and |v|.  Equality counts as holding.
    """
    v = complex(v)
    av = abs(v)
    gamma = delta if gamma is None else gamma
    r = av if r is None else r
    if not delta > av:
        raise DomainError(f"need delta > |v|, got delta={delta}, |v|={av}")
    if not (gamma >= delta > r >= av):
        raise DomainError(f"need gamma >= delta > r >= |v|, got {gamma}, {delta}, {r}, {av}")
    a = _holds(-av / (delta + av), (v / (delta - v)).real, av / (delta - av))
    b = _holds(-av / (delta - av), (v / (delta + v)).real, av / (delta + av))
    c = _holds(
        -math.inf, (v * v / ((delta + v) * (gamma - v))).real, r * r / ((delta - r) * (gamma + r))
    )
    return InequalityFlags(a, b, c)


def sample_inequality_inputs(rng: np.random.Generator, n: int):
    """Yield (v, delta, gamma, r) with gamma >= delta > r >= |v|.

    One sample in ten puts v on the circle |v| = r, where equality can occur.
    """
    for k in range(n):
        r = rng.uniform(0.05, 3.0)
        delta = r + rng.uniform(0.01, 3.0)
        gamma = delta + rng.uniform(0.0, 3.0)
        theta = rng.uniform(0.0, 2 * math.pi)
        rho = r if k % 10 == 0 else r * math.sqrt(rng.uniform())
        v = cmath.rect(rho, theta)
        yield v, delta, gamma, max(r, abs(v))  # rect() may round |v| just above r


def inequality_suite(seed: int, n: int = 10_000) -> tuple[int, int]:
    """Return (violations, samples) over ``n`` seeded random inputs."""
    rng = np.random.default_rng(seed)
    bad = 0
    for v, delta, gamma, r in sample_inequality_inputs(rng, n):
        f = check_inequalities(v, delta, gamma, r)
        bad += not (f.ineq_a and f.ineq_b and f.ineq_c)
    return bad, n


# ------------------------------------------------------------ Hurwitz limit


def hurwitz_limit_residual(
    m: int, order: Order | float, dini_alpha: float, z: complex, policy=None
) -> float:
    """|h_(m,nu)(z) / Gamma(nu+2m+1) - (f_nu(z) + alpha z f'_nu(z))|."""
    p = dini_perturb(scaled_lommel_coefficients(m, order), dini_alpha)
    return abs(p(complex(z)) - hurwitz_f(order, z, dini_alpha, policy))


def hurwitz_grid(radius: float = 2.0, rings: int = 4, spokes: int = 16) -> list[complex]:
    pts = [0j]
    for i in range(1, rings + 1):
        for j in range(spokes):
            pts.append(cmath.rect(radius * i / rings, 2 * math.pi * j / spokes))
    return pts


def hurwitz_max_residual(m, order, dini_alpha, grid=None, policy=None) -> float:
    grid = hurwitz_grid() if grid is None else grid
    return max(hurwitz_limit_residual(m, order, dini_alpha, z, policy) for z in grid)


# ------------------------------------------------------------------- suites


def _disk_radii(r_star: float, cap: float) -> tuple[float, float]:
    inside = 0.95 * r_star
    outside = min(1.05 * r_star, r_star + 0.5 * (cap - r_star))
    return inside, outside


def _interlace_suite(nus, seed, policy):
    out = []
    for nu in nus:
        b = bessel_catalog(nu, 10, policy)
        for fam in (Family.DINI_G, Family.DINI_H):
            d = dini_catalog(nu, fam, 10, policy, bessel=b)
            rep = interlacing_check(b, d)
            out.append(VerificationReport.at_least(
                f"interlacing_{fam.value}", rep.margin, 1e-10, nu=nu, zeros=10
            ))
            out.append(VerificationReport.at_least(
                f"imaginary_order_{fam.value}", b.imaginary - d.imaginary, 1e-10, nu=nu,
                dini=d.imaginary, bessel=b.imaginary,
            ))
    rng = np.random.default_rng(seed)
    mismatches = 0
    for _ in range(50):
        m = int(rng.integers(1, 13))
        nu = float(rng.choice([rng.uniform(-1.99, -1.01), rng.uniform(-0.99, 3.0)]))
        got = poly_zeros_classified(lommel_coefficients(m, nu)).counts
        mismatches += got != expected_classification(m, nu)
    out.append(VerificationReport.at_most("lommel_classification", mismatches, 0, samples=50))
    worst = math.inf
    for m in range(1, 11):
        for nu in nus:
            xs = poly_zeros_classified(lommel_coefficients(m, nu)).real
            ys = poly_zeros_classified(dini_lommel(m, nu, 0.4)).real
            worst = min(worst, rolle_chain_margin(xs, ys))
    out.append(VerificationReport.at_least("lommel_rolle_chain", worst, 0.0, alpha=0.4, m_max=10))
    return out


def rolle_chain_margin(xs, ys) -> float:
    """Smallest gap in x1 < y1 < 0 < y2 < x2 < ... < ym < xm; negative if violated."""
    if len(xs) != len(ys) or not xs:
        return -math.inf
    chain = [xs[0], ys[0], 0.0]
    for k in range(1, len(xs)):
        chain += [ys[k], xs[k]]
    return min(b - a for a, b in zip(chain, chain[1:]))


def _rayleigh_suite(nus, seed, policy):
    out = []
    for nu in nus:
        b = bessel_catalog(nu, 201, policy)
        for fam in (Family.DINI_G, Family.DINI_H):
            cat = dini_catalog(nu, fam, 200, policy, bessel=b)
            rs = rayleigh_sum(cat)
            out.append(VerificationReport.at_most(
                f"rayleigh_{fam.value}", abs(rs.partial - rs.target), rs.tail_bound,
                nu=nu, target=rs.target, partial=rs.partial, zeros=200,
            ))
    return out


def _random_disk_points(rng, radius, n):
    return [cmath.rect(radius * math.sqrt(rng.uniform()), rng.uniform(0, 2 * math.pi))
            for _ in range(n)]


def expansion_radius(family, cat: ZeroCatalog) -> float:
    """0.8 times the nearest zero modulus, in the variable of g' or h'."""
    fam = _family(family)
    first = cat.real_zeros[0]
    if fam is RadiusFamily.G:
        return 0.8 * min(cat.imaginary, first)
    return 0.8 * min(cat.imaginary**2, first**2)


def _catalogs(nus, policy, count=200):
    cats = {}
    for nu in nus:
        b = bessel_catalog(nu, count + 1, policy)
        for fam in RadiusFamily:
            cats[nu, fam] = dini_catalog(nu, fam.dini, count, policy, bessel=b)
    return cats


def _product_suite(nus, seed, policy, cats=None):
    cats = _catalogs(nus, policy) if cats is None else cats
    out = []
    for nu in nus:
        for fam in RadiusFamily:
            cat = cats[nu, fam]
            rad = expansion_radius(fam, cat)
            grid = [cmath.rect(rad * i / 4, 2 * math.pi * j / 12) for i in range(1, 5) for j in range(12)]
            worst = max(product_residual(fam, nu, z, 200, cat, policy) for z in grid)
            out.append(VerificationReport.at_most(
                f"product_{fam.value}", worst, 1e-2, nu=nu, zeros=200, z_radius=rad,
                reading="h-prime product (corrected reading)" if fam is RadiusFamily.H else "g-prime product",
            ))
            z = complex(rad)
            r25 = product_residual(fam, nu, z, 25, cat, policy)
            r200 = product_residual(fam, nu, z, 200, cat, policy)
            out.append(VerificationReport.at_most(
                f"product_truncation_{fam.value}", r200, r25, nu=nu, z=rad
            ))
    return out


def _ml_suite(nus, seed, policy, cats=None):
    cats = _catalogs(nus, policy) if cats is None else cats
    rng = np.random.default_rng(seed)
    out = []
    for nu in nus:
        for fam in RadiusFamily:
            cat = cats[nu, fam]
            rad = expansion_radius(fam, cat)
            excess = -math.inf
            for z in _random_disk_points(rng, rad, 20):
                e = mittag_leffler_residual(fam, nu, z, 100, cat, policy)
                excess = max(excess, e.residual - e.tail_bound)
            out.append(VerificationReport.at_most(
                f"mittag_leffler_{fam.value}", excess, 0.0, nu=nu, zeros=100, samples=20
            ))
            z = complex(0.5 * rad, 0.25 * rad)
            seq = [float(mittag_leffler_residual(fam, nu, z, n, cat, policy).residual)
                   for n in (25, 50, 100, 200)]
            ups = sum(b >= a for a, b in zip(seq, seq[1:]))
            out.append(VerificationReport.at_most(
                f"mittag_leffler_decreasing_{fam.value}", ups, 0, nu=nu, residuals=seq
            ))
    return out


def _disk_suite(nus, seed, policy, alphas=(0.0, 0.5), cfg=DiskScanConfig()):
    out = []
    for nu in nus:
        for fam in RadiusFamily:
            for alpha in alphas:
                res = radius_convexity(RadiusQuery(fam, nu, alpha), policy)
                inside, outside = _disk_radii(res.radius, res.domain_cap)
                scan = disk_min_scan(fam, nu, inside, cfg, policy)
                params = dict(nu=nu, family=fam.value, alpha=alpha, r=inside)
                out.append(VerificationReport.at_least(
                    f"disk_inside_{fam.value}", scan.min_re, alpha - 1e-6, **params
                ))
                phi = boundary_phi(fam, nu, inside, policy, res.domain_cap)
                out.append(VerificationReport.at_least(
                    f"disk_min_vs_boundary_{fam.value}", scan.min_re, phi - 1e-6, **params
                ))
                step = 2 * math.pi / cfg.angular_steps
                out.append(VerificationReport.at_most(
                    f"disk_argmin_{fam.value}",
                    angular_distance(scan.argmin, boundary_min_angles(fam)), step, **params
                ))
                outer = disk_min_scan(fam, nu, outside, cfg, policy)
                out.append(VerificationReport.at_most(
                    f"disk_outside_{fam.value}", outer.min_re - alpha, 0.0,
                    **dict(params, r=outside),
                ))
    return out


def _lemma25_suite(nus, seed, policy):
    bad, n = inequality_suite(seed)
    return [VerificationReport.at_most("lemma25_inequalities", bad, 0, samples=n, seed=seed)]


def _hurwitz_suite(nus, seed, policy):
    out = []
    grid = hurwitz_grid()
    for nu in (-1.5,):
        for alpha in (0.0, 0.4):
            ms = (4, 6, 8, 12, 16, 24, 32, 48)
            seq = [float(hurwitz_max_residual(m, nu, alpha, grid, policy)) for m in ms]
            ups = sum(b >= a for a, b in zip(seq, seq[1:]))
            out.append(VerificationReport.at_most(
                "hurwitz_limit_decreasing", ups, 0, nu=nu, alpha=alpha, m=list(ms), residuals=seq
            ))
            # The stated bound at m = 12; the observed convergence is only O(1/m).
            out.append(VerificationReport.at_most(
                "hurwitz_limit_m12", seq[ms.index(12)], 1e-6, nu=nu, alpha=alpha, m=12
            ))
    return out


_SUITE_FUNCS: dict[str, Callable] = {
    "interlace": _interlace_suite,
    "rayleigh": _rayleigh_suite,
    "product": _product_suite,
    "ml": _ml_suite,
    "disk": _disk_suite,
    "lemma25": _lemma25_suite,
    "hurwitz": _hurwitz_suite,
}


def run_suite(
    name: str, nus=DEFAULT_NUS, seed: int = 0, policy: SeriesPolicy | None = None
) -> list[VerificationReport]:
    if name == "all":
        reports = []
        cats = _catalogs(nus, policy)
        for n in SUITES:
            if n in ("product", "ml"):
                reports += _SUITE_FUNCS[n](nus, seed, policy, cats)
            else:
                reports += _SUITE_FUNCS[n](nus, seed, policy)
        return reports
    if name not in _SUITE_FUNCS:
        raise DomainError(f"unknown suite {name!r}")
    return _SUITE_FUNCS[name](nus, seed, policy)
