"""Radius of convexity of order alpha of g_nu and h_nu for nu in (-2, -1).

On the disk |z| < r the minimum of Re(1 + z f''(z)/f'(z)) sits at z = i r for
g_nu and at z = -r for h_nu, which gives the boundary functions

    phi_g(r) = 1 + i r g''(i r) / g'(i r)
             = 1 + r (r I_(nu+2)(r) + 3 I_(nu+1)(r)) / (I_nu(r) + r I_(nu+1)(r)),
    phi_h(r) = 1 - r h''(-r) / h'(-r)
             = 1 + (r I_(nu+2)(s) + 4 s I_(nu+1)(s)) / (4 I_nu(s) + 2 s I_(nu+1)(s)),  s = sqrt r.

The radius is the smallest r with phi(r) = alpha.  phi_g is strictly
decreasing on (0, a), so plain bisection suffices there.  No such
monotonicity is known for phi_h, so its first sign change is located by a
scan first.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from ._roots import bisect, sign_changes
from .errors import BracketError, DomainError, UnsupportedOrderError
from .special_fn import (
    Order,
    OrderClass,
    SeriesPolicy,
    as_order,
    bessel_i,
    g_derivatives,
    h_derivatives,
)
from .zeros import DiniParameter, Family, dini_imaginary_zero

XTOL = 1e-12
CAP_GUARD = 1e-9
H_SCAN_CELLS = 512
CROSS_CHECK_TOL = 1e-9


class RadiusFamily(enum.Enum):
    G = "g"
    H = "h"

    @property
    def dini(self) -> Family:
        return Family.DINI_G if self is RadiusFamily.G else Family.DINI_H


def _family(family: RadiusFamily | str) -> RadiusFamily:
    return family if isinstance(family, RadiusFamily) else RadiusFamily(str(family).lower())


def _require_range(order: Order) -> None:
    if order.kind is not OrderClass.BETWEEN_MINUS_TWO_AND_MINUS_ONE:
        raise UnsupportedOrderError(
            f"unsupported order; radius formulas cover nu in (-2,-1), got nu={order.nu}"
        )


@dataclass(frozen=True)
class RadiusQuery:
    family: RadiusFamily
    nu: float
    order_alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "family", _family(self.family))
        _require_range(Order(self.nu))
        if not 0.0 <= self.order_alpha < 1.0:
            raise DomainError(f"order alpha must lie in [0, 1), got {self.order_alpha}")


@dataclass(frozen=True)
class RadiusResult:
    family: RadiusFamily
    nu: float
    alpha: float
    radius: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    domain_cap: float
    cross_check: float = 0.0
    sign_changes: tuple[float, ...] = field(default=(), compare=False)

    def as_dict(self) -> dict:
        return {
            "family": self.family.value,
            "nu": self.nu,
            "alpha": self.alpha,
            "radius": self.radius,
            "residual": self.residual,
            "bracket": list(self.bracket),
            "domain_cap": self.domain_cap,
        }


def domain_cap(family: RadiusFamily | str, order: Order | float, policy=None) -> float:
    """a for g_nu, c^2 for h_nu: where the boundary function has its pole."""
    family = _family(family)
    order = as_order(order)
    _require_range(order)
    p = DiniParameter.for_family(family.dini, order)
    t = dini_imaginary_zero(order, p, policy)
    return t if family is RadiusFamily.G else t * t


def _check_r(r: float, cap: float | None, family, order, policy) -> float:
    if cap is None:
        cap = domain_cap(family, order, policy)
    if not 0.0 < r < cap:
        raise DomainError(f"r={r} outside (0, {cap})")
    return cap


def phi_g(
    order: Order | float, r: float, policy: SeriesPolicy | None = None, cap: float | None = None
) -> float:
    """1 + i r g''(i r) / g'(i r) from the g series; valid for 0 < r < a."""
    order = as_order(order)
    _require_range(order)
    _check_r(r, cap, RadiusFamily.G, order, policy)
    d1, d2 = g_derivatives(order, 1j * r, policy)
    v = 1.0 + 1j * r * d2 / d1
    assert abs(v.imag) <= 1e-12 * max(1.0, abs(v.real)), v
    return v.real


def phi_h(
    order: Order | float, r: float, policy: SeriesPolicy | None = None, cap: float | None = None
) -> float:
    """1 - r h''(-r) / h'(-r) from the h series; valid for 0 < r < c^2."""
    order = as_order(order)
    _require_range(order)
    _check_r(r, cap, RadiusFamily.H, order, policy)
    d1, d2 = h_derivatives(order, -r, policy)
    return (1.0 - r * d2 / d1).real


def eq_g_lhs(order: Order | float, r: float, policy: SeriesPolicy | None = None) -> float:
    """Left side of the g-radius equation in modified Bessel form."""
    nu = as_order(order).nu
    i0 = bessel_i(nu, r, policy)
    i1 = bessel_i(nu + 1.0, r, policy)
    i2 = bessel_i(nu + 2.0, r, policy)
    return 1.0 + r * (r * i2 + 3.0 * i1) / (i0 + r * i1)


def eq_h_lhs(order: Order | float, r: float, policy: SeriesPolicy | None = None) -> float:
    """Left side of the h-radius equation in modified Bessel form."""
    nu = as_order(order).nu
    s = math.sqrt(r)
    i0 = bessel_i(nu, s, policy)
    i1 = bessel_i(nu + 1.0, s, policy)
    i2 = bessel_i(nu + 2.0, s, policy)
    return 1.0 + (r * i2 + 4.0 * s * i1) / (4.0 * i0 + 2.0 * s * i1)


def equation_lhs(family, order, r, policy=None) -> float:
    return (eq_g_lhs if _family(family) is RadiusFamily.G else eq_h_lhs)(order, r, policy)


def boundary_phi(family, order, r, policy=None, cap=None) -> float:
    return (phi_g if _family(family) is RadiusFamily.G else phi_h)(order, r, policy, cap)


def radius_convexity(q: RadiusQuery, policy: SeriesPolicy | None = None) -> RadiusResult:
    """Smallest root in (0, cap) of equation_lhs(r) = alpha.

    The root is cross-checked against the series form phi at the same r.
    """
    order = Order(q.nu)
    cap = domain_cap(q.family, order, policy)
    eps = CAP_GUARD * cap
    lo, hi = eps, cap - eps
    f = lambda r: equation_lhs(q.family, order, r, policy) - q.order_alpha

    found = ()
    if q.family is RadiusFamily.G:
        root = bisect(f, lo, hi, XTOL)
    else:
        cells = list(sign_changes(f, lo, hi, (hi - lo) / H_SCAN_CELLS))
        # a sign change caused by the pole would show up only in the last cell
        cells = [c for c in cells if math.isfinite(c[2]) and math.isfinite(c[3])]
        if not cells:
            raise BracketError(f"no sign change of phi_h - alpha on ({lo}, {hi})")
        found = tuple(0.5 * (a + b) for a, b, _, _ in cells)
        a, b, fa, fb = cells[0]
        root = bisect(f, a, b, XTOL, fa, fb)

    residual = f(root.x)
    phi = boundary_phi(q.family, order, root.x, policy, cap)
    cross = abs(phi - (residual + q.order_alpha))
    if cross > CROSS_CHECK_TOL:
        raise ArithmeticError(
            f"series and Bessel forms disagree at r={root.x}: |difference| = {cross}"
        )
    return RadiusResult(
        q.family, q.nu, q.order_alpha, root.x, (root.lo, root.hi), residual,
        root.iterations, cap, cross, found,
    )
