"""Zeros of J_nu and of the Dini functions J_nu(z) + alpha z J'_nu(z).

For nu in (-2, -1) each of these functions has one pair of purely imaginary
zeros +-i t plus infinitely many real pairs.  Real zeros of the Dini function
strictly interlace those of J_nu, one Dini zero below the first positive
Bessel zero:

    0 < d_1 < j_1 < d_2 < j_2 < ...        (positive zeros only)

and the imaginary zeros satisfy a < b.  All scanning and refinement is done on
``dini_normalized``, which is entire and has no singularity at 0.
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
    dini_i_form,
    dini_imaginary_axis,
    dini_normalized,
)

SCAN_START = 0.05
SCAN_STEP = math.pi / 8
SCAN_LIMIT = 1e5
IMAG_SCAN_STOP = 20.0
IMAG_SCAN_STEP = 0.1
XTOL = 1e-13
INTERLACE_MARGIN = 1e-10


class Family(enum.Enum):
    BESSEL = "bessel"
    DINI_G = "dini-g"
    DINI_H = "dini-h"


@dataclass(frozen=True)
class DiniParameter:
    """Coefficient alpha of J_nu(z) + alpha z J'_nu(z) (not the convexity order)."""

    dini_alpha: float

    def __post_init__(self):
        if not self.dini_alpha >= 0:
            raise DomainError(f"dini_alpha must be >= 0, got {self.dini_alpha}")

    @classmethod
    def for_family(cls, family: Family, order: Order | float) -> "DiniParameter":
        nu = as_order(order).nu
        if family is Family.BESSEL:
            return cls(0.0)
        if family is Family.DINI_G:
            return cls(1.0 / (1.0 - nu))
        return cls(1.0 / (2.0 - nu))


@dataclass(frozen=True)
class ZeroCatalog:
    family: Family
    nu: float
    imaginary: float | None
    real_zeros: tuple[float, ...]
    brackets: tuple[tuple[float, float], ...] = field(default=(), repr=False)
    imaginary_bracket: tuple[float, float] | None = field(default=None, repr=False)

    def squared(self) -> list[float]:
        """Squares of all zeros, one per +- pair; the imaginary pair gives -t^2."""
        out = [-self.imaginary**2] if self.imaginary is not None else []
        out.extend(x * x for x in self.real_zeros)
        return out

    def truncated(self, count: int) -> "ZeroCatalog":
        return ZeroCatalog(
            self.family, self.nu, self.imaginary, self.real_zeros[:count],
            self.brackets[:count], self.imaginary_bracket,
        )


def _dini_alpha(p: DiniParameter | float) -> float:
    return p.dini_alpha if isinstance(p, DiniParameter) else DiniParameter(float(p)).dini_alpha


def _supported(order: Order) -> None:
    if order.kind is OrderClass.UNSUPPORTED:
        raise UnsupportedOrderError(f"nu={order.nu} is outside (-2,-1) and (-1,inf)")


def _imaginary_zero(order: Order, alpha: float, policy) -> tuple[float, tuple[float, float]]:
    f = lambda t: dini_imaginary_axis(order, t, alpha, policy)
    for a, b, fa, fb in sign_changes(f, 0.0, IMAG_SCAN_STOP, IMAG_SCAN_STEP):
        root = bisect(f, a, b, XTOL, fa, fb)
        return root.x, (a, b)
    raise BracketError(
        f"no imaginary zero on (0, {IMAG_SCAN_STOP}] for nu={order.nu}, alpha={alpha}"
    )


def bessel_imaginary_zero(order: Order | float, policy: SeriesPolicy | None = None) -> float:
    """Positive b with J_nu(i b) = 0, i.e. I_nu(b) = 0; needs nu in (-2, -1)."""
    order = as_order(order)
    if order.kind is not OrderClass.BETWEEN_MINUS_TWO_AND_MINUS_ONE:
        raise UnsupportedOrderError(f"imaginary Bessel zero needs nu in (-2,-1), got {order.nu}")
    return _imaginary_zero(order, 0.0, policy)[0]


def dini_imaginary_zero(
    order: Order | float, p: DiniParameter | float, policy: SeriesPolicy | None = None
) -> float:
    """Positive t with (1 + alpha nu) I_nu(t) + alpha t I_(nu+1)(t) = 0.

    For alpha = 1/(1-nu) this is I_nu + t I_(nu+1) = 0 (the constant a), for
    alpha = 1/(2-nu) it is 2 I_nu + t I_(nu+1) = 0 (the constant c).
    """
    order = as_order(order)
    if order.kind is not OrderClass.BETWEEN_MINUS_TWO_AND_MINUS_ONE:
        raise UnsupportedOrderError(f"imaginary Dini zero needs nu in (-2,-1), got {order.nu}")
    return _imaginary_zero(order, _dini_alpha(p), policy)[0]


def _refine_all(f, cells, xtol=XTOL):
    out, brackets = [], []
    for a, b, fa, fb in cells:
        r = bisect(f, a, b, xtol, fa, fb)
        out.append(r.x)
        brackets.append((a, b))
    return out, brackets


def _bessel_real(order: Order, count: int, policy):
    f = lambda x: dini_normalized(order, x, 0.0, policy)
    cells = []
    for cell in sign_changes(f, SCAN_START, SCAN_LIMIT, SCAN_STEP):
        cells.append(cell)
        if len(cells) == count:
            break
    if len(cells) < count:
        raise BracketError(f"found only {len(cells)} of {count} zeros below {SCAN_LIMIT}")
    return _refine_all(f, cells)


def bessel_real_zeros(
    order: Order | float, count: int, policy: SeriesPolicy | None = None
) -> list[float]:
    """First ``count`` positive zeros of J_nu, ascending, to ~1e-12 absolute."""
    order = as_order(order)
    _supported(order)
    if count < 1:
        raise DomainError("count must be >= 1")
    return _bessel_real(order, count, policy)[0]


def _dini_real(order: Order, alpha: float, count: int, policy, bessel=None):
    f = lambda x: dini_normalized(order, x, alpha, policy)
    if bessel is None or len(bessel) < count + 1:
        bessel = _bessel_real(order, count + 1, policy)[0]
    edges = [0.0] + list(bessel)
    cells = []
    for k in range(len(edges) - 1):
        a, b = edges[k], edges[k + 1]
        fa, fb = f(a), f(b)
        if fa * fb < 0:
            cells.append((a, b, fa, fb))
        elif k > 0 or cells:
            raise BracketError(f"no Dini sign change between Bessel zeros {a} and {b}")
        if len(cells) == count:
            break
    if len(cells) < count:
        raise BracketError(f"found only {len(cells)} of {count} Dini zeros")
    return _refine_all(f, cells)


def dini_real_zeros(
    order: Order | float,
    p: DiniParameter | float,
    count: int,
    policy: SeriesPolicy | None = None,
) -> list[float]:
    """First ``count`` positive zeros of J_nu(x) + alpha x J'_nu(x), ascending.

    Each zero is bracketed by consecutive positive Bessel zeros (the first by
    0 and j_first) and refined by bisection.
    """
    order = as_order(order)
    _supported(order)
    if count < 1:
        raise DomainError("count must be >= 1")
    return _dini_real(order, _dini_alpha(p), count, policy)[0]


def bessel_catalog(
    order: Order | float, count: int, policy: SeriesPolicy | None = None
) -> ZeroCatalog:
    order = as_order(order)
    _supported(order)
    zeros, brackets = _bessel_real(order, count, policy)
    imag, ibr = None, None
    if order.kind is OrderClass.BETWEEN_MINUS_TWO_AND_MINUS_ONE:
        imag, ibr = _imaginary_zero(order, 0.0, policy)
    return ZeroCatalog(Family.BESSEL, order.nu, imag, tuple(zeros), tuple(brackets), ibr)


def dini_catalog(
    order: Order | float,
    family: Family,
    count: int,
    policy: SeriesPolicy | None = None,
    bessel: ZeroCatalog | None = None,
) -> ZeroCatalog:
    """Zero catalog for g'_nu (``DINI_G``) or h'_nu(z^2) (``DINI_H``)."""
    order = as_order(order)
    _supported(order)
    if family is Family.BESSEL:
        return bessel_catalog(order, count, policy)
    alpha = DiniParameter.for_family(family, order).dini_alpha
    known = bessel.real_zeros if bessel is not None else None
    zeros, brackets = _dini_real(order, alpha, count, policy, known)
    imag, ibr = None, None
    if order.kind is OrderClass.BETWEEN_MINUS_TWO_AND_MINUS_ONE:
        imag, ibr = _imaginary_zero(order, alpha, policy)
    return ZeroCatalog(family, order.nu, imag, tuple(zeros), tuple(brackets), ibr)


def zero_residual(catalog: ZeroCatalog, policy: SeriesPolicy | None = None) -> list[float]:
    """|f(zero)| / max(|f|) over each zero's bracket ends, for every real zero."""
    alpha = DiniParameter.for_family(catalog.family, catalog.nu).dini_alpha
    f = lambda x: dini_normalized(catalog.nu, x, alpha, policy)
    out = []
    for x, (a, b) in zip(catalog.real_zeros, catalog.brackets):
        scale = max(abs(f(a)), abs(f(b)), 1e-300)
        out.append(abs(f(x)) / scale)
    return out


def imaginary_i_residual(catalog: ZeroCatalog, policy: SeriesPolicy | None = None) -> float:
    """|(1 + alpha nu) I_nu(t) + alpha t I_(nu+1)(t)| at the imaginary zero t."""
    if catalog.imaginary is None:
        raise DomainError("catalog has no imaginary zero")
    alpha = DiniParameter.for_family(catalog.family, catalog.nu).dini_alpha
    return abs(dini_i_form(catalog.nu, catalog.imaginary, alpha, policy))


@dataclass(frozen=True)
class RayleighSum:
    partial: float
    tail_bound: float
    target: float

    @property
    def within_bound(self) -> bool:
        return abs(self.partial - self.target) <= self.tail_bound


def rayleigh_target(family: Family, nu: float) -> float:
    """Exact sum of 1/zero^2 over one zero of each +- pair.

    Read off the low-order Taylor coefficient of the normalized function's
    product expansion: 1/(4(nu+1)) for J_nu, 3/(4(nu+1)) for g'_nu and
    1/(2(nu+1)) for h'_nu.
    """
    return {
        Family.BESSEL: 0.25,
        Family.DINI_G: 0.75,
        Family.DINI_H: 0.5,
    }[family] / (nu + 1.0)


def spacing_tail(zeros, power_bound) -> float:
    """Heuristic tail bound: assume zeros past the last one are at least the
    smallest observed spacing apart, and integrate ``power_bound`` over them.

    ``power_bound(last, spacing)`` returns the integral.
    """
    if len(zeros) < 2:
        return math.inf
    spacing = min(b - a for a, b in zip(zeros, zeros[1:]))
    return power_bound(zeros[-1], spacing)


def rayleigh_sum(catalog: ZeroCatalog, n_zeros: int | None = None) -> RayleighSum:
    """Truncated sum of 1/zero^2, including -1/t^2 for the imaginary pair.

    The tail bound is sum_(k>=1) 1/(x_N + k s)^2 <= 1/(s x_N), s being the
    smallest observed spacing; it is a numerical heuristic, not a proof.
    """
    cat = catalog if n_zeros is None else catalog.truncated(n_zeros)
    target = rayleigh_target(cat.family, cat.nu)
    if cat.imaginary is None and not cat.real_zeros:
        return RayleighSum(0.0, math.inf, target)
    partial = math.fsum(1.0 / s for s in cat.squared())
    tail = spacing_tail(cat.real_zeros, lambda last, s: 1.0 / (s * last))
    return RayleighSum(partial, tail, target)


@dataclass(frozen=True)
class InterlaceReport:
    ok: bool
    margin: float
    imaginary_ok: bool | None
    chain: tuple[float, ...]


def interlacing_check(bessel: ZeroCatalog, dini: ZeroCatalog) -> InterlaceReport:
    """Check d_1 < j_1 < d_2 < j_2 < ... over the positive zeros, and a < b.

    ``ok`` holds only if every gap in the chain exceeds 1e-10.
    """
    if bessel.nu != dini.nu:
        raise DomainError(f"catalogs have different orders: {bessel.nu} vs {dini.nu}")
    n = min(len(bessel.real_zeros), len(dini.real_zeros))
    chain = tuple(v for k in range(n) for v in (dini.real_zeros[k], bessel.real_zeros[k]))
    gaps = [b - a for a, b in zip(chain, chain[1:])]
    margin = min(gaps) if gaps else math.inf
    imaginary_ok = None
    if bessel.imaginary is not None and dini.imaginary is not None:
        imaginary_ok = bessel.imaginary - dini.imaginary > INTERLACE_MARGIN
    ok = n > 0 and margin > INTERLACE_MARGIN and imaginary_ok is not False
    return InterlaceReport(ok, margin, imaginary_ok, chain)
