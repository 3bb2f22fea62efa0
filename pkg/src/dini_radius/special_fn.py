"""Gamma, Bessel J/I and the normalized families g_nu, h_nu.

All power series here are summed by a coefficient ratio recurrence, so no
individual gamma value has to be formed beyond the leading one.  The
normalized families are

    g_nu(z) = sum_n c_n z^(2n+1),   h_nu(z) = sum_n c_n z^(n+1),
    c_0 = 1,  c_(n+1) / c_n = -1 / (4 (n+1) (n+1+nu)),

which equal 2^nu Gamma(1+nu) z^(1-nu) J_nu(z) and
2^nu Gamma(1+nu) z^(1-nu/2) J_nu(sqrt z) respectively.  Both are entire, so
no branch of the square root is ever chosen.
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass

import scipy.special

from .errors import DomainError, PoleError, SeriesConvergenceError

__all__ = [
    "OrderClass",
    "Order",
    "SeriesPolicy",
    "SeriesValue",
    "DEFAULT_POLICY",
    "gamma_real",
    "rgamma",
    "bessel_j",
    "bessel_i",
    "g_value",
    "g_derivative_series",
    "g_derivatives",
    "h_value",
    "h_derivative_series",
    "h_derivatives",
    "hurwitz_f",
    "dini_normalized",
    "dini_imaginary_axis",
    "dini_i_form",
]

MAX_TERMS_ENV = "DINI_RADIUS_MAX_TERMS"

# Beyond this argument the alternating J series loses more than ~1e-13 to
# cancellation in double precision.
J_SERIES_LIMIT = 8.0
# Largest argument for which the I series is summed directly.
I_SERIES_LIMIT = 50.0
G_ARG_CAP = 50.0
H_ARG_CAP = 2500.0


class OrderClass(enum.Enum):
    ABOVE_MINUS_ONE = "nu>-1"
    BETWEEN_MINUS_TWO_AND_MINUS_ONE = "-2<nu<-1"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class Order:
    """Real order nu of a Bessel-type function."""

    nu: float

    def __post_init__(self):
        if not math.isfinite(self.nu):
            raise DomainError(f"order must be finite, got {self.nu!r}")

    @property
    def kind(self) -> OrderClass:
        if self.nu > -1.0:
            return OrderClass.ABOVE_MINUS_ONE
        if -2.0 < self.nu < -1.0:
            return OrderClass.BETWEEN_MINUS_TWO_AND_MINUS_ONE
        return OrderClass.UNSUPPORTED

    @property
    def is_negative_integer(self) -> bool:
        return self.nu < 0 and self.nu == int(self.nu)


def as_order(order: Order | float) -> Order:
    return order if isinstance(order, Order) else Order(float(order))


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation rule for every power series in the package."""

    rel_tolerance: float = 1e-15
    max_terms: int = 200

    def __post_init__(self):
        if not 0.0 < self.rel_tolerance < 1.0:
            raise ValueError(f"rel_tolerance must lie in (0, 1), got {self.rel_tolerance}")
        if self.max_terms < 16:
            raise ValueError(f"max_terms must be >= 16, got {self.max_terms}")

    @classmethod
    def from_env(cls, environ=None, **overrides) -> "SeriesPolicy":
        """Build a policy, honouring ``DINI_RADIUS_MAX_TERMS`` unless overridden."""
        environ = os.environ if environ is None else environ
        kwargs = {}
        raw = environ.get(MAX_TERMS_ENV)
        if raw:
            kwargs["max_terms"] = int(raw)
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)


DEFAULT_POLICY = SeriesPolicy()


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    terms_used: int
    tail_estimate: float


def gamma_real(x: float) -> float:
    """Gamma function of a real argument.

    Raises PoleError at 0, -1, -2, ...
    """
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"gamma has a pole at {x}")
    return math.gamma(x)


def rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles and for arguments where Gamma overflows."""
    if x <= 0 and x == math.floor(x):
        return 0.0
    try:
        return 1.0 / math.gamma(x)
    except OverflowError:
        return 0.0


def _policy(policy: SeriesPolicy | None) -> SeriesPolicy:
    return DEFAULT_POLICY if policy is None else policy


def _ascending_bessel(nu: float, x: float, sign: int, policy: SeriesPolicy) -> float:
    # (x/2)^nu * sum_n sign^n (x/2)^(2n) / (n! Gamma(n+nu+1))
    half = 0.5 * x
    q = sign * half * half
    term = rgamma(nu + 1.0)
    total = term
    for n in range(1, policy.max_terms):
        term *= q / (n * (n + nu))
        total += term
        if n > x and abs(term) <= policy.rel_tolerance * abs(total):
            return half**nu * total
    raise SeriesConvergenceError(f"Bessel series for nu={nu}, x={x} did not converge")


def bessel_j(order: Order | float, x: float, policy: SeriesPolicy | None = None) -> float:
    """Bessel function of the first kind J_nu(x) for real order and x > 0.

    The ascending series is used for x <= 8; beyond that the cancellation in
    the alternating series is too large for double precision and the value is
    taken from ``scipy.special.jv``.
    """
    order = as_order(order)
    if not x > 0:
        raise DomainError(f"bessel_j needs x > 0, got {x}")
    nu = order.nu
    if order.is_negative_integer:
        k = int(-nu)
        return (-1) ** k * bessel_j(Order(float(k)), x, policy)
    if x <= J_SERIES_LIMIT:
        return _ascending_bessel(nu, x, -1, _policy(policy))
    return float(scipy.special.jv(nu, x))


def bessel_i(order: Order | float, x: float, policy: SeriesPolicy | None = None) -> float:
    """Modified Bessel function I_nu(x) for real order and x > 0."""
    order = as_order(order)
    if not x > 0:
        raise DomainError(f"bessel_i needs x > 0, got {x}")
    nu = order.nu
    if order.is_negative_integer:
        return bessel_i(Order(-nu), x, policy)
    if x <= I_SERIES_LIMIT:
        return _ascending_bessel(nu, x, 1, _policy(policy))
    return float(scipy.special.iv(nu, x))


def _check_family_order(order: Order) -> float:
    if order.is_negative_integer:
        raise DomainError(f"normalized families undefined for negative integer order {order.nu}")
    return order.nu


def _coef_ratio(n: int, nu: float) -> float:
    # c_(n+1) / c_n
    return -0.25 / ((n + 1) * (n + 1 + nu))


def _sum_pair(nu, w, weight1, weight2, hump, policy):
    """Sum S1 = sum weight1(n) c_n w^n and S2 = sum_(n>=1) weight2(n) c_n w^(n-1)."""
    c = 1.0
    pw = 1.0 + 0j
    pw_prev = 0j
    s1 = s2 = 0j
    t1 = t2 = 0j
    for n in range(policy.max_terms):
        t1 = weight1(n) * c * pw
        t2 = weight2(n) * c * pw_prev
        s1 += t1
        s2 += t2
        if (
            n > hump
            and abs(t1) <= policy.rel_tolerance * abs(s1)
            and abs(t2) <= policy.rel_tolerance * abs(s2)
        ):
            return (
                SeriesValue(s1, n + 1, 2.0 * abs(t1)),
                SeriesValue(s2, n + 1, 2.0 * abs(t2)),
            )
        pw_prev = pw
        pw = pw * w
        c *= _coef_ratio(n, nu)
    raise SeriesConvergenceError(f"series in w={w} for nu={nu} did not converge")


def g_value(order: Order | float, z: complex, policy: SeriesPolicy | None = None) -> complex:
    """g_nu(z) = 2^nu Gamma(1+nu) z^(1-nu) J_nu(z), summed as a power series."""
    order = as_order(order)
    nu = _check_family_order(order)
    z = complex(z)
    s, _ = _sum_pair(nu, z * z, lambda n: 1.0, lambda n: 0.0, abs(z), _policy(policy))
    return z * s.value


def g_derivative_series(order, z, policy=None) -> tuple[SeriesValue, SeriesValue]:
    order = as_order(order)
    nu = _check_family_order(order)
    z = complex(z)
    if abs(z) > G_ARG_CAP:
        raise DomainError(f"|z| = {abs(z)} exceeds the g series cap {G_ARG_CAP}")
    d1, d2 = _sum_pair(
        nu, z * z, lambda n: 2 * n + 1.0, lambda n: (2 * n + 1.0) * 2 * n, abs(z), _policy(policy)
    )
    d2 = SeriesValue(z * d2.value, d2.terms_used, abs(z) * d2.tail_estimate)
    return d1, d2


def g_derivatives(
    order: Order | float, z: complex, policy: SeriesPolicy | None = None
) -> tuple[complex, complex]:
    """Return (g'_nu(z), g''_nu(z)) by termwise differentiation."""
    d1, d2 = g_derivative_series(order, z, policy)
    return d1.value, d2.value


def h_value(order: Order | float, z: complex, policy: SeriesPolicy | None = None) -> complex:
    order = as_order(order)
    nu = _check_family_order(order)
    z = complex(z)
    s, _ = _sum_pair(nu, z, lambda n: 1.0, lambda n: 0.0, math.sqrt(abs(z)), _policy(policy))
    return z * s.value


def h_derivative_series(order, z, policy=None) -> tuple[SeriesValue, SeriesValue]:
    order = as_order(order)
    nu = _check_family_order(order)
    z = complex(z)
    if abs(z) > H_ARG_CAP:
        raise DomainError(f"|z| = {abs(z)} exceeds the h series cap {H_ARG_CAP}")
    return _sum_pair(
        nu, z, lambda n: n + 1.0, lambda n: (n + 1.0) * n, math.sqrt(abs(z)), _policy(policy)
    )


def h_derivatives(
    order: Order | float, z: complex, policy: SeriesPolicy | None = None
) -> tuple[complex, complex]:
    """Return (h'_nu(z), h''_nu(z)); h''(0) = -1/(2(nu+1))."""
    d1, d2 = h_derivative_series(order, z, policy)
    return d1.value, d2.value


def hurwitz_f(
    order: Order | float, z: complex, dini_alpha: float, policy: SeriesPolicy | None = None
) -> complex:
    """f_nu(z) + alpha z f'_nu(z) with f_nu(z) = sum (-1)^n z^n / (n! Gamma(nu+n+1)).

    This is the limit of the scaled Dini-Lommel polynomials.
    """
    order = as_order(order)
    nu = _check_family_order(order)
    policy = _policy(policy)
    z = complex(z)
    term = complex(rgamma(nu + 1.0))
    total = term
    hump = math.sqrt(abs(z))
    for n in range(1, policy.max_terms):
        term *= -z / (n * (n + nu))
        t = (1.0 + dini_alpha * n) * term
        total += t
        if n > hump and abs(t) <= policy.rel_tolerance * abs(total):
            return total
    raise SeriesConvergenceError(f"hurwitz_f series at z={z} did not converge")


def dini_normalized(
    order: Order | float, x: float, dini_alpha: float, policy: SeriesPolicy | None = None
) -> float:
    """2^nu Gamma(nu+1) x^(-nu) [J_nu(x) + alpha x J'_nu(x)] for real x >= 0.

    Entire in x, equal to sum_n c_n (1 + alpha nu + 2 n alpha) x^(2n); its
    value at 0 is 1 + alpha nu.  alpha = 0 gives the normalized J_nu itself,
    alpha = 1/(1-nu) gives g'_nu / (1-nu) and alpha = 1/(2-nu) gives
    2 h'_nu(x^2) / (2-nu).
    """
    order = as_order(order)
    nu = _check_family_order(order)
    x = float(x)
    lead = 1.0 + dini_alpha * nu
    if x == 0.0:
        return lead
    if abs(x) <= J_SERIES_LIMIT:
        s, _ = _sum_pair(
            nu, complex(x * x), lambda n: lead + 2 * n * dini_alpha, lambda n: 0.0, abs(x),
            _policy(policy),
        )
        return s.value.real
    x = abs(x)
    scale = 2.0**nu * gamma_real(nu + 1.0) * x ** (-nu)
    jn = float(scipy.special.jv(nu, x))
    jn1 = float(scipy.special.jv(nu + 1.0, x))
    return scale * (lead * jn - dini_alpha * x * jn1)


def dini_imaginary_axis(
    order: Order | float, t: float, dini_alpha: float, policy: SeriesPolicy | None = None
) -> float:
    """dini_normalized evaluated at x = i t; real, and equal to
    2^nu Gamma(nu+1) t^(-nu) [(1 + alpha nu) I_nu(t) + alpha t I_(nu+1)(t)]."""
    order = as_order(order)
    nu = _check_family_order(order)
    lead = 1.0 + dini_alpha * nu
    if t == 0.0:
        return lead
    s, _ = _sum_pair(
        nu, complex(-t * t), lambda n: lead + 2 * n * dini_alpha, lambda n: 0.0, abs(t),
        _policy(policy),
    )
    return s.value.real


def dini_i_form(
    order: Order | float, t: float, dini_alpha: float, policy: SeriesPolicy | None = None
) -> float:
    """(1 + alpha nu) I_nu(t) + alpha t I_(nu+1)(t), the modified-Bessel form
    of the Dini function on the imaginary axis (up to the factor i^nu)."""
    order = as_order(order)
    return (1.0 + dini_alpha * order.nu) * bessel_i(order, t, policy) + dini_alpha * t * bessel_i(
        Order(order.nu + 1.0), t, policy
    )
