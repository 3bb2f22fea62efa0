"""Lommel polynomials g_(2m,nu), their Dini perturbations, and zero counts.

    g_(2m,nu)(z) = sum_(n=0..m) (-1)^n (2m-n)! / (n! (2m-2n)!)
                   * Gamma(nu+2m-n+1) / Gamma(nu+n+1) * z^n

Coefficients are accumulated term to term by their ratio, starting from
(nu+1)(nu+2)...(nu+2m), so no factorial or gamma value is formed on its own.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnsupportedOrderError
from .special_fn import Order, as_order, rgamma

MAX_DEGREE = 60
# Imaginary parts below this (relative to 1+|root|) are treated as rounding.
REAL_SNAP = 1e-8


@dataclass(frozen=True)
class LommelPoly:
    m: int
    nu: float
    coeffs: tuple[float, ...]  # ascending powers of z

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        return np.polynomial.polynomial.polyval(z, self.coeffs)

    def derivative(self) -> "LommelPoly":
        d = np.polynomial.polynomial.polyder(self.coeffs)
        return LommelPoly(self.m, self.nu, tuple(float(c) for c in d))


@dataclass(frozen=True)
class ZeroClassification:
    negative: tuple[float, ...]
    positive: tuple[float, ...]
    complex_count: int
    complex_roots: tuple[complex, ...] = ()

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.negative), len(self.positive), self.complex_count

    @property
    def real(self) -> tuple[float, ...]:
        return tuple(sorted(self.negative + self.positive))


def _ratio_coefficients(m: int, nu: float, start: float) -> list[float]:
    coeffs = [start]
    c = start
    for n in range(m):
        c *= -((2 * m - 2 * n) * (2 * m - 2 * n - 1)) / (
            (n + 1) * (2 * m - n) * (nu + 2 * m - n) * (nu + n + 1)
        )
        coeffs.append(c)
    return coeffs


def _check(m: int, order: Order) -> None:
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if m > MAX_DEGREE:
        raise OverflowError(f"m = {m} exceeds the supported maximum {MAX_DEGREE}")
    if order.is_negative_integer:
        raise DomainError(f"Lommel coefficients undefined for negative integer nu={order.nu}")


def lommel_coefficients(m: int, order: Order | float) -> LommelPoly:
    order = as_order(order)
    _check(m, order)
    nu = order.nu
    c0 = math.prod(nu + k for k in range(1, 2 * m + 1))
    return LommelPoly(m, nu, tuple(_ratio_coefficients(m, nu, c0)))


def scaled_lommel_coefficients(m: int, order: Order | float) -> LommelPoly:
    """Coefficients of g_(2m,nu)(z) / Gamma(nu+2m+1); these tend to those of f_nu."""
    order = as_order(order)
    _check(m, order)
    return LommelPoly(m, order.nu, tuple(_ratio_coefficients(m, order.nu, rgamma(order.nu + 1))))


def dini_perturb(p: LommelPoly, dini_alpha: float) -> LommelPoly:
    """p(z) + alpha z p'(z): coefficient k is scaled by 1 + alpha k."""
    if dini_alpha < 0:
        raise DomainError(f"dini_alpha must be >= 0, got {dini_alpha}")
    return LommelPoly(p.m, p.nu, tuple((1.0 + dini_alpha * k) * c for k, c in enumerate(p.coeffs)))


def dini_lommel(m: int, order: Order | float, dini_alpha: float) -> LommelPoly:
    """h_(m,nu)(z) = g_(2m,nu)(z) + alpha z g'_(2m,nu)(z)."""
    return dini_perturb(lommel_coefficients(m, order), dini_alpha)


def _raw_roots(coeffs) -> np.ndarray:
    c = np.asarray(coeffs, dtype=float)
    deg = len(c) - 1
    if deg == 1:
        return np.array([-c[0] / c[1]], dtype=complex)
    if deg == 2:
        a, b, cc = c[2], c[1], c[0]
        disc = complex(b * b - 4 * a * cc) ** 0.5
        # avoid cancellation between -b and the discriminant
        q = -0.5 * (b + math.copysign(1.0, b) * disc) if b != 0 else -0.5 * disc
        if q == 0:
            return np.zeros(2, dtype=complex)
        return np.array([q / a, cc / q], dtype=complex)
    comp = np.polynomial.polynomial.polycompanion(c)
    return np.linalg.eigvals(comp).astype(complex)


def _newton_polish(coeffs, x: float, steps: int = 3) -> float:
    d = np.polynomial.polynomial.polyder(coeffs)
    for _ in range(steps):
        fx = np.polynomial.polynomial.polyval(x, coeffs)
        dx = np.polynomial.polynomial.polyval(x, d)
        if dx == 0 or not math.isfinite(fx / dx):
            break
        step = fx / dx
        if abs(step) > 1e-6 * (1 + abs(x)):
            break  # not in the quadratic regime; keep the eigenvalue
        x -= step
    return float(x)


def poly_zeros_classified(p: LommelPoly) -> ZeroClassification:
    """Find all zeros of p and split them into negative, positive and non-real."""
    if p.degree < 1:
        raise DomainError("degree must be >= 1")
    roots = _raw_roots(p.coeffs)
    negative, positive, nonreal = [], [], []
    for r in roots:
        if abs(r.imag) <= REAL_SNAP * (1 + abs(r)):
            x = _newton_polish(p.coeffs, float(r.real))
            (negative if x < 0 else positive).append(x)
        else:
            nonreal.append(complex(r))
    nonreal.sort(key=lambda r: (r.real, r.imag))
    return ZeroClassification(
        tuple(sorted(negative)), tuple(sorted(positive)), len(nonreal), tuple(nonreal)
    )


def expected_classification(m: int, order: Order | float) -> tuple[int, int, int]:
    """Counts (negative, positive, non-real) predicted by Hurwitz's theorem.

    nu > -1:                 all m zeros positive.
    nu in (-2s-2, -2s-1):    2s non-real, one negative, m-2s-1 positive.
    nu in (-2s-1, -2s), s>0: 2s non-real, m-2s positive.
    """
    order = as_order(order)
    nu = order.nu
    if m < 1:
        raise DomainError("m must be >= 1")
    if nu == math.floor(nu) and nu <= -1:
        raise UnsupportedOrderError(f"integer order {nu} is not covered")
    if nu > -1:
        return 0, m, 0
    if nu <= -2 * m:
        raise UnsupportedOrderError(f"nu={nu} <= -2m={-2 * m} is not covered")
    k = math.floor(-nu)  # nu in (-k-1, -k)
    if k % 2 == 1:
        s = (k - 1) // 2
        if m < 2 * s + 1:
            raise UnsupportedOrderError(f"m={m} < 2s+1={2 * s + 1} is not covered")
        return 1, m - 2 * s - 1, 2 * s
    s = k // 2
    if m < 2 * s:
        raise UnsupportedOrderError(f"m={m} < 2s={2 * s} is not covered")
    return 0, m - 2 * s, 2 * s
