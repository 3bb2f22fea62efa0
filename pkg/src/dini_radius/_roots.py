"""Bracketed scalar root finding: sign-change scans and bisection."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import BracketError


@dataclass(frozen=True)
class Root:
    x: float
    lo: float
    hi: float
    iterations: int


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def bisect(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = 1e-12,
    flo: float | None = None,
    fhi: float | None = None,
    max_iter: int = 200,
) -> Root:
    """Bisection to a bracket of width ``xtol`` followed by one secant step.

    The secant step is only accepted if it stays inside the final bracket.
    """
    flo = f(lo) if flo is None else flo
    fhi = f(hi) if fhi is None else fhi
    if flo == 0.0:
        return Root(lo, lo, lo, 0)
    if fhi == 0.0:
        return Root(hi, hi, hi, 0)
    if _sign(flo) == _sign(fhi):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")
    it = 0
    while hi - lo > xtol and it < max_iter:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        it += 1
        if fm == 0.0:
            return Root(mid, mid, mid, it)
        if _sign(fm) == _sign(flo):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    x = 0.5 * (lo + hi)
    if fhi != flo:
        sec = lo - flo * (hi - lo) / (fhi - flo)
        if lo <= sec <= hi and math.isfinite(sec):
            x = sec
    return Root(x, lo, hi, it)


def sign_changes(
    f: Callable[[float], float], start: float, stop: float, step: float
) -> Iterator[tuple[float, float, float, float]]:
    """Yield (a, b, f(a), f(b)) for each grid cell on [start, stop] where f changes sign."""
    a = start
    fa = f(a)
    k = 1
    while True:
        b = min(start + k * step, stop)
        fb = f(b)
        if _sign(fa) * _sign(fb) < 0 or (fb == 0.0 and fa != 0.0):
            yield a, b, fa, fb
        if b >= stop:
            return
        a, fa = b, fb
        k += 1
