"""Radius of convexity of the normalized Bessel functions g_nu and h_nu for
nu in (-2, -1), with the zero catalogs, Lommel polynomials and numerical
checks that support it."""
from .errors import (
    BracketError,
    DiniRadiusError,
    DomainError,
    PoleError,
    SeriesConvergenceError,
    UnsupportedOrderError,
)
from .radius import RadiusFamily, RadiusQuery, RadiusResult, phi_g, phi_h, radius_convexity
from .special_fn import Order, OrderClass, SeriesPolicy, bessel_i, bessel_j, gamma_real
from .zeros import Family, ZeroCatalog, bessel_catalog, dini_catalog

__version__ = "0.1.0"
