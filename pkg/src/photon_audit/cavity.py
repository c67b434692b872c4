"""
Fields of a hollow spherical cavity and its lowest TEM-dipole eigenradius.

Two radial functions enter, with sigma = k r::

    j(sigma)  = (cos(sigma) + sin(sigma)/sigma) / sigma             (as printed)
    j*(sigma) = (cos(sigma)/sigma + (1 - 1/sigma^2) sin(sigma)) / sigma

j* is regular at the origin (j*(0) = 2/3) and equals (sigma j1)'/sigma with
j1 the ordinary spherical Bessel function sin/sigma^2 - cos/sigma.  The
printed j is not j1: its cosine term has the opposite sign, which makes it
diverge like 1/sigma^2.  Both are provided and ``cavity_fields`` takes a
``variant`` selector.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .constants import EPS0, ETA
from .numerics import find_root

SERIES_CROSSOVER = 0.1
_SERIES_TERMS = 9
ROOT_BRACKET = (2.0, 3.0)


class Variant(enum.Enum):
    PRINTED = "printed"
    REGULAR = "regular"


def _check_sigma(sigma):
    if sigma == 0:
        raise ValueError("sigma must be nonzero")


def sph_j(sigma: float) -> float:
    """Printed radial function (cos(sigma) + sin(sigma)/sigma)/sigma."""
    _check_sigma(sigma)
    return (math.cos(sigma) + math.sin(sigma) / sigma) / sigma


def sph_j1(sigma: float) -> float:
    """Regular spherical Bessel function j1, finite at sigma = 0."""
    if abs(sigma) < SERIES_CROSSOVER:
        # sum_{n>=1} (-1)^(n+1) 2n sigma^(2n-1) / (2n+1)!
        return math.fsum((-1) ** (n + 1) * 2 * n * sigma ** (2 * n - 1) / math.factorial(2 * n + 1)
                         for n in range(1, _SERIES_TERMS))
    return math.sin(sigma) / sigma ** 2 - math.cos(sigma) / sigma


def sph_jstar(sigma: float) -> float:
    """(cos(sigma)/sigma + (1 - 1/sigma^2) sin(sigma)) / sigma, series near zero."""
    _check_sigma(sigma)
    if abs(sigma) < SERIES_CROSSOVER:
        # sum_{n>=1} (-1)^(n+1) 4n^2 sigma^(2n-2) / (2n+1)!
        return math.fsum((-1) ** (n + 1) * 4 * n * n * sigma ** (2 * n - 2) / math.factorial(2 * n + 1)
                         for n in range(1, _SERIES_TERMS))
    return (math.cos(sigma) / sigma + (1.0 - 1.0 / sigma ** 2) * math.sin(sigma)) / sigma


def _jstar_closed(sigma: float) -> float:
    return (math.cos(sigma) / sigma + (1.0 - 1.0 / sigma ** 2) * math.sin(sigma)) / sigma


@dataclass(frozen=True)
class CavityMode:
    p: float
    k: float
    a: float

    def __post_init__(self):
        if not (self.k > 0 and self.a > 0):
            raise ValueError("k and a must be positive")

    @property
    def ka(self) -> float:
        return self.k * self.a

    @classmethod
    def lowest(cls, p: float, a: float) -> "CavityMode":
        """The mode whose k a is the smallest root of j*."""
        return cls(p, lowest_root() / a, a)


def cavity_fields(mode: CavityMode, r: float, theta: float, t: float = 0.0,
                  omega: float = 1.0, variant: Variant = Variant.PRINTED):
    """Spherical (r, theta, phi) components of E and B inside the cavity.

    ::

        E = p k^3/(4 pi eps0) {(2/sigma) j cos(th) r^ - j* sin(th) th^} sin(w t)
        B = eta p k^3/(4 pi) j sin(th) ph^ cos(w t)

    With ``Variant.REGULAR`` the function j is replaced by j1.  At r = 0 only
    the regular variant is defined; its limit is used there.
    """
    if not 0 <= r <= mode.a * (1 + 1e-12):
        raise ValueError(f"r must lie in [0, a], got {r!r}")
    sigma = mode.k * r
    if variant is Variant.PRINTED:
        if sigma == 0:
            raise ValueError("printed radial function is singular at r = 0")
        j = sph_j(sigma)
        j_over = j / sigma
        js = sph_jstar(sigma)
    else:
        if sigma < SERIES_CROSSOVER:
            # j1/sigma = sum (-1)^(n+1) 2n sigma^(2n-2)/(2n+1)!
            j_over = math.fsum((-1) ** (n + 1) * 2 * n * sigma ** (2 * n - 2) / math.factorial(2 * n + 1)
                               for n in range(1, _SERIES_TERMS))
            j = j_over * sigma
            js = sph_jstar(sigma) if sigma > 0 else 2.0 / 3.0
        else:
            j = sph_j1(sigma)
            j_over = j / sigma
            js = sph_jstar(sigma)
    pre = mode.p * mode.k ** 3 / (4 * math.pi * EPS0)
    st, ct = math.sin(theta), math.cos(theta)
    E = pre * np.array([2 * j_over * ct, -js * st, 0.0]) * math.sin(omega * t)
    B = ETA * mode.p * mode.k ** 3 / (4 * math.pi) * np.array([0.0, 0.0, j * st]) * math.cos(omega * t)
    return E, B


def lowest_root(tol: float = 1e-14) -> float:
    """Smallest positive root of j*, bracketed on [2, 3]."""
    return find_root(_jstar_closed, *ROOT_BRACKET, tol=tol)


def lowest_eigenradius() -> float:
    """Smallest a / lambda with j*(k a) = 0."""
    return lowest_root() / (2 * math.pi)


def min_cavity_radius(wavelength: float) -> float:
    return lowest_eigenradius() * wavelength


@dataclass(frozen=True)
class HarmonicIdentity:
    name: str
    max_residual: float
    holds: bool


@dataclass(frozen=True)
class CubicHarmonics:
    cos_corrected: HarmonicIdentity
    sin_identity: HarmonicIdentity
    cos_printed: HarmonicIdentity


def cubic_harmonics(omega: float = 1.0, n: int = 1024, tol: float = 1e-12) -> CubicHarmonics:
    """Check the cube identities of cos and sin over one period.

    ``cos_printed`` is the variant with ``3 cos(wt) + 3 cos(wt)`` on the right,
    which does not hold.
    """
    if not omega > 0:
        raise ValueError("omega must be positive")
    wt = omega * np.linspace(0.0, 2 * math.pi / omega, n, endpoint=False)
    c, s = np.cos(wt), np.sin(wt)
    r_cos = float(np.abs(4 * c ** 3 - (np.cos(3 * wt) + 3 * c)).max())
    r_sin = float(np.abs(4 * s ** 3 - (-np.sin(3 * wt) + 3 * s)).max())
    r_bad = float(np.abs(4 * c ** 3 - (3 * c + 3 * c)).max())
    return CubicHarmonics(
        HarmonicIdentity("4cos^3 = cos3 + 3cos", r_cos, r_cos <= tol),
        HarmonicIdentity("4sin^3 = -sin3 + 3sin", r_sin, r_sin <= tol),
        HarmonicIdentity("4cos^3 = 3cos + 3cos", r_bad, r_bad <= tol),
    )
