"""
Pressure and force between two parallel guided photons.

Geometry: photon 1 sits at (-d, 0), photon 2 at (+d, 0), both moving along
+z.  A strip along x = 0 between y = -inf and +inf separates them.  At a strip
point (0, y) photon 1 sees polar angle phi with cos(phi) = d/rho and
sin(phi) = y/rho, rho^2 = d^2 + y^2, and photon 2 sees pi - phi.

``handedness`` picks the double-sign branch of a single photon's exterior
field (+1 upper, -1 lower).  For a pair, ``branch`` picks the double-sign
branch of the summed fields: with parallel spins both photons take it; with
antiparallel spins branch +1 means photon 1 lower and photon 2 upper.

Pressure across the strip, with the magnetic stress scaled by u/c for photons
moving at u = (1 - 10^-alpha) c::

    P = eps0 [(-Ex^2 + Ey^2) + (u/c) (-(cBx)^2 + (cBy)^2)]

which leaves exactly 10^-alpha times the electric stress.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .constants import C, EPS0
from .numerics import integrate_finite, integrate_real_line

__all__ = [
    "Spin", "PhotonPairConfig", "RealField", "external_real_fields",
    "external_real_fields_expanded", "mirrored_fields", "single_photon_at",
    "summed_strip_fields", "summed_strip_fields_printed", "strip_fields_bruteforce",
    "strip_pressure", "strip_pressure_printed", "strip_pressure_from_fields",
    "strip_force", "strip_force_closed", "strip_force_quadrature",
    "useful_integrals_check", "force_sweep", "ForceRow",
]


class Spin(enum.Enum):
    PARALLEL = "parallel"
    ANTIPARALLEL = "antiparallel"


def _sign(h: int) -> int:
    if h not in (1, -1):
        raise ValueError(f"handedness must be +1 or -1, got {h!r}")
    return h


@dataclass(frozen=True)
class PhotonPairConfig:
    b: float
    d: float
    E0: float
    alpha: float
    delta_z: float
    spin: Spin = Spin.ANTIPARALLEL
    chi: float = 0.0
    branch: int = 1

    def __post_init__(self):
        if not (self.b > 0 and self.d > 0 and self.delta_z > 0 and self.alpha > 0):
            raise ValueError("b, d, delta_z and alpha must be positive")
        if not self.d > self.b:
            raise ValueError(f"spacing must satisfy d > b, got d={self.d!r}, b={self.b!r}")
        _sign(self.branch)

    @property
    def residual(self) -> float:
        """10^-alpha = 1 - u/c."""
        return 10.0 ** -self.alpha

    @property
    def pair_handedness(self) -> tuple[int, int]:
        if self.spin is Spin.PARALLEL:
            return self.branch, self.branch
        return -self.branch, self.branch

    def with_(self, **kw) -> "PhotonPairConfig":
        fields = dict(self.__dict__)
        fields.update(kw)
        return PhotonPairConfig(**fields)


@dataclass(frozen=True)
class RealField:
    """Real Cartesian E (V/m) and cB (V/m)."""

    E: np.ndarray
    cB: np.ndarray

    @property
    def B(self) -> np.ndarray:
        return self.cB / C

    def __add__(self, other: "RealField") -> "RealField":
        return RealField(self.E + other.E, self.cB + other.cB)


def _check_rho(rho, b):
    if rho < b:
        raise ValueError(f"exterior fields need rho >= b, got rho={rho!r} < b={b!r}")


def external_real_fields(E0, b, rho, phi, chi, handedness=1) -> RealField:
    """Real part of the exterior fields in compound-angle form.

    E = E0 b^2/rho^2 [-x^ cos(chi +/- 2phi) -/+ y^ sin(chi +/- 2phi)]
    cB = E0 b^2/rho^2 [+/- x^ sin(chi +/- 2phi) - y^ cos(chi +/- 2phi)]
    """
    _check_rho(rho, b)
    s = _sign(handedness)
    A = E0 * b * b / (rho * rho)
    a = chi + s * 2 * phi
    E = A * np.array([-math.cos(a), -s * math.sin(a), 0.0])
    cB = A * np.array([s * math.sin(a), -math.cos(a), 0.0])
    return RealField(E, cB)


def _expanded(A, c2, s2, cx, sx, s):
    E = A * np.array([-c2 * cx + s * s2 * sx, -(s * c2 * sx + s2 * cx), 0.0])
    cB = A * np.array([s * c2 * sx + s2 * cx, -c2 * cx + s * s2 * sx, 0.0])
    return RealField(E, cB)


def external_real_fields_expanded(E0, b, rho, phi, chi, handedness=1) -> RealField:
    """Same fields written with trigonometric functions of single angles."""
    _check_rho(rho, b)
    s = _sign(handedness)
    A = E0 * b * b / (rho * rho)
    return _expanded(A, math.cos(2 * phi), math.sin(2 * phi), math.cos(chi), math.sin(chi), s)


def mirrored_fields(E0, b, rho, phi, chi, handedness=1) -> RealField:
    """Fields of the second photon: the expanded form with sin(2phi) -> -sin(2phi).

    `phi` is the angle seen from the first photon.
    """
    _check_rho(rho, b)
    s = _sign(handedness)
    A = E0 * b * b / (rho * rho)
    return _expanded(A, math.cos(2 * phi), -math.sin(2 * phi), math.cos(chi), math.sin(chi), s)


def single_photon_at(center_x: float, E0, b, x, y, chi, handedness=1) -> RealField:
    """Exterior field of one photon centred at (center_x, 0), sampled at (x, y)."""
    dx, dy = x - center_x, y
    return external_real_fields_expanded(E0, b, math.hypot(dx, dy), math.atan2(dy, dx),
                                         chi, handedness)


def _strip_angles(cfg: PhotonPairConfig, y):
    rho2 = cfg.d ** 2 + y * y
    return rho2, (cfg.d ** 2 - y * y) / rho2, 2 * cfg.d * y / rho2


def strip_fields_bruteforce(cfg: PhotonPairConfig, y: float) -> RealField:
    """Sum of the two photon fields, each evaluated about its own centre."""
    h1, h2 = cfg.pair_handedness
    return (single_photon_at(-cfg.d, cfg.E0, cfg.b, 0.0, y, cfg.chi, h1)
            + single_photon_at(cfg.d, cfg.E0, cfg.b, 0.0, y, cfg.chi, h2))


def summed_strip_fields(cfg: PhotonPairConfig, y: float) -> RealField:
    """Closed form of the summed strip fields.

    parallel:      E  = 2A c2 (-x^ cos(chi) -/+ y^ sin(chi))
                   cB = 2A c2 (+/- x^ sin(chi) - y^ cos(chi))
    antiparallel:  E  = -x^ 2A (c2 cos(chi) +/- s2 sin(chi))
                   cB = -y^ 2A (c2 cos(chi) +/- s2 sin(chi))

    with A = E0 b^2/rho^2, c2 = cos(2phi), s2 = sin(2phi).
    """
    rho2, c2, s2 = _strip_angles(cfg, y)
    A2 = 2 * cfg.E0 * cfg.b ** 2 / rho2
    cx, sx = math.cos(cfg.chi), math.sin(cfg.chi)
    s = cfg.branch
    if cfg.spin is Spin.PARALLEL:
        E = A2 * c2 * np.array([-cx, -s * sx, 0.0])
        cB = A2 * c2 * np.array([s * sx, -cx, 0.0])
    else:
        q = c2 * cx + s * s2 * sx
        E = np.array([-A2 * q, 0.0, 0.0])
        cB = np.array([0.0, -A2 * q, 0.0])
    return RealField(E, cB)


def summed_strip_fields_printed(cfg: PhotonPairConfig, y: float) -> RealField:
    """The summed fields exactly as printed in the main text.

    Differs from :func:`summed_strip_fields` in the parallel cB prefactor
    (b^2 instead of 2b^2) and in the antiparallel lower-branch E, which is
    written -x^ 2A(+/- c2 cos + s2 sin).
    """
    rho2, c2, s2 = _strip_angles(cfg, y)
    A = cfg.E0 * cfg.b ** 2 / rho2
    cx, sx = math.cos(cfg.chi), math.sin(cfg.chi)
    s = cfg.branch
    if cfg.spin is Spin.PARALLEL:
        E = 2 * A * c2 * np.array([-cx, -s * sx, 0.0])
        cB = A * c2 * np.array([s * sx, -cx, 0.0])
    else:
        E = np.array([-2 * A * (s * c2 * cx + s2 * sx), 0.0, 0.0])
        cB = np.array([0.0, -2 * A * (c2 * cx + s * s2 * sx), 0.0])
    return RealField(E, cB)


def strip_pressure_from_fields(cfg: PhotonPairConfig, y: float, exact: bool = True,
                               fields: RealField | None = None) -> float:
    """Stress evaluation on the summed fields, odd terms included.

    With `exact` the magnetic term is multiplied by u/c as a float; otherwise
    the difference is formed analytically as -10^-alpha times the magnetic
    stress plus the (vanishing at speed c) E + cB balance.
    """
    f = summed_strip_fields(cfg, y) if fields is None else fields
    Ex, Ey = f.E[0], f.E[1]
    cBx, cBy = f.cB[0], f.cB[1]
    elec = -Ex ** 2 + Ey ** 2
    mag = -cBx ** 2 + cBy ** 2
    if exact:
        return EPS0 * (elec + (1.0 - cfg.residual) * mag)
    return EPS0 * ((elec + mag) - cfg.residual * mag)


def strip_pressure(cfg: PhotonPairConfig, y: float) -> float:
    """Even-in-y pressure, consistent in sign with the integrated force.

    parallel:      -4 eps0 b^4 E0^2 10^-alpha (y^2-d^2)^2 cos(2chi) / rho^8
    antiparallel:  -4 eps0 b^4 E0^2 10^-alpha ((y^2-d^2)^2 cos^2 + 4d^2y^2 sin^2) / rho^8
    """
    rho2 = cfg.d ** 2 + y * y
    pre = -4 * EPS0 * cfg.b ** 4 * cfg.E0 ** 2 * cfg.residual / rho2 ** 4
    u = (y * y - cfg.d ** 2) ** 2
    if cfg.spin is Spin.PARALLEL:
        return pre * u * math.cos(2 * cfg.chi)
    v = 4 * cfg.d ** 2 * y * y
    return pre * (u * math.cos(cfg.chi) ** 2 + v * math.sin(cfg.chi) ** 2)


def strip_pressure_printed(cfg: PhotonPairConfig, y: float, eps: float = EPS0) -> float:
    """Pressure as printed in the supplementary derivation.

    The parallel form carries a + sign and the antiparallel form has neither
    an eps factor nor a minus sign; pass ``eps=1`` to see the latter literally.
    """
    rho2 = cfg.d ** 2 + y * y
    core = 4 * cfg.b ** 4 * cfg.E0 ** 2 * cfg.residual / rho2 ** 4
    u = (y * y - cfg.d ** 2) ** 2
    if cfg.spin is Spin.PARALLEL:
        return EPS0 * core * u * math.cos(2 * cfg.chi)
    v = 4 * cfg.d ** 2 * y * y
    return eps * core * (u * math.cos(cfg.chi) ** 2 + v * math.sin(cfg.chi) ** 2)


def strip_force_closed(cfg: PhotonPairConfig) -> float:
    """-pi eps0 dz b^4/d^3 E0^2 10^-alpha, times cos(2chi) for parallel spins."""
    F = -math.pi * EPS0 * cfg.delta_z * cfg.b ** 4 / cfg.d ** 3 * cfg.E0 ** 2 * cfg.residual
    return F * math.cos(2 * cfg.chi) if cfg.spin is Spin.PARALLEL else F


def strip_force_quadrature(cfg: PhotonPairConfig, tol: float = 1e-12,
                           from_fields: bool = False) -> float:
    """dz times the strip integral of the pressure over y in (-inf, inf)."""
    scale = cfg.b ** 4 * cfg.E0 ** 2 * cfg.residual / cfg.d ** 3
    if from_fields:
        # the leading-order form avoids the 1 - u/c cancellation at large alpha
        f = lambda y: strip_pressure_from_fields(cfg, y, exact=False)
    else:
        f = lambda y: strip_pressure(cfg, y)
    # integrate over s = y/d with the pressure scaled so the integral is O(1)
    unit = EPS0 * scale / cfg.d
    res = integrate_real_line(lambda s: f(s * cfg.d) / unit, tol, abs_tol=tol)
    return res.value * unit * cfg.d * cfg.delta_z


def strip_force(cfg: PhotonPairConfig, tol: float = 1e-12) -> tuple[float, float]:
    """(closed form, quadrature) force in newtons."""
    return strip_force_closed(cfg), strip_force_quadrature(cfg, tol)


@dataclass(frozen=True)
class UsefulIntegrals:
    d: float
    y2_rho8: float
    inv_rho4: float
    rel_residual_y2_rho8: float
    rel_residual_inv_rho4: float


def useful_integrals_check(d: float, tol: float = 1e-13) -> UsefulIntegrals:
    """Quadrature of int y^2/rho^8 dy and int 1/rho^4 dy against pi/(16 d^5), pi/(2 d^3)."""
    if not d > 0:
        raise ValueError("d must be positive")
    # substitute y = d s so both integrals are O(1)
    i1 = integrate_real_line(lambda s: s * s / (1 + s * s) ** 4, tol, abs_tol=tol).value / d ** 5
    i2 = integrate_real_line(lambda s: 1 / (1 + s * s) ** 2, tol, abs_tol=tol).value / d ** 3
    e1, e2 = math.pi / (16 * d ** 5), math.pi / (2 * d ** 3)
    return UsefulIntegrals(d, i1, i2, abs(i1 / e1 - 1), abs(i2 / e2 - 1))


def time_average_force(cfg: PhotonPairConfig, tol: float = 1e-12) -> float:
    """Closed-form force averaged over one period of chi."""
    res = integrate_finite(lambda x: strip_force_closed(cfg.with_(chi=x)), 0.0, 2 * math.pi,
                           tol, abs_tol=tol * abs(strip_force_closed(cfg.with_(chi=0.0))))
    return res.value / (2 * math.pi)


@dataclass(frozen=True)
class ForceRow:
    d: float
    alpha: float
    spin: str
    closed: float
    quadrature: float
    rel_residual: float


def force_sweep(ds, alphas, base: PhotonPairConfig, tol: float = 1e-12) -> list[ForceRow]:
    rows = []
    for d in ds:
        for a in alphas:
            cfg = base.with_(d=float(d), alpha=float(a))
            closed, quad = strip_force(cfg, tol)
            rows.append(ForceRow(cfg.d, cfg.alpha, cfg.spin.value, closed, quad,
                                 abs(quad / closed - 1) if closed else abs(quad)))
    return rows


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log|y| against log x."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.abs(np.asarray(ys, dtype=float)))
    return float(np.polyfit(lx, ly, 1)[0])
