"""
Speed ratio, Lorentz factor and photon sizing.

The speed ratio alpha counts the nines in u/c = 1 - 10^-alpha.  Continued
charge induction requires Lambda E0 = E_S, so E0 = sqrt(2) E_S 10^(-alpha/2)
with the approximate Lambda = 10^(alpha/2) / sqrt(2).  A photon of energy
h nu / 2 stored as pi eps0 E0^2 b^2 l then has length
l = h nu / (2 pi eps0 E0^2 b^2).
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import C, E_S, EPS0, H

AM = 1e-18
NM = 1e-9
DEFAULT_WAVELENGTH = 500e-9


class ApproximationWarning(UserWarning):
    """The closed-form Lorentz factor is used outside its range of validity."""


@dataclass(frozen=True)
class LorentzFactor:
    exact: float
    approx: float

    @property
    def ratio(self) -> float:
        return self.exact / self.approx


def speed_ratio(alpha: float) -> float:
    """u/c = 1 - 10^-alpha."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    return 1.0 - 10.0 ** -alpha


def lorentz_factor(alpha: float, warn: bool = True) -> LorentzFactor:
    beta = speed_ratio(alpha)
    eps = 10.0 ** -alpha
    # 1 - beta^2 = eps (2 - eps), written to avoid cancellation
    exact = 1.0 / math.sqrt(eps * (2.0 - eps))
    approx = 10.0 ** (alpha / 2) / math.sqrt(2.0)
    if warn and alpha < 2:
        warnings.warn(f"Lambda ~ 10^(alpha/2)/sqrt(2) is poor for alpha={alpha} < 2 "
                      f"(exact {exact:.4g}, approximate {approx:.4g})",
                      ApproximationWarning, stacklevel=2)
    return LorentzFactor(exact, approx)


def gamma_from_velocity(u) -> float:
    speed = float(np.linalg.norm(u))
    if speed >= C:
        raise ValueError(f"|u| = {speed!r} must be below c")
    return 1.0 / math.sqrt(1.0 - (speed / C) ** 2)


def transform_fields(E, B, u, check_normal: bool = True):
    """Field components normal to the velocity, as printed::

        E' = Lambda (E - u x B)
        B' = Lambda (B + u x E / c^2)

    Parameters
    ----------
    E, B : array_like
        Cartesian field vectors (complex allowed), components normal to `u`.
    u : array_like
        Velocity in m/s, |u| < c.
    """
    E = np.asarray(E)
    B = np.asarray(B)
    u = np.asarray(u, dtype=float)
    lam = gamma_from_velocity(u)
    speed = np.linalg.norm(u)
    if check_normal and speed > 0:
        uhat = u / speed
        scale = max(np.abs(E).max(), C * np.abs(B).max(), 1e-300)
        if abs(np.dot(E, uhat)) > 1e-12 * scale or abs(C * np.dot(B, uhat)) > 1e-12 * scale:
            raise ValueError("fields must be normal to the velocity")
    E_new = lam * (E - np.cross(u, B))
    B_new = lam * (B + np.cross(u, E) / C ** 2)
    return E_new, B_new


def dipole_strength(alpha: float, E_threshold: float = E_S) -> float:
    """E0 = sqrt(2) E_S 10^(-alpha/2)."""
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha!r}")
    return math.sqrt(2.0) * E_threshold * 10.0 ** (-alpha / 2)


def alpha_from_strength(E0: float, E_threshold: float = E_S) -> float:
    """Inverse of :func:`dipole_strength`."""
    limit = math.sqrt(2.0) * E_threshold
    if not 0 < E0 < limit:
        raise ValueError(f"E0 must lie in (0, sqrt(2) E_S = {limit:.4g}), got {E0!r}")
    return -2.0 * math.log10(E0 / limit)


def photon_length(b: float, alpha: float, wavelength: float = DEFAULT_WAVELENGTH,
                  E_threshold: float = E_S) -> tuple[float, float]:
    """Length l (m) and l / lambda for a photon of energy h nu / 2, nu = c / lambda."""
    if not b > 0 or not wavelength > 0:
        raise ValueError("b and wavelength must be positive")
    E0 = dipole_strength(alpha, E_threshold)
    nu = C / wavelength
    l = H * nu / (2.0 * math.pi * EPS0 * E0 ** 2 * b ** 2)
    return l, l / wavelength


class Consistency(enum.Enum):
    CONSISTENT = "consistent"
    PRINTED_MISMATCH = "printed-value-mismatch"


@dataclass(frozen=True)
class PrintedSizing:
    E0: float
    l_over_lambda: float
    l_nm: float


@dataclass(frozen=True)
class PhotonSizing:
    b_am: float
    alpha: float
    E0: float
    l_over_lambda: float
    l_nm: float
    printed: PrintedSizing | None = None
    consistency: Consistency = Consistency.CONSISTENT
    mismatched: tuple[str, ...] = ()

    @property
    def energy(self) -> float:
        return math.pi * EPS0 * self.E0 ** 2 * (self.b_am * AM) ** 2 * self.l_nm * NM


PRINTED_TABLE2 = {
    (10.0, 4.0): PrintedSizing(1.84e16, 0.42, 210.0),
    (100.0, 2.0): PrintedSizing(1.84e17, 0.42, 0.021),
    (10.0, 2.0): PrintedSizing(1.84e17, 0.0042, 2.1),
    (100.0, 4.0): PrintedSizing(1.84e16, 0.0042, 2.1),
}
TABLE2_ROWS = tuple(PRINTED_TABLE2)
TABLE2_TOL = 0.02


def sizing_row(b_am: float, alpha: float, wavelength: float = DEFAULT_WAVELENGTH,
               printed: PrintedSizing | None = None, tol: float = TABLE2_TOL,
               E_threshold: float = E_S) -> PhotonSizing:
    E0 = dipole_strength(alpha, E_threshold)
    l, ratio = photon_length(b_am * AM, alpha, wavelength, E_threshold)
    bad = []
    if printed is not None:
        for name, got, want in (("E0", E0, printed.E0),
                                ("l_over_lambda", ratio, printed.l_over_lambda),
                                ("l_nm", l / NM, printed.l_nm)):
            if abs(got / want - 1.0) > tol:
                bad.append(name)
    flag = Consistency.PRINTED_MISMATCH if bad else Consistency.CONSISTENT
    return PhotonSizing(b_am, alpha, E0, ratio, l / NM, printed, flag, tuple(bad))


def table2(rows=TABLE2_ROWS, wavelength: float = DEFAULT_WAVELENGTH,
           tol: float = TABLE2_TOL, E_threshold: float = E_S) -> list[PhotonSizing]:
    """Photon sizing rows; printed values are attached only at the printed wavelength."""
    out = []
    for b_am, alpha in rows:
        printed = None
        if math.isclose(wavelength, DEFAULT_WAVELENGTH, rel_tol=1e-12):
            printed = PRINTED_TABLE2.get((float(b_am), float(alpha)))
        out.append(sizing_row(b_am, alpha, wavelength, printed, tol, E_threshold))
    return out
