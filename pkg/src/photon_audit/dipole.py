"""
Photon construction inside the atom: dipole fields and the charge-induction
criteria that turn a rotating dipole into a guided TEM mode.

Several of the dipole expressions disagree with each other in their angular
structure (2 sin(theta) against 3 sin(theta) radial terms, cos/sin placement).
Each one is evaluated exactly as written; :func:`dipole_field_textbook` is
the standard quasi-static pattern kept for comparison.

All vectors returned here are Cartesian (x, y, z) unless noted.  The
``handedness`` argument selects the upper (+1) or lower (-1) branch of a
double sign, always read top to bottom: for the rotating moment
p (x^ -/+ i y^) the upper branch is x^ - i y^.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bicomplex import Bicomplex, Projection, exp_j
from .constants import C, EPS0, ETA, E_S
from .waveguide import PhasorField, Polarization

__all__ = [
    "DipoleParams", "MixedPoint", "Parity", "ParityResult", "InductionResult",
    "dipole_field_linear_region", "dipole_field_textbook", "dipole_field_rotating",
    "rotating_dipole_moment", "total_field_mixed", "near_axis_field",
    "induced_kappa", "threshold_exceeded", "parity_check", "induction_condition",
    "guided_onset_fields", "onset_surface_current", "radiation_q",
    "shell_fields", "two_shell_cancellation", "moment_to_E0",
    "nuclear_static_field_sampler", "waveguide_polarization",
]


def _sign(handedness: int) -> int:
    if handedness not in (1, -1):
        raise ValueError(f"handedness must be +1 or -1, got {handedness!r}")
    return handedness


@dataclass(frozen=True)
class DipoleParams:
    p: float
    omega: float
    handedness: int = 1
    E_N: float = 0.0
    k: float | None = None

    def __post_init__(self):
        if not self.p > 0:
            raise ValueError("dipole moment must be positive")
        if self.E_N < 0:
            raise ValueError("E_N must be >= 0")
        _sign(self.handedness)
        if self.k is None:
            object.__setattr__(self, "k", self.omega / C)


@dataclass(frozen=True)
class MixedPoint:
    """One point in spherical (r, theta, phi) and cylindrical (rho, phi, z) form."""

    r: float
    theta: float
    phi: float

    @classmethod
    def from_cylindrical(cls, rho, phi, z) -> "MixedPoint":
        return cls(math.hypot(rho, z), math.atan2(rho, z), phi)

    @property
    def rho(self) -> float:
        return self.r * math.sin(self.theta)

    @property
    def z(self) -> float:
        return self.r * math.cos(self.theta)

    @property
    def xyz(self) -> np.ndarray:
        return np.array([self.rho * math.cos(self.phi), self.rho * math.sin(self.phi), self.z])

    # unit vectors in Cartesian components
    @property
    def r_hat(self):
        st, ct = math.sin(self.theta), math.cos(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), ct])

    @property
    def theta_hat(self):
        st, ct = math.sin(self.theta), math.cos(self.theta)
        return np.array([ct * math.cos(self.phi), ct * math.sin(self.phi), -st])

    @property
    def phi_hat(self):
        return np.array([-math.sin(self.phi), math.cos(self.phi), 0.0])

    @property
    def rho_hat(self):
        return np.array([math.cos(self.phi), math.sin(self.phi), 0.0])


def _check_r(pt: MixedPoint):
    if not pt.r > 0:
        raise ValueError("field point must be away from the origin (r > 0)")


def _prefactor(p, r):
    return p / (4.0 * math.pi * EPS0 * r ** 3)


def dipole_field_linear_region(params: DipoleParams, pt: MixedPoint, t: float = 0.0,
                               projection: Projection = Projection.PLUS_I) -> np.ndarray:
    """p/(4 pi eps r^3) {2 sin(th) r^ - (cos(th) th^ +/- j ph^)} e^{+/- j ph} e^{i(wt - kr)}.

    The j unit is projected with `projection`.
    """
    _check_r(pt)
    s = _sign(params.handedness)
    amp = _prefactor(params.p, pt.r) * np.exp(1j * (params.omega * t - params.k * pt.r))
    vec = Bicomplex(amp * (2 * math.sin(pt.theta) * pt.r_hat - math.cos(pt.theta) * pt.theta_hat),
                    amp * (-s * pt.phi_hat))
    return np.asarray((vec * exp_j(s * pt.phi)).project(projection), dtype=complex)


def dipole_field_textbook(params: DipoleParams, pt: MixedPoint, t: float = 0.0) -> np.ndarray:
    """Quasi-static field of a z-directed dipole: p/(4 pi eps0 r^3)(2 cos r^ + sin th^)."""
    _check_r(pt)
    amp = _prefactor(params.p, pt.r) * np.exp(1j * (params.omega * t - params.k * pt.r))
    return amp * (2 * math.cos(pt.theta) * pt.r_hat + math.sin(pt.theta) * pt.theta_hat)


def dipole_field_rotating(params: DipoleParams, pt: MixedPoint, t: float = 0.0) -> np.ndarray:
    """p/(4 pi eps r^3) {2 sin(th) r^ - (cos(th) th^ -/+ i ph^)} e^{i(wt - kr -/+ ph)}."""
    _check_r(pt)
    s = _sign(params.handedness)
    phase = np.exp(1j * (params.omega * t - params.k * pt.r - s * pt.phi))
    amp = _prefactor(params.p, pt.r) * phase
    return amp * (2 * math.sin(pt.theta) * pt.r_hat
                  - (math.cos(pt.theta) * pt.theta_hat - s * 1j * pt.phi_hat))


def rotating_dipole_moment(p: float, omega: float, t: float, phi: float,
                           handedness: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Cartesian and cylindrical forms of p (x^ -/+ i y^) e^{i w t}.

    Returns both as Cartesian vectors; the cylindrical form is
    p (rho^ -/+ i phi^) e^{i(w t -/+ phi)} evaluated at azimuth `phi`.
    """
    s = _sign(handedness)
    cart = p * np.array([1.0, -s * 1j, 0.0]) * np.exp(1j * omega * t)
    rho_hat = np.array([math.cos(phi), math.sin(phi), 0.0])
    phi_hat = np.array([-math.sin(phi), math.cos(phi), 0.0])
    cyl = p * (rho_hat - s * 1j * phi_hat) * np.exp(1j * (omega * t - s * phi))
    return cart, cyl


def total_field_mixed(params: DipoleParams, pt: MixedPoint, t: float = 0.0) -> np.ndarray:
    """p/(4 pi eps r^3) {3 sin(th) r^ - (rho^ -/+ i ph^)} e^{i(wt - kr -/+ ph)} + E_N r^."""
    _check_r(pt)
    s = _sign(params.handedness)
    phase = np.exp(1j * (params.omega * t - params.k * pt.r - s * pt.phi))
    osc = _prefactor(params.p, pt.r) * phase * (
        3 * math.sin(pt.theta) * pt.r_hat - (pt.rho_hat - s * 1j * pt.phi_hat))
    return osc + params.E_N * pt.r_hat


def moment_to_E0(p: float, r: float) -> float:
    """E0 = -p / (4 pi eps r^3), the near-axis amplitude."""
    return -_prefactor(p, r)


def _psi(omega, k, z, phi, t, s):
    return omega * t - k * z - s * phi


def near_axis_field(E0: float, rho: float, phi: float, z: float, t: float,
                    omega: float, k: float | None = None, handedness: int = 1) -> np.ndarray:
    """E0 [rho^ cos(psi) + phi^ sin(psi)], psi = w t - k z -/+ phi (real, Cartesian)."""
    s = _sign(handedness)
    k = omega / C if k is None else k
    psi = _psi(omega, k, z, phi, t, s)
    rho_hat = np.array([math.cos(phi), math.sin(phi), 0.0])
    phi_hat = np.array([-math.sin(phi), math.cos(phi), 0.0])
    return E0 * (rho_hat * math.cos(psi) + phi_hat * math.sin(psi))


def induced_kappa(E0: float, z: float, phi: float, t: float, omega: float,
                  k: float | None = None, handedness: int = 1) -> float:
    """Surface charge eps0 E0 cos(w t - k z -/+ phi)."""
    s = _sign(handedness)
    k = omega / C if k is None else k
    return EPS0 * E0 * math.cos(_psi(omega, k, z, phi, t, s))


def threshold_exceeded(E0: float, E_N: float, E_threshold: float = E_S) -> bool:
    return math.hypot(E0, E_N) > E_threshold


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    NEITHER = "neither"


@dataclass(frozen=True)
class ParityResult:
    parity: Parity
    degenerate: bool = False


def parity_check(sampler: Callable[[np.ndarray], np.ndarray], b: float,
                 phis=None, z: float = 0.0, tol: float = 1e-12,
                 transverse: bool = True) -> ParityResult:
    """Compare a field at (b, phi) with the diametrically opposite point (b, phi + pi).

    `sampler` maps a Cartesian point to a field vector.  With `transverse`,
    only the components normal to the z axis are compared.  An identically
    zero field is reported as even and flagged degenerate.
    """
    if phis is None:
        phis = np.linspace(0.0, 2 * math.pi, 16, endpoint=False)
    even = odd = True
    scale = 0.0
    for ph in phis:
        p1 = np.array([b * math.cos(ph), b * math.sin(ph), z])
        p2 = np.array([-p1[0], -p1[1], z])
        f1 = np.asarray(sampler(p1))
        f2 = np.asarray(sampler(p2))
        if transverse:
            f1, f2 = f1[:2], f2[:2]
        scale = max(scale, np.abs(f1).max(), np.abs(f2).max())
        bound = tol * max(np.abs(f1).max(), np.abs(f2).max())
        even &= bool(np.abs(f1 - f2).max() <= bound)
        odd &= bool(np.abs(f1 + f2).max() <= bound)
    if scale == 0.0:
        return ParityResult(Parity.EVEN, degenerate=True)
    if even:
        return ParityResult(Parity.EVEN)
    if odd:
        return ParityResult(Parity.ODD)
    return ParityResult(Parity.NEITHER)


def nuclear_static_field_sampler(E_N: float) -> Callable[[np.ndarray], np.ndarray]:
    """Static radial field E_N r^ about a nucleus at the origin."""
    def sample(xyz):
        xyz = np.asarray(xyz, dtype=float)
        return E_N * xyz / np.linalg.norm(xyz)
    return sample


@dataclass(frozen=True)
class InductionResult:
    passed: bool
    max_theta0: float


def induction_condition(E0: float, E_N: float, theta0: float, phase: float,
                        margin: float = 1.0) -> InductionResult:
    """|E0 cos(phase)| >= margin E_N sin(theta0), plus the largest passing theta0."""
    if margin < 1:
        raise ValueError("margin must be >= 1")
    drive = abs(E0 * math.cos(phase))
    # cos(pi/2) is ~6e-17 in floating point; treat such residues as zero
    if drive <= 1e-15 * abs(E0):
        drive = 0.0
    passed = drive > 0 and drive >= margin * E_N * math.sin(theta0)
    if E_N == 0:
        max_theta0 = math.pi / 2 if drive > 0 else 0.0
    else:
        max_theta0 = math.asin(min(1.0, drive / (margin * E_N)))
    return InductionResult(passed, max_theta0)


def waveguide_polarization(handedness: int) -> Polarization:
    """Guide polarization whose interior E matches the onset field of this branch."""
    return Polarization.RIGHT if _sign(handedness) == 1 else Polarization.LEFT


def guided_onset_fields(E0: float, rho: float, phi: float, z: float, t: float,
                        omega: float, k: float | None = None,
                        handedness: int = 1) -> PhasorField:
    """E = E0 (rho^ -/+ i phi^) e^{i(w t - k z -/+ phi)}, c B = i E.

    Components are (rho, phi, z), matching :class:`waveguide.PhasorField`.
    """
    s = _sign(handedness)
    k = omega / C if k is None else k
    E = E0 * np.array([1.0, -s * 1j, 0.0]) * np.exp(1j * _psi(omega, k, z, phi, t, s))
    return PhasorField(E, 1j * E / C)


def onset_surface_current(E0: float, z: float, phi: float, t: float, omega: float,
                          k: float | None = None, handedness: int = 1) -> float:
    """z component of eta I = E0 cos(w t - k z -/+ phi)."""
    s = _sign(handedness)
    k = omega / C if k is None else k
    return E0 * math.cos(_psi(omega, k, z, phi, t, s))


def radiation_q(ka: float) -> float:
    """Lower bound of radiation Q for a dipole field, 1/(ka)^3."""
    if not ka > 0:
        raise ValueError("ka must be positive")
    return 1.0 / ka ** 3


# --- oscillating charged shells --------------------------------------------------

@dataclass(frozen=True)
class ShellFields:
    """Field phasors in spherical components (r, theta, phi)."""

    E_ex: np.ndarray
    B_ex: np.ndarray
    E_in: np.ndarray
    B_in: np.ndarray


def shell_fields(q: float, a: float, delta: float, r: float, theta: float,
                 t: float = 0.0, omega: float = 0.0, k: float | None = None) -> ShellFields:
    """The four field expressions of a hollow charged shell oscillating by `delta`.

    ::

        E_ex = p/(4 pi eps0 r^3) [2 r^ cos + th^ sin] e^{i(wt - kr)}
        B_ex = i eta p k/(4 pi r^2) ph^ sin e^{i(wt - kr)}
        E_in = p/(4 pi eps0 a^3) [r^ cos - th^ sin] e^{i w t}
        B_in = i eta p k r/(8 pi a^3) ph^ sin e^{i(wt - kr)}

    with p = q delta.  All four are returned regardless of whether r is
    inside or outside the shell.
    """
    if not r > 0:
        raise ValueError("r must be positive")
    k = omega / C if k is None else k
    p = q * delta
    st, ct = math.sin(theta), math.cos(theta)
    travel = np.exp(1j * (omega * t - k * r))
    still = np.exp(1j * omega * t)
    E_ex = _prefactor(p, r) * travel * np.array([2 * ct, st, 0.0])
    B_ex = 1j * ETA * p * k / (4 * math.pi * r ** 2) * travel * np.array([0.0, 0.0, st])
    E_in = _prefactor(p, a) * still * np.array([ct, -st, 0.0])
    B_in = 1j * ETA * p * k * r / (8 * math.pi * a ** 3) * travel * np.array([0.0, 0.0, st])
    return ShellFields(E_ex, B_ex, E_in, B_in)


@dataclass(frozen=True)
class TwoShellSummary:
    amplitude_outer_inner_ex: float   # |p|/(4 pi eps0 a_outer^3), inner shell exterior at a_outer
    amplitude_outer_outer_in: float   # outer shell interior at a_outer (signed)
    amplitude_residual: float          # relative, should vanish
    vector_residual: float             # relative, pointwise sum of the two field vectors
    inner_ex_at_inner: float          # inner shell exterior amplitude at a_inner
    outer_in_at_inner: float          # outer shell interior amplitude at a_inner
    ratio_at_inner: float


def two_shell_cancellation(Z: int, delta: float, a_inner: float = 50e-15,
                           a_outer: float = 50e-12, theta: float = 0.7) -> TwoShellSummary:
    """Positive inner shell and negative outer shell, each carrying Z e.

    At the outer radius the amplitude of the inner shell's exterior field and
    of the outer shell's interior field cancel exactly.  Their vector sum does
    not: the interior field is uniform (along z) while the exterior is a dipole
    pattern, so ``vector_residual`` is reported separately.
    """
    from .constants import E_CHARGE
    if not delta > 0:
        raise ValueError("delta must be positive")
    q = Z * E_CHARGE
    inner = shell_fields(q, a_inner, delta, a_outer, theta)
    outer = shell_fields(-q, a_outer, delta, a_outer, theta)
    amp_ex = _prefactor(q * delta, a_outer)
    amp_in = _prefactor(-q * delta, a_outer)
    amp_res = abs(amp_ex + amp_in) / abs(amp_ex)
    vec_res = float(np.abs(inner.E_ex + outer.E_in).max() / np.abs(inner.E_ex).max())
    at_inner_ex = _prefactor(q * delta, a_inner)
    at_inner_in = abs(_prefactor(-q * delta, a_outer))
    return TwoShellSummary(amp_ex, amp_in, amp_res, vec_res, at_inner_ex,
                           at_inner_in, at_inner_ex / at_inner_in)
