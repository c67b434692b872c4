"""
Guided TEM photon: fields of a thin dielectric tube of radius b.

Interior and exterior fields (cylindrical components rho, phi, z)::

    E_in = E0 (rho^ - j phi^) e^{-j phi} e^{i chi}            c B_in = j E_in
    E_ex = -E0 (b/rho)^2 (rho^ + j phi^) e^{-j phi} e^{i chi}  c B_ex = -j E_ex

with chi = omega t - k z.  Fields are built in bicomplex form and projected
to an ordinary phasor according to the polarization: j = +i (right), j = -i
(left) or the j-free part (linear).

Sign conventions follow the model: interfacial charge is
kappa = eps0 rho^.(E_in - E_ex) and the surface current is eta I = kappa c eta.
Energy integrals use the standard E = -grad(Phi) and Gauss-law charge; the
products Phi kappa* and A.J* are the same under either convention.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .bicomplex import Bicomplex, J, I, Projection, exp_j
from .constants import C, EPS0, ETA, MU0
from .numerics import integrate_finite

__all__ = [
    "Polarization", "GuidedModeParams", "PhasorField", "RegionError",
    "field_interior", "field_exterior", "field_at", "interface_fields",
    "interface_charge_current", "interface_jump_sources", "potential",
    "energy_momentum", "poynting_exterior", "poynting_from_fields",
    "angular_momentum", "closure_integrals", "surface_pressure",
    "flux_line_geometry", "magnetic_line_geometry", "to_cartesian",
]


class Polarization(enum.Enum):
    LINEAR = "linear"
    RIGHT = "right"   # j = +i
    LEFT = "left"     # j = -i

    @property
    def projection(self) -> Projection:
        return {Polarization.LINEAR: Projection.REAL_J,
                Polarization.RIGHT: Projection.PLUS_I,
                Polarization.LEFT: Projection.MINUS_I}[self]

    @property
    def circular(self) -> bool:
        return self is not Polarization.LINEAR


class RegionError(ValueError):
    """Field point lies outside the region an evaluator covers."""


@dataclass(frozen=True)
class GuidedModeParams:
    E0: float
    b: float
    omega: float
    polarization: Polarization = Polarization.RIGHT
    l: float = 1.0
    k: float | None = None

    def __post_init__(self):
        for name in ("E0", "b", "omega", "l"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.k is None:
            object.__setattr__(self, "k", self.omega / C)

    def chi(self, z, t):
        return self.omega * t - self.k * z

    @property
    def energy(self) -> float:
        return math.pi * EPS0 * self.E0 ** 2 * self.b ** 2 * self.l


@dataclass(frozen=True)
class PhasorField:
    """Complex field sample; components are (rho, phi, z)."""

    E: np.ndarray
    B: np.ndarray

    @property
    def E_mag(self) -> float:
        return float(np.sqrt(np.vdot(self.E, self.E).real))

    @property
    def B_mag(self) -> float:
        return float(np.sqrt(np.vdot(self.B, self.B).real))


_RHO = np.array([1.0, 0.0, 0.0])
_PHI = np.array([0.0, 1.0, 0.0])
_Z = np.array([0.0, 0.0, 1.0])


def to_cartesian(v, phi):
    """Rotate a (rho, phi, z) component vector to (x, y, z)."""
    c, s = math.cos(phi), math.sin(phi)
    v = np.asarray(v)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]])


def _phase(p: GuidedModeParams, z, t):
    return np.exp(1j * p.chi(z, t))


def _interior_bc(p, phi, z, t):
    amp = p.E0 * _phase(p, z, t)
    E = Bicomplex(amp * _RHO, -amp * _PHI) * exp_j(-phi)
    return E, J * E


def _exterior_bc(p, rho, phi, z, t):
    amp = -p.E0 * (p.b / rho) ** 2 * _phase(p, z, t)
    E = Bicomplex(amp * _RHO, amp * _PHI) * exp_j(-phi)
    return E, -(J * E)


def _project(p, E, cB):
    mode = p.polarization.projection
    return PhasorField(np.asarray(E.project(mode), dtype=complex),
                       np.asarray(cB.project(mode), dtype=complex) / C)


def field_interior(p: GuidedModeParams, point, t: float = 0.0) -> PhasorField:
    rho, phi, z = point
    if not 0 <= rho < p.b:
        raise RegionError(f"rho={rho!r} is not inside the guide (b={p.b!r}); "
                          "use field_exterior")
    return _project(p, *_interior_bc(p, phi, z, t))


def field_exterior(p: GuidedModeParams, point, t: float = 0.0) -> PhasorField:
    rho, phi, z = point
    if not rho > p.b:
        raise RegionError(f"rho={rho!r} is not outside the guide (b={p.b!r}); "
                          "use field_interior")
    return _project(p, *_exterior_bc(p, rho, phi, z, t))


def field_at(p: GuidedModeParams, point, t: float = 0.0) -> PhasorField:
    return field_interior(p, point, t) if point[0] < p.b else field_exterior(p, point, t)


def interface_fields(p: GuidedModeParams, phi, z=0.0, t=0.0, printed=True) -> PhasorField:
    """Fields within the interface rho = b.

    ``printed=True`` evaluates E_b = -j E0 phi^ ..., c B_b = j E0 rho^ ...;
    otherwise the mean of the interior and exterior one-sided limits.
    """
    if printed:
        amp = p.E0 * _phase(p, z, t)
        E = -(J * Bicomplex(amp * _PHI)) * exp_j(-phi)
        cB = J * Bicomplex(amp * _RHO) * exp_j(-phi)
        return _project(p, E, cB)
    Ei, cBi = _interior_bc(p, phi, z, t)
    Ee, cBe = _exterior_bc(p, p.b, phi, z, t)
    return _project(p, (Ei + Ee) * 0.5, (cBi + cBe) * 0.5)


@dataclass(frozen=True)
class InterfaceSources:
    kappa: complex          # C/m^2
    eta_current: np.ndarray  # V/m, (rho, phi, z) components


def interface_charge_current(p: GuidedModeParams, phi, z=0.0, t=0.0) -> InterfaceSources:
    """kappa = 2 eps0 E0 e^{-j phi} e^{i chi};  eta I = 2 E0 z^ e^{-j phi} e^{i chi}."""
    base = Bicomplex(_phase(p, z, t)) * exp_j(-phi)
    mode = p.polarization.projection
    kappa = complex((base * (2 * EPS0 * p.E0)).project(mode))
    current = np.asarray((base * Bicomplex(2 * p.E0 * _Z)).project(mode), dtype=complex)
    return InterfaceSources(kappa, current)


def interface_jump_sources(p: GuidedModeParams, phi, z=0.0, t=0.0) -> InterfaceSources:
    """Sources recovered from the field discontinuity at rho = b.

    Uses the model's orientation: kappa = eps0 (E_in - E_ex).rho^ and
    eta I = rho^ x (c B_in - c B_ex).
    """
    Ei, cBi = _interior_bc(p, phi, z, t)
    Ee, cBe = _exterior_bc(p, p.b, phi, z, t)
    mode = p.polarization.projection
    dE = np.asarray((Ei - Ee).project(mode))
    dcB = np.asarray((cBi - cBe).project(mode))
    return InterfaceSources(complex(EPS0 * dE[0]), np.cross(_RHO, dcB).astype(complex))


def potential(p: GuidedModeParams, rho, phi, z=0.0, t=0.0) -> complex:
    """Scalar potential with E = -grad(Phi); continuous at rho = b."""
    if rho <= p.b:
        radial = -p.E0 * rho
    else:
        radial = -p.E0 * p.b ** 2 / rho
    val = Bicomplex(radial * _phase(p, z, t)) * exp_j(-phi)
    return complex(val.project(p.polarization.projection))


@dataclass(frozen=True)
class EnergyMomentum:
    W: float
    Mz: float
    N_in: float  # W/m^2, along z


def _require_circular(p, what):
    if not p.polarization.circular:
        raise ValueError(f"{what} is defined for circular polarization only")


def energy_momentum(p: GuidedModeParams) -> EnergyMomentum:
    _require_circular(p, "energy_momentum")
    W = p.energy
    return EnergyMomentum(W=W, Mz=W / C, N_in=p.E0 ** 2 / ETA)


def poynting_exterior(p: GuidedModeParams, rho: float) -> float:
    """Exterior Poynting magnitude E0^2 b^4 / (eta rho^4)."""
    return p.E0 ** 2 * p.b ** 4 / (ETA * rho ** 4)


def poynting_from_fields(f: PhasorField) -> np.ndarray:
    """Time-averaged Poynting vector Re(E x B*) / (2 mu0)."""
    return np.real(np.cross(f.E, np.conj(f.B))) / (2 * MU0)


@dataclass(frozen=True)
class AngularMomentum:
    L_bicomplex: Bicomplex
    L: float
    W_over_L: float


def angular_momentum(p: GuidedModeParams) -> AngularMomentum:
    """L = -ij (W / omega) z^, projected per the polarization.

    The linear (j-free) projection gives L = 0 and W/L = inf.
    """
    W = p.energy
    Lbc = -(I * J) * (W / p.omega)
    L = float(np.real(Lbc.project(p.polarization.projection)))
    ratio = math.inf if L == 0 else W / L
    return AngularMomentum(Lbc, L, ratio)


@dataclass(frozen=True)
class ClosureIntegrals:
    W: float
    electric_interior: float
    electric_exterior: float
    magnetic_interior: float
    magnetic_exterior: float
    charge_potential: float
    current_potential: float
    evaluations: int = 0

    @property
    def electric(self) -> float:
        return self.electric_interior + self.electric_exterior

    @property
    def magnetic(self) -> float:
        return self.magnetic_interior + self.magnetic_exterior

    def values(self) -> dict[str, float]:
        return {"field_electric": self.electric, "field_magnetic": self.magnetic,
                "source_charge": self.charge_potential,
                "source_current": self.current_potential}


EXTERIOR_CUTOFF = 1e3  # in units of b; beyond it the rho^-3 tail is added exactly


def closure_integrals(p: GuidedModeParams, tol: float = 1e-12, phi: float = 0.3,
                      z: float = 0.0, t: float = 0.0) -> ClosureIntegrals:
    """The four energy integrals over a length l of guide.

    Field-flux terms: (eps0/4) int E.E* dV and (1/(4 mu0)) int B.B* dV,
    radial quadrature of the sampled fields (azimuth and length enter as
    2 pi l, the integrands being independent of both).  Source-potential
    terms: (1/4) int Phi kappa* dA and (1/4) int A.J* dA over the charge
    layer, by (phi, z) quadrature, with A_z = Phi / c (TEM, Lorenz gauge).
    """
    _require_circular(p, "closure_integrals")
    b, l = p.b, p.l
    evals = 0

    def radial(fn, lo, hi):
        nonlocal evals
        res = integrate_finite(fn, lo, hi, tol, abs_tol=0.0)
        evals += res.evaluations
        return res.value

    def e_density(s):   # s = rho / b
        f = field_at(p, (s * b, phi, z), t)
        return f.E_mag ** 2 * s

    def b_density(s):
        f = field_at(p, (s * b, phi, z), t)
        return (C * f.B_mag) ** 2 * s

    pref = EPS0 / 4 * 2 * math.pi * l * b ** 2
    R = EXTERIOR_CUTOFF

    def exterior(density):
        body = radial(density, 1.0, R)
        # density(s) ~ A / s^3 beyond R:  int_R^inf A s^-3 ds = density(R) R / 2
        return body + density(R) * R / 2

    e_in = pref * radial(e_density, 0.0, 1.0)
    e_ex = pref * exterior(e_density)
    m_in = pref * radial(b_density, 0.0, 1.0)
    m_ex = pref * exterior(b_density)

    def surface(fn):
        # (1/4) int_0^l int_0^2pi fn(phi, z) b dphi dz ; z in units of l
        nonlocal evals
        def over_phi(u):
            nonlocal evals
            res = integrate_finite(lambda ph: fn(ph, u * l), 0.0, 2 * math.pi, tol, abs_tol=0.0)
            evals += res.evaluations
            return res.value
        res = integrate_finite(over_phi, 0.0, 1.0, tol, abs_tol=0.0)
        return 0.25 * b * l * res.value

    def gauss_kappa(ph, zz):
        # Gauss's law across the wall: eps0 (E_ex - E_in).rho^ at rho = b
        Ei = _project(p, *_interior_bc(p, ph, zz, t)).E
        Ee = _project(p, *_exterior_bc(p, b, ph, zz, t)).E
        return EPS0 * (Ee[0] - Ei[0])

    def charge_term(ph, zz):
        kappa = gauss_kappa(ph, zz)
        return float(np.real(potential(p, b, ph, zz, t) * np.conj(kappa)))

    def current_term(ph, zz):
        # K = n x (B_ex - B_in) / mu0 at rho = b
        Bi = _project(p, *_interior_bc(p, ph, zz, t)).B
        Be = _project(p, *_exterior_bc(p, b, ph, zz, t)).B
        K = np.cross(_RHO, Be - Bi) / MU0
        A_z = potential(p, b, ph, zz, t) / C
        return float(np.real(A_z * np.conj(K[2])))

    q_term = surface(charge_term)
    j_term = surface(current_term)

    return ClosureIntegrals(W=p.energy, electric_interior=e_in, electric_exterior=e_ex,
                            magnetic_interior=m_in, magnetic_exterior=m_ex,
                            charge_potential=q_term, current_potential=j_term,
                            evaluations=evals)


def surface_pressure(p: GuidedModeParams, phi: float = 0.0, t: float = 0.0,
                     z: float = 0.0, b_scale: float = 1.0, printed: bool = False) -> float:
    """Interfacial pressure (eps0 |E|^2 - |B|^2 / mu0) / 4, repulsive positive.

    `b_scale` multiplies the magnetic field, for probing the sign convention.
    """
    _require_circular(p, "surface_pressure")
    f = interface_fields(p, phi, z, t, printed=printed)
    E2 = np.vdot(f.E, f.E).real
    B2 = np.vdot(f.B, f.B).real * b_scale ** 2
    return (EPS0 * E2 - B2 / MU0) / 4


# --- flux-line geometry (units of b) -------------------------------------------

@dataclass(frozen=True)
class Arc:
    center: tuple[float, float]
    radius: float
    start: tuple[float, float]
    end: tuple[float, float]
    theta_start: float   # angle of `start` about `center`
    sweep: float         # signed angle swept from start to end

    def points(self, n: int = 64) -> list[tuple[float, float]]:
        cx, cy = self.center
        return [(cx + self.radius * math.cos(self.theta_start + self.sweep * i / (n - 1)),
                 cy + self.radius * math.sin(self.theta_start + self.sweep * i / (n - 1)))
                for i in range(n)]


@dataclass(frozen=True)
class FluxLine:
    phi0: float
    interior: tuple[tuple[float, float], tuple[float, float]]
    arc: Arc | None
    junction: tuple[float, float]
    junction_angle_from_normal: float

    def polyline(self, n: int = 64) -> list[tuple[float, float]]:
        pts = [self.interior[0], self.interior[1]]
        if self.arc is not None:
            pts += self.arc.points(n)[1:]
        return pts


def flux_line_geometry(phi0: float) -> FluxLine:
    """Electric flux line of the linearly polarized field meeting the wall at phi0.

    Inside, the line is the straight chord y = sin(phi0).  Outside, it is the
    circle through the axis centred at (0, csc(phi0)/2), traversed from the
    junction (cos phi0, sin phi0) around the outside of the guide to the
    mirror junction.  phi0 = 0 degenerates to the x axis (``arc`` is None).
    """
    if not -math.pi / 2 < phi0 < math.pi / 2:
        raise ValueError(f"phi0 must lie in (-pi/2, pi/2), got {phi0!r}")
    s, c = math.sin(phi0), math.cos(phi0)
    P, Q = (c, s), (-c, s)
    if phi0 == 0.0:
        return FluxLine(phi0, (Q, P), None, P, 0.0)
    yc = 1.0 / (2.0 * s)
    r = abs(yc)
    th_p = math.atan2(s - yc, c)
    th_q = math.atan2(s - yc, -c)
    # sweep from P to Q through the far point (0, 2 yc), which lies outside the guide
    th_far = math.atan2(2 * yc - yc, 0.0)
    ccw = (th_q - th_p) % (2 * math.pi)
    if (th_far - th_p) % (2 * math.pi) < ccw:
        sweep = ccw
    else:
        sweep = ccw - 2 * math.pi
    arc = Arc((0.0, yc), r, P, Q, th_p, sweep)
    # tangent at P versus the wall normal (cos phi0, sin phi0)
    tangent = (-(s - yc), c)
    cosang = abs(tangent[0] * c + tangent[1] * s) / math.hypot(*tangent)
    angle = math.acos(min(1.0, cosang))
    return FluxLine(phi0, (Q, P), arc, P, angle)


def _rot90(pt):
    return (-pt[1], pt[0])


def magnetic_line_geometry(psi0: float) -> FluxLine:
    """Magnetic flux line: the electric geometry rotated by +90 degrees (c B = j E)."""
    e = flux_line_geometry(psi0)
    arc = None
    if e.arc is not None:
        a = e.arc
        arc = Arc(_rot90(a.center), a.radius, _rot90(a.start), _rot90(a.end),
                  a.theta_start + math.pi / 2, a.sweep)
    return FluxLine(psi0, (_rot90(e.interior[0]), _rot90(e.interior[1])), arc,
                    _rot90(e.junction), e.junction_angle_from_normal)
