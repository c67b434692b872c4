"""
Physical constants with dimension tags.

Values are the CODATA 2018 recommended values.  The Schwinger threshold
field is stored at the rounded value 1.3e18 V/m used throughout the photon
model tables; :func:`schwinger_threshold` evaluates the exact expression
m^2 c^3 / (e hbar) from the stored constants.

Dimensions are carried as integer exponents of the SI base units
(m, kg, s, A).  Adding or comparing quantities of different dimension raises
:class:`DimensionError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "Dimension", "DimensionError", "Quantity", "PhysicalConstants",
    "CONSTANTS", "schwinger_threshold", "electron_intrinsic",
    "C", "H", "HBAR", "E_CHARGE", "M_E", "EPS0", "MU0", "ETA", "E_S",
]


class DimensionError(TypeError):
    """Arithmetic between quantities of incompatible dimension."""


class Dimension(NamedTuple):
    m: int = 0
    kg: int = 0
    s: int = 0
    A: int = 0

    def __mul__(self, other):
        return Dimension(*(a + b for a, b in zip(self, other)))

    def __truediv__(self, other):
        return Dimension(*(a - b for a, b in zip(self, other)))

    def __pow__(self, n):
        return Dimension(*(a * n for a in self))

    def __str__(self):
        parts = [f"{name}^{exp}" if exp != 1 else name
                 for name, exp in zip(self._fields, self) if exp]
        return " ".join(parts) or "1"


DIMENSIONLESS = Dimension()
LENGTH = Dimension(m=1)
MASS = Dimension(kg=1)
TIME = Dimension(s=1)
CURRENT = Dimension(A=1)
FREQUENCY = TIME ** -1
SPEED = LENGTH / TIME
CHARGE = CURRENT * TIME
ENERGY = MASS * LENGTH ** 2 / TIME ** 2
ACTION = ENERGY * TIME
POWER = ENERGY / TIME
FORCE = MASS * LENGTH / TIME ** 2
PRESSURE = FORCE / LENGTH ** 2
MOMENTUM = MASS * SPEED
VOLTAGE = POWER / CURRENT
ELECTRIC_FIELD = VOLTAGE / LENGTH
MAGNETIC_FIELD = VOLTAGE * TIME / LENGTH ** 2
PERMITTIVITY = CHARGE / (VOLTAGE * LENGTH)
PERMEABILITY = VOLTAGE * TIME / (CURRENT * LENGTH)
IMPEDANCE = VOLTAGE / CURRENT
CHARGE_DENSITY = CHARGE / LENGTH ** 3
SURFACE_CHARGE_DENSITY = CHARGE / LENGTH ** 2


@dataclass(frozen=True)
class Quantity:
    """A real value tagged with its SI dimension."""

    value: float
    dim: Dimension = DIMENSIONLESS

    def _coerce(self, other) -> "Quantity":
        if isinstance(other, Quantity):
            return other
        return Quantity(float(other), DIMENSIONLESS)

    def _same(self, other, op):
        other = self._coerce(other)
        if other.dim != self.dim:
            raise DimensionError(f"cannot {op} [{self.dim}] and [{other.dim}]")
        return other

    def __add__(self, other):
        other = self._same(other, "add")
        return Quantity(self.value + other.value, self.dim)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._same(other, "subtract")
        return Quantity(self.value - other.value, self.dim)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Quantity(-self.value, self.dim)

    def __mul__(self, other):
        other = self._coerce(other)
        return Quantity(self.value * other.value, self.dim * other.dim)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return Quantity(self.value / other.value, self.dim / other.dim)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        return Quantity(self.value ** n, self.dim ** n)

    def sqrt(self) -> "Quantity":
        if any(e % 2 for e in self.dim):
            raise DimensionError(f"sqrt of [{self.dim}] has no integer dimension")
        return Quantity(math.sqrt(self.value), Dimension(*(e // 2 for e in self.dim)))

    def __lt__(self, other):
        return self.value < self._same(other, "compare").value

    def __le__(self, other):
        return self.value <= self._same(other, "compare").value

    def __float__(self):
        return float(self.value)

    def to(self, dim: Dimension) -> float:
        """Return the bare value, checking it has dimension `dim`."""
        if dim != self.dim:
            raise DimensionError(f"expected [{dim}], have [{self.dim}]")
        return self.value


@dataclass(frozen=True)
class PhysicalConstants:
    c: Quantity
    h: Quantity
    hbar: Quantity
    e: Quantity
    m_e: Quantity
    eps0: Quantity
    mu0: Quantity
    eta: Quantity
    E_S: Quantity


def _codata2018() -> PhysicalConstants:
    c = Quantity(299792458.0, SPEED)
    h = Quantity(6.62607015e-34, ACTION)
    mu0 = Quantity(1.25663706212e-6, PERMEABILITY)
    eps0 = Quantity(8.8541878128e-12, PERMITTIVITY)
    return PhysicalConstants(
        c=c,
        h=h,
        hbar=h / (2 * math.pi),
        e=Quantity(1.602176634e-19, CHARGE),
        m_e=Quantity(9.1093837015e-31, MASS),
        eps0=eps0,
        mu0=mu0,
        eta=(mu0 / eps0).sqrt(),
        # rounded threshold of the photon model tables
        E_S=Quantity(1.3e18, ELECTRIC_FIELD),
    )


CONSTANTS = _codata2018()

C = CONSTANTS.c.value
H = CONSTANTS.h.value
HBAR = CONSTANTS.hbar.value
E_CHARGE = CONSTANTS.e.value
M_E = CONSTANTS.m_e.value
EPS0 = CONSTANTS.eps0.value
MU0 = CONSTANTS.mu0.value
ETA = CONSTANTS.eta.value
E_S = CONSTANTS.E_S.value


def schwinger_threshold(k: PhysicalConstants = CONSTANTS) -> Quantity:
    """Critical field m^2 c^3 / (e hbar), evaluated exactly (about 1.3233e18 V/m)."""
    return k.m_e ** 2 * k.c ** 3 / (k.e * k.hbar)


class ElectronScales(NamedTuple):
    nu0: Quantity
    length: Quantity
    nu0_h: Quantity
    length_h: Quantity


def electron_intrinsic(k: PhysicalConstants = CONSTANTS) -> ElectronScales:
    """Intrinsic electron rate and length.

    ``nu0`` and ``length`` use hbar (m c^2 / hbar ~ 7.8e20 s^-1 and
    hbar / m c ~ 386 fm), which are the magnitudes quoted for the model.
    ``nu0_h`` and ``length_h`` are the h-based Compton values
    (1.24e20 Hz, 2.43 pm).  Both pairs satisfy nu * length = c.
    """
    mc = k.m_e * k.c
    return ElectronScales(
        nu0=mc * k.c / k.hbar,
        length=k.hbar / mc,
        nu0_h=mc * k.c / k.h,
        length_h=k.h / mc,
    )
