"""
Bicomplex numbers with two commuting imaginary units.

``i`` carries the space-time oscillation and ``j`` the azimuthal structure of
the guided photon fields.  A value a + b i + c j + d ij is held as the pair
(z1, z2) = (a + b i, c + d i), meaning z1 + z2 j, with Python's ``1j``
playing the role of ``i``.  The coefficients may be numpy arrays, which is how
field vectors are represented.

Projections map to ordinary complex values:

- ``Projection.PLUS_I`` / ``MINUS_I`` substitute j = +i / -i (circular
  polarization),
- ``Projection.REAL_J`` keeps the part free of j (linear polarization).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class Projection(enum.Enum):
    REAL_J = 0
    PLUS_I = 1
    MINUS_I = -1


@dataclass(frozen=True)
class Bicomplex:
    z1: complex | np.ndarray
    z2: complex | np.ndarray = 0.0

    @classmethod
    def from_coefficients(cls, a, b, c, d) -> "Bicomplex":
        return cls(a + 1j * b, c + 1j * d)

    @property
    def coefficients(self):
        """Real coefficients of (1, i, j, ij)."""
        z1, z2 = np.asarray(self.z1), np.asarray(self.z2)
        return z1.real, z1.imag, z2.real, z2.imag

    @staticmethod
    def _lift(other) -> "Bicomplex":
        return other if isinstance(other, Bicomplex) else Bicomplex(other, 0.0)

    def __add__(self, other):
        o = self._lift(other)
        return Bicomplex(self.z1 + o.z1, self.z2 + o.z2)

    __radd__ = __add__

    def __neg__(self):
        return Bicomplex(-self.z1, -self.z2)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        # j^2 = -1, and j commutes with i
        return Bicomplex(self.z1 * o.z1 - self.z2 * o.z2,
                         self.z1 * o.z2 + self.z2 * o.z1)

    __rmul__ = __mul__

    def project(self, mode: Projection):
        if mode is Projection.REAL_J:
            return self.z1
        if mode is Projection.PLUS_I:
            return self.z1 + 1j * self.z2
        if mode is Projection.MINUS_I:
            return self.z1 - 1j * self.z2
        raise ValueError(mode)


J = Bicomplex(0.0, 1.0)
I = Bicomplex(1j, 0.0)
IJ = I * J


def exp_j(theta) -> Bicomplex:
    """e^{j theta} = cos(theta) + j sin(theta)."""
    return Bicomplex(np.cos(theta) + 0j, np.sin(theta) + 0j)


def exp_i(theta) -> Bicomplex:
    return Bicomplex(np.exp(1j * np.asarray(theta)), 0.0)
