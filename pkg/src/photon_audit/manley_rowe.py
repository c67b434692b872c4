"""Manley-Rowe power/frequency bookkeeping for a three-wave exchange.

Sign convention: emitted power is positive.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class OscillatorChannel:
    P: float      # W, emission positive
    omega: float  # rad/s

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega!r}")

    @property
    def action_rate(self) -> float:
        return self.P / self.omega


@dataclass(frozen=True)
class ManleyRoweCheck:
    passed: bool
    residual_sum: float   # P1/w1 + P2/w2
    residual_out: float   # P1/w1 - P/w
    scale: float


def emitted_frequency(omega1: float, omega2: float) -> float:
    """Difference frequency produced by an exchange between two eigenstates."""
    if not omega2 > 0:
        raise ValueError("omega2 must be positive")
    if not omega1 > omega2:
        raise ValueError(f"need omega1 > omega2, got {omega1!r} <= {omega2!r}")
    return omega1 - omega2


def check_manley_rowe(ch1: OscillatorChannel, ch2: OscillatorChannel,
                      out: OscillatorChannel, tol: float = 1e-9) -> ManleyRoweCheck:
    """Test P1/w1 + P2/w2 = 0 and P1/w1 - P/w = 0.

    Residuals are compared against ``tol`` times the largest |P/w| of the
    three channels, so the verdict does not change under a uniform rescaling
    of all powers.
    """
    a1, a2, a = ch1.action_rate, ch2.action_rate, out.action_rate
    r_sum = a1 + a2
    r_out = a1 - a
    scale = max(abs(a1), abs(a2), abs(a))
    if scale == 0.0:
        return ManleyRoweCheck(True, 0.0, 0.0, 0.0)
    ok = abs(r_sum) <= tol * scale and abs(r_out) <= tol * scale
    return ManleyRoweCheck(ok, r_sum, r_out, scale)


def energy_frequency_ratio(W: float, omega: float) -> float:
    """W / omega in J s."""
    if not omega > 0:
        raise ValueError("omega must be positive")
    return W / omega
