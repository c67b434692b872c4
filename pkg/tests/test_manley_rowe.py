import math

import pytest
from hypothesis import given, settings, strategies as st

from photon_audit.constants import HBAR, H
from photon_audit.manley_rowe import (
    OscillatorChannel, check_manley_rowe, emitted_frequency, energy_frequency_ratio,
)


def triple(P1, w1, w2):
    w = w1 - w2
    return (OscillatorChannel(P1, w1), OscillatorChannel(-P1 * w2 / w1, w2),
            OscillatorChannel(P1 * w / w1, w))


def test_emitted_frequency():
    assert emitted_frequency(3.0, 1.0) == 2.0
    assert emitted_frequency(4.0, 2.0) == 2.0
    w = emitted_frequency(2 * math.pi * 1.0e15, 2 * math.pi * 0.4e15)
    assert math.isclose(w, 2 * math.pi * 6e14, rel_tol=1e-12)
    with pytest.raises(ValueError):
        emitted_frequency(1.0, 1.0)


def test_channel_validation():
    with pytest.raises(ValueError):
        OscillatorChannel(1.0, 0.0)


def test_constructed_solution_passes():
    res = check_manley_rowe(*triple(2.0, 5.0, 3.0))
    assert res.passed
    assert abs(res.residual_sum) < 1e-15 and abs(res.residual_out) < 1e-15


def test_one_percent_perturbation_fails():
    a, b, c = triple(2.0, 5.0, 3.0)
    bad = OscillatorChannel(b.P * 1.01, b.omega)
    res = check_manley_rowe(a, bad, c)
    assert not res.passed
    assert math.isclose(abs(res.residual_sum), 0.01 * abs(a.action_rate), rel_tol=1e-9)


def test_all_zero_passes():
    z = OscillatorChannel(0.0, 1.0)
    assert check_manley_rowe(z, z, z).passed


def test_energy_frequency_ratio():
    w = 3.0e15
    assert math.isclose(energy_frequency_ratio(HBAR * w, w), HBAR, rel_tol=1e-12)
    nu = 6e14
    assert math.isclose(energy_frequency_ratio(H * nu / 2, 2 * math.pi * nu), HBAR / 2, rel_tol=1e-12)
    assert math.isclose(energy_frequency_ratio(7.0, 2.0), energy_frequency_ratio(70.0, 20.0))


@settings(max_examples=60, deadline=None)
@given(st.floats(1e-3, 1e3), st.floats(1.0, 10.0), st.floats(0.05, 0.95), st.floats(1e-6, 1e6))
def test_rescaling_invariant(P1, w1, frac, k):
    chans = triple(P1, w1, w1 * frac)
    scaled = [OscillatorChannel(c.P * k, c.omega) for c in chans]
    assert check_manley_rowe(*chans).passed == check_manley_rowe(*scaled).passed


@settings(max_examples=60, deadline=None)
@given(st.floats(1e-3, 1e3), st.floats(1.0, 10.0), st.floats(0.05, 0.95))
def test_power_conservation(P1, w1, frac):
    a, b, c = triple(P1, w1, w1 * frac)
    assert check_manley_rowe(a, b, c).passed
    assert abs(a.P + b.P - c.P) <= 1e-9 * abs(a.P)
