import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from photon_audit import dipole as dp
from photon_audit import nuclear
from photon_audit import waveguide as wg
from photon_audit.constants import C, EPS0, E_S

W = 2 * math.pi * 6e14


def params(**kw):
    base = dict(p=1e-29, omega=W, handedness=1)
    base.update(kw)
    return dp.DipoleParams(**base)


def test_mixed_point_consistency():
    pt = dp.MixedPoint.from_cylindrical(0.3, 1.1, -0.4)
    assert math.isclose(pt.rho, 0.3, rel_tol=1e-12)
    assert math.isclose(pt.z, -0.4, rel_tol=1e-12)
    assert np.allclose(pt.xyz / pt.r, pt.r_hat, atol=1e-12)


def test_params_validation():
    with pytest.raises(ValueError):
        params(p=0)
    with pytest.raises(ValueError):
        params(E_N=-1)
    with pytest.raises(ValueError):
        params(handedness=0)


@pytest.mark.parametrize("h", [1, -1])
def test_linear_region_on_axis(h):
    pr = params(handedness=h)
    pt = dp.MixedPoint(1e-10, 0.0, 0.7)
    E = dp.dipole_field_linear_region(pr, pt, 0.0)
    assert abs(np.dot(E, pt.r_hat)) < 1e-12 * np.abs(E).max()
    pre = pr.p / (4 * math.pi * EPS0 * pt.r ** 3)
    assert math.isclose(np.linalg.norm(E[:2]), pre * math.sqrt(2), rel_tol=1e-12)


def test_linear_region_r_cubed():
    pr = params(omega=1.0)
    a = dp.dipole_field_linear_region(pr, dp.MixedPoint(1e-10, 0.6, 0.2))
    b = dp.dipole_field_linear_region(pr, dp.MixedPoint(2e-10, 0.6, 0.2))
    assert math.isclose(np.linalg.norm(a), 8 * np.linalg.norm(b), rel_tol=1e-9)


def test_linear_region_vs_textbook_on_axis():
    pr = params()
    pt = dp.MixedPoint(1e-10, 0.0, 0.0)
    diff = dp.dipole_field_linear_region(pr, pt) - dp.dipole_field_textbook(pr, pt)
    assert np.linalg.norm(diff) > 0.1 * np.linalg.norm(dp.dipole_field_textbook(pr, pt))


def test_field_rejects_origin():
    for fn in (dp.dipole_field_linear_region, dp.dipole_field_textbook,
               dp.dipole_field_rotating, dp.total_field_mixed):
        with pytest.raises(ValueError):
            fn(params(), dp.MixedPoint(0.0, 0.3, 0.1))


@settings(max_examples=50)
@given(st.floats(-10, 10), st.floats(0, 1e-14), st.sampled_from([1, -1]))
def test_rotating_moment_forms_agree(phi, t, h):
    cart, cyl = dp.rotating_dipole_moment(2.0, W, t, phi, h)
    assert np.allclose(cart, cyl, atol=1e-12)
    assert math.isclose(np.linalg.norm(cart), 2 * math.sqrt(2), rel_tol=1e-12)


def test_rotating_moment_periodic():
    a, _ = dp.rotating_dipole_moment(1.0, 3.0, 0.2, 0.0)
    b, _ = dp.rotating_dipole_moment(1.0, 3.0, 0.2 + 2 * math.pi / 3.0, 0.0)
    assert np.allclose(a, b, atol=1e-12)


@pytest.mark.parametrize("h", [1, -1])
def test_total_field_reduces_near_axis(h):
    pr = params(handedness=h, omega=1.0, k=0.0)
    r, phi, t = 1e-10, 0.8, 0.3
    E = dp.total_field_mixed(pr, dp.MixedPoint(r, 0.0, phi), t).real
    E0 = dp.moment_to_E0(pr.p, r)
    rho_hat = np.array([math.cos(phi), math.sin(phi), 0.0])
    phi_hat = np.array([-math.sin(phi), math.cos(phi), 0.0])
    psi = t - h * phi
    # real part of -(rho^ -/+ i phi^) e^{i psi}; the lower branch rotates the other way
    ref = E0 * (rho_hat * math.cos(psi) + h * phi_hat * math.sin(psi))
    if h == 1:
        assert np.allclose(ref, dp.near_axis_field(E0, 0.0, phi, r, t, 1.0, 0.0, h))
    assert np.allclose(E, ref, atol=1e-12 * abs(E0))


def test_total_field_static_part_at_schwinger_radius():
    R_S = nuclear.schwinger_radius(26)
    E_N = nuclear.coulomb_field(26, R_S * (1 + 1e-12))
    assert math.isclose(E_N, E_S, rel_tol=1e-9)
    pr = params(E_N=E_N, omega=1.0, k=0.0)
    pt = dp.MixedPoint(R_S, 0.5, 0.0)
    osc = dp.total_field_mixed(params(omega=1.0, k=0.0), pt)
    assert np.allclose(dp.total_field_mixed(pr, pt) - osc, E_N * pt.r_hat, rtol=1e-12)


def test_total_field_linear_in_p():
    pt = dp.MixedPoint(1e-10, 0.5, 0.3)
    a = dp.total_field_mixed(params(p=1e-29, E_N=5.0), pt)
    b = dp.total_field_mixed(params(p=2e-29, E_N=5.0), pt)
    static = 5.0 * pt.r_hat
    assert np.allclose(b - static, 2 * (a - static), rtol=1e-12)


@settings(max_examples=50)
@given(st.floats(0, 2 * math.pi), st.floats(-1e-6, 1e-6), st.floats(0, 2e-15), st.sampled_from([1, -1]))
def test_near_axis_modulus(phi, z, t, h):
    E = dp.near_axis_field(3.0, 1e-15, phi, z, t, W, handedness=h)
    assert math.isclose(np.linalg.norm(E), 3.0, rel_tol=1e-12)


def test_near_axis_matches_onset_real_part():
    for phi in (0.0, 0.5, 2.0):
        E = dp.near_axis_field(2.0, 1e-15, phi, 1e-8, 1e-16, W, handedness=1)
        f = dp.guided_onset_fields(2.0, 1e-15, phi, 1e-8, 1e-16, W, handedness=1)
        assert np.allclose(E, wg.to_cartesian(f.E, phi).real, atol=1e-12)


def test_near_axis_phi_period():
    a = dp.near_axis_field(1.0, 0.1, 0.3, 0.0, 1e-16, W)
    b = dp.near_axis_field(1.0, 0.1, 0.3 + 2 * math.pi, 0.0, 1e-16, W)
    assert np.allclose(a, b, atol=1e-12)


def test_induced_kappa():
    phis = np.linspace(0, 2 * math.pi, 256, endpoint=False)
    ks = np.array([dp.induced_kappa(2.0, 0.0, ph, 0.0, W) for ph in phis])
    assert math.isclose(np.abs(ks).max(), EPS0 * 2.0, rel_tol=1e-12)
    assert abs(ks.mean()) < 1e-14 * EPS0
    assert dp.threshold_exceeded(E_S / math.sqrt(2), E_S)
    assert not dp.threshold_exceeded(0.5 * E_S, 0.5 * E_S)


@settings(max_examples=25, deadline=None)
@given(st.floats(1e-18, 1e-13), st.floats(0, 1e-15), st.sampled_from([1, -1]))
def test_parity_near_axis_even(b, t, h):
    def sampler(x):
        return dp.near_axis_field(1.0, math.hypot(x[0], x[1]), math.atan2(x[1], x[0]), x[2], t, W,
                                  handedness=h)
    assert dp.parity_check(sampler, b).parity is dp.Parity.EVEN


@given(st.floats(1e-18, 1e-10), st.floats(1.0, 1e18))
def test_parity_static_odd(b, E_N):
    assert dp.parity_check(dp.nuclear_static_field_sampler(E_N), b).parity is dp.Parity.ODD


def test_parity_zero_degenerate():
    res = dp.parity_check(lambda x: np.zeros(3), 1.0)
    assert res.parity is dp.Parity.EVEN and res.degenerate


def test_parity_neither():
    res = dp.parity_check(lambda x: np.array([1.0 + x[0], 0.0, 0.0]), 0.5)
    assert res.parity is dp.Parity.NEITHER


def test_induction_examples():
    assert dp.induction_condition(1e-3, 1e18, 0.0, 0.0).passed
    assert not dp.induction_condition(1e18, 1.0, 0.0, math.pi / 2).passed
    res = dp.induction_condition(0.1, 1.0, 0.0, 0.0, margin=10)
    assert math.isclose(res.max_theta0, math.asin(0.01), rel_tol=1e-12)
    with pytest.raises(ValueError):
        dp.induction_condition(1, 1, 0, 0, margin=0.5)


@given(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3), st.floats(0, 1.5), st.floats(1, 100))
def test_induction_boundary(E0, E_N, phase, margin):
    res = dp.induction_condition(E0, E_N, 0.1, phase, margin)
    drive = abs(E0 * math.cos(phase))
    if drive < margin * E_N:
        assert math.isclose(math.sin(res.max_theta0) * margin * E_N, drive, rel_tol=1e-10)


@settings(max_examples=50)
@given(st.floats(0, 0.99), st.floats(0, 2 * math.pi), st.floats(-1, 1), st.floats(0, 1),
       st.sampled_from([1, -1]))
def test_onset_matches_waveguide(rho, phi, z, t, h):
    f = dp.guided_onset_fields(2.0, rho, phi, z, t, 3.0, 1.5, h)
    p = wg.GuidedModeParams(E0=2.0, b=1.0, omega=3.0, polarization=dp.waveguide_polarization(h), k=1.5)
    g = wg.field_interior(p, (rho, phi, z), t)
    assert np.allclose(f.E, g.E, atol=1e-12)
    assert np.allclose(C * np.abs(f.B), np.abs(f.E), rtol=1e-12)


def test_onset_surface_current():
    I = dp.onset_surface_current(2.0, 0.0, 0.3, 0.0, 1.0, 0.0)
    assert math.isclose(I, 2.0 * math.cos(-0.3), rel_tol=1e-12)


def test_radiation_q():
    assert math.isclose(dp.radiation_q(1e-3), 1e9, rel_tol=1e-12)
    assert dp.radiation_q(1.0) == 1.0
    qs = [dp.radiation_q(x) for x in np.linspace(0.01, 3, 20)]
    assert all(a > b for a, b in zip(qs, qs[1:]))
    with pytest.raises(ValueError):
        dp.radiation_q(0.0)


def test_shell_ratio_at_surface():
    f = dp.shell_fields(1.0, 1e-12, 1e-15, 1e-12, 0.4)
    assert math.isclose(abs(f.E_ex[0] / f.E_in[0]), 2.0, rel_tol=1e-12)


def test_shell_two_radius_ratio():
    a = dp.shell_fields(1.0, 50e-15, 1e-15, 50e-15, 0.4).E_ex
    b = dp.shell_fields(1.0, 50e-15, 1e-15, 50e-12, 0.4).E_ex
    assert math.isclose(np.linalg.norm(a) / np.linalg.norm(b), 1e9, rel_tol=1e-9)


def test_shell_zero_delta():
    f = dp.shell_fields(1.0, 1e-12, 0.0, 2e-12, 0.4, 1.0, 1.0)
    for v in (f.E_ex, f.B_ex, f.E_in, f.B_in):
        assert not np.any(v)


def test_shell_superposition():
    args = (3e-12, 1e-15, 2e-12, 0.9, 0.1, 1e3)
    a = dp.shell_fields(1.0, *args)
    b = dp.shell_fields(-2.5, *args)
    s = dp.shell_fields(-1.5, *args)
    for name in ("E_ex", "B_ex", "E_in", "B_in"):
        assert np.allclose(getattr(a, name) + getattr(b, name), getattr(s, name),
                           rtol=1e-12, atol=0)


def test_two_shell_cancellation():
    s = dp.two_shell_cancellation(26, 1e-16)
    assert s.amplitude_residual < 1e-12
    assert math.isclose(s.ratio_at_inner, 1e9, rel_tol=1e-9)
    # pointwise vector sum does not vanish: uniform interior versus dipole exterior
    assert s.vector_residual > 0.1
    d = dp.two_shell_cancellation(52, 1e-16)
    assert math.isclose(d.amplitude_outer_inner_ex, 2 * s.amplitude_outer_inner_ex, rel_tol=1e-12)
    assert d.amplitude_residual < 1e-12
    with pytest.raises(ValueError):
        dp.two_shell_cancellation(26, 0.0)
