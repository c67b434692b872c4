"""Acceptance criteria, one test per criterion.

Each criterion prints a PASS/FAIL line; the lines are collected again in the
pytest terminal summary.  Run ``python tests/test_acceptance.py`` to get the
lines without pytest.
"""

import math
import time

import numpy as np
import pytest

from photon_audit import cavity, dipole, forces, manley_rowe, nuclear, relativity, report
from photon_audit import waveguide as wg
from photon_audit.constants import C, EPS0

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"ACCEPTANCE {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def criterion_1():
    t0 = time.perf_counter()
    rows = nuclear.table1()
    rs_dev = max(abs(r.derived.R_S / r.printed.R_S - 1) for r in rows)
    ratios = [r.ratio_vs_printed for r in rows]
    s = report.run_audit(checks=["table1"])
    flagged = s.discrepancies.get("table1-field-ratio") is report.Verdict.MISMATCH
    dt = time.perf_counter() - t0
    ok = (len(rows) == 6 and rs_dev <= 0.015 and all(abs(x - 10) <= 0.3 for x in ratios)
          and flagged and dt < 1)
    return ok, (f"R_S max dev {rs_dev:.4f}, ratio vs printed {min(ratios):.2f}..{max(ratios):.2f}, "
                f"flagged={flagged}, {dt:.3f}s")


def criterion_2():
    t0 = time.perf_counter()
    rows = relativity.table2()
    ok = all(not rows[i].mismatched for i in (0, 2, 3))
    row2 = rows[1]
    ok &= row2.mismatched == ("l_over_lambda",)
    ok &= math.isclose(row2.l_over_lambda, 4.2e-5, rel_tol=0.02) and row2.printed.l_over_lambda == 0.42
    dt = time.perf_counter() - t0
    ok &= dt < 1
    return ok, f"rows 1,3,4 consistent; row 2 l/lambda {row2.l_over_lambda:.3g} vs printed 0.42, {dt:.3f}s"


def criterion_3():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = max(report.closure_deviation(report.random_mode(rng)) for _ in range(100))
    dt = time.perf_counter() - t0
    return worst <= 1e-8 and dt < 10, f"max relative deviation {worst:.2e} over 100 sets, {dt:.2f}s"


def criterion_4():
    p = wg.GuidedModeParams(E0=1.84e16, b=10e-18, omega=2 * math.pi * C / 500e-9)
    r = report.stress_residual(p, n=32)
    return r <= 1e-12, f"max |P|/(eps0 E0^2) = {r:.2e} on 32x32 grid"


def criterion_5():
    a = cavity.lowest_eigenradius()
    a500 = cavity.min_cavity_radius(500e-9)
    ok = abs(a / 0.437 - 1) <= 2e-3 and a500 >= 218e-9
    return ok, f"a/lambda = {a:.6f}, a(500 nm) = {a500 * 1e9:.3f} nm"


def criterion_6():
    worst = 0.0
    for d in (0.5, 1.0, 2.0, 10.0):
        u = forces.useful_integrals_check(d)
        worst = max(worst, u.rel_residual_y2_rho8, u.rel_residual_inv_rho4)
    return worst <= 1e-10, f"max relative residual {worst:.2e}"


def criterion_7():
    base = report.BASE_PAIR
    ds = np.geomspace(20e-18, 1e-15, 5)
    alphas = (2.0, 3.0, 4.0, 5.0, 6.0)
    worst = 0.0
    for spin in forces.Spin:
        for r in forces.force_sweep(ds, alphas, base.with_(spin=spin, chi=0.3)):
            worst = max(worst, r.rel_residual)
    anti = [forces.strip_force_quadrature(base.with_(chi=c)) for c in np.linspace(0, 2 * math.pi, 9)]
    chi_spread = float(np.ptp(anti) / abs(anti[0]))
    par = base.with_(spin=forces.Spin.PARALLEL)
    avg = abs(forces.time_average_force(par)) / abs(forces.strip_force_closed(par.with_(chi=0.0)))
    bs = np.geomspace(1e-18, 5e-17, 5)
    sb = forces.loglog_slope(bs, [forces.strip_force_quadrature(base.with_(b=b, d=1e-15)) for b in bs])
    sd = forces.loglog_slope(ds, [forces.strip_force_quadrature(base.with_(d=d)) for d in ds])
    ok = worst <= 1e-6 and chi_spread <= 1e-10 and avg < 1e-10 and abs(sb - 4) <= 1e-4 and abs(sd + 3) <= 1e-4
    return ok, (f"closed vs quadrature {worst:.1e}, chi spread {chi_spread:.1e}, "
                f"time average {avg:.1e}, slopes b {sb:.6f} d {sd:.6f}")


def criterion_8():
    rng = np.random.default_rng(8)
    worst = 0.0
    for _ in range(1000):
        b = 10 ** rng.uniform(-18, -16)
        cfg = report.BASE_PAIR.with_(
            b=b, d=b * rng.uniform(1.05, 20), chi=rng.uniform(-math.pi, math.pi),
            spin=forces.Spin.PARALLEL if rng.random() < 0.5 else forces.Spin.ANTIPARALLEL,
            branch=int(rng.choice([1, -1])))
        y = cfg.d * rng.uniform(-10, 10)
        a, e = forces.summed_strip_fields(cfg, y), forces.strip_fields_bruteforce(cfg, y)
        scale = cfg.E0 * cfg.b ** 2 / (cfg.d ** 2 + y * y)
        worst = max(worst, np.abs(a.E - e.E).max() / scale, np.abs(a.cB - e.cB).max() / scale)
    return worst <= 1e-12, f"max relative difference {worst:.1e} at 1000 strip points"


def criterion_9():
    rng = np.random.default_rng(9)
    w_onset = 0.0
    for _ in range(200):
        h = int(rng.choice([1, -1]))
        rho, phi, z, t = rng.uniform(0, 0.99), rng.uniform(0, 2 * math.pi), rng.uniform(-1, 1), rng.uniform(0, 1)
        f = dipole.guided_onset_fields(2.0, rho, phi, z, t, 3.0, 1.5, h)
        p = wg.GuidedModeParams(2.0, 1.0, 3.0, dipole.waveguide_polarization(h), k=1.5)
        w_onset = max(w_onset, np.abs(f.E - wg.field_interior(p, (rho, phi, z), t).E).max() / 2.0)
    w_exp = 0.0
    for _ in range(1000):
        rho, phi, chi = rng.uniform(1, 50), rng.uniform(-math.pi, math.pi), rng.uniform(-math.pi, math.pi)
        h = int(rng.choice([1, -1]))
        a = forces.external_real_fields(1.0, 1.0, rho, phi, chi, h)
        b = forces.external_real_fields_expanded(1.0, 1.0, rho, phi, chi, h)
        scale = 1.0 / rho ** 2
        w_exp = max(w_exp, np.abs(a.E - b.E).max() / scale, np.abs(a.cB - b.cB).max() / scale)
    ch = cavity.cubic_harmonics()
    ok = (w_onset <= 1e-12 and w_exp <= 1e-12 and ch.cos_corrected.holds and ch.sin_identity.holds
          and not ch.cos_printed.holds)
    return ok, (f"onset vs guided {w_onset:.1e}, compound vs expanded {w_exp:.1e}, "
                f"cube identities {ch.cos_corrected.max_residual:.1e}, printed flagged")


def criterion_10():
    rng = np.random.default_rng(10)
    W = 2 * math.pi * 6e14
    ok = True
    for _ in range(20):
        b = 10 ** rng.uniform(-18, -13)
        t = rng.uniform(0, 2 * math.pi / W)
        h = int(rng.choice([1, -1]))

        def sampler(x, t=t, h=h):
            return dipole.near_axis_field(1.0, math.hypot(x[0], x[1]), math.atan2(x[1], x[0]),
                                          x[2], t, W, handedness=h)
        ok &= dipole.parity_check(sampler, b).parity is dipole.Parity.EVEN
        E_N = 10 ** rng.uniform(0, 18)
        ok &= dipole.parity_check(dipole.nuclear_static_field_sampler(E_N), b).parity is dipole.Parity.ODD
    Ch = manley_rowe.OscillatorChannel
    mr_ok = mr_bad = 0
    for _ in range(20):
        w1, w2 = rng.uniform(2, 5), rng.uniform(0.5, 1.9)
        P1 = rng.uniform(0.1, 10)
        w = w1 - w2
        ch1, ch2, out = Ch(P1, w1), Ch(-P1 * w2 / w1, w2), Ch(P1 * w / w1, w)
        mr_ok += manley_rowe.check_manley_rowe(ch1, ch2, out).passed
        mr_bad += not manley_rowe.check_manley_rowe(ch1, Ch(ch2.P * 1.01, w2), out).passed
    ok &= mr_ok == 20 and mr_bad == 20
    return ok, f"parity even/odd over 20 samples each; Manley-Rowe {mr_ok}/20 pass, {mr_bad}/20 perturbed fail"


def criterion_11():
    from photon_audit import cli
    import contextlib
    import io
    t0 = time.perf_counter()
    with contextlib.redirect_stdout(io.StringIO()):
        code = cli.main(["verify-all"])
    dt = time.perf_counter() - t0
    s = report.run_audit()
    ok = code == 0 and dt < 60 and s.discrepancies == report.EXPECTED_FINDINGS
    return ok, f"exit {code}, {len(s.discrepancies)} expected findings, {dt:.2f}s"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("n", range(1, 12), ids=[f"criterion_{i}" for i in range(1, 12)])
def test_acceptance(n):
    ok, detail = CRITERIA[n - 1]()
    record(n, ok, detail)


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        RESULTS[i] = (ok, detail)
        print(f"ACCEPTANCE {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
