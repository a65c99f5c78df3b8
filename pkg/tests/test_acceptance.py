"""Exit criteria for the package, one test per criterion.

A summary line per criterion is printed at the end of the pytest run.
"""

import math
import subprocess
import sys
import time

import pytest

from photonframe import duality
from photonframe.duality import FrequencyEnergySample, fit_planck_constant, parallel_null_check
from photonframe.fields import energy_density_ratio
from photonframe.kinematics import WaveFourVector, boost_four_vector, doppler_factor, make_boost, minkowski_square
from photonframe.pulse import MonochromaticPulse, QuadraturePlan, simpson_convergence, verify_energy_ratio
from photonframe.report import SweepConfig, run_sweep
from photonframe.wavecheck import SINE, Grid1D, convergence_order, residual_wave_equation

BETAS = (0.0, 0.2, -0.2, 0.6, -0.6, 0.8, -0.8, 0.99, -0.99)
SWEEP = (0.0, 0.2, 0.4, 0.6, 0.8)

pytestmark = pytest.mark.usefixtures("criterion")


@pytest.mark.criterion("1 doppler^2 == W/W' (rel 1e-12, < 1 s)")
def test_doppler_energy_density_consistency():
    start = time.perf_counter()
    for beta in BETAS:
        b = make_boost(beta)
        assert abs(doppler_factor(b) ** 2 / energy_density_ratio(b) - 1.0) <= 1e-12
    assert doppler_factor(make_boost(0.6)) == pytest.approx(2.0, rel=1e-12)
    assert energy_density_ratio(make_boost(0.6)) == pytest.approx(4.0, rel=1e-12)
    assert doppler_factor(make_boost(0.8)) == pytest.approx(3.0, rel=1e-12)
    assert energy_density_ratio(make_boost(0.8)) == pytest.approx(9.0, rel=1e-12)
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion("2 numeric E/E' == nu/nu' (rel 1e-6, simpson 256, n in {1,8,64}, < 30 s)")
def test_energy_ratio_matches_frequency_ratio():
    start = time.perf_counter()
    plan = QuadraturePlan(256, "simpson")
    worst = 0.0
    for n in (1, 8, 64):
        p = MonochromaticPulse(1.0, 1.0, n)
        for beta in BETAS:
            rep = verify_energy_ratio(make_boost(beta), p, plan)
            assert rep.closed_form == pytest.approx(doppler_factor(make_boost(beta)), rel=1e-12)
            worst = max(worst, rep.rel_error)
    assert worst <= 1e-6
    assert time.perf_counter() - start < 30.0


@pytest.mark.criterion("3 simpson order in [3.5, 4.5] over three doublings (< 10 s)")
def test_simpson_convergence_order():
    start = time.perf_counter()
    rep = simpson_convergence(MonochromaticPulse(1.0, 1.0, 8), base_points=8, doublings=3)
    assert time.perf_counter() - start < 10.0
    assert not rep.saturated, f"errors at rounding floor at every level: {rep.errors}"
    assert 3.5 <= rep.order <= 4.5


@pytest.mark.criterion("4 h recovered to rel 1e-6 for h0 = 1 and h0 = 6.62607015e-27 (< 30 s)")
@pytest.mark.parametrize("h0", [1.0, 6.62607015e-27])
def test_planck_constant_recovery(h0):
    start = time.perf_counter()
    rep = run_sweep(SweepConfig(betas=SWEEP, h0=h0))
    assert len(rep.rows) == 5
    fit = fit_planck_constant(FrequencyEnergySample(r.nu, r.photon_energy, r.beta) for r in rep.rows)
    assert abs(fit.h_est / h0 - 1.0) <= 1e-6
    assert fit.max_rel_residual <= 1e-6
    assert rep.summary["h_est"] == fit.h_est
    assert time.perf_counter() - start < 30.0


@pytest.mark.criterion("5 boosted wave vectors null to 1e-12 k0^2; E/nu frame-independent to 1e-6")
def test_light_like_invariance():
    for nu in (0.1, 1.0, 37.0):
        k = WaveFourVector.from_frequency(nu)
        for beta in BETAS:
            kb = boost_four_vector(make_boost(beta), k)
            assert abs(minkowski_square(kb)) <= 1e-12 * kb.t_comp**2
    lab = MonochromaticPulse(1.0e4, 1.0, 8)
    seed = duality.seed_ensemble(lab, QuadraturePlan(), 1.0)
    frames = [duality.transform_ensemble(make_boost(-b), seed, lab, QuadraturePlan()) for b in SWEEP]
    assert parallel_null_check(frames) <= 1e-6
    ratios = [f.total_energy / f.frequency for f in frames]
    assert max(ratios) / min(ratios) - 1.0 <= 1e-6


@pytest.mark.criterion("6 wave residual order 2.0 +- 0.2 for omega = k; omega = 2k stays away from 0 (< 10 s)")
def test_wave_equation_residual():
    start = time.perf_counter()
    grid = Grid1D(0.0, 2 * math.pi, 128, 0.0, math.pi, 128)
    rep = convergence_order(SINE, 1.0, 1.0, grid, 4)
    assert not rep.saturated
    assert abs(rep.order - 2.0) <= 0.2
    control = convergence_order(SINE, 1.0, 2.0, grid, 4)
    assert min(control.errors) > 1.0
    assert residual_wave_equation(SINE, 1.0, 2.0, grid.refined().refined().refined()) > 1.0
    assert time.perf_counter() - start < 10.0


@pytest.mark.criterion("7 two sweep runs with one config are byte-identical")
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_sweep_determinism(tmp_path, fmt):
    outputs = []
    for i in range(2):
        path = tmp_path / f"run{i}.{fmt}"
        subprocess.run(
            [sys.executable, "-m", "photonframe", "sweep", "--format", fmt, "--output", str(path)],
            check=True,
        )
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    assert len(outputs[0]) > 0
