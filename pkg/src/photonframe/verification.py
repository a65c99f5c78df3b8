"""The invariant suite behind ``photonframe verify``.

Every check draws its random inputs from a fixed seed, so a run is
reproducible. Library functions are looked up through their modules at
call time, which lets tests substitute faulty versions and confirm that
the suite notices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import duality, fields, kinematics, pulse, report, wavecheck

DEFAULT_SEED = 20240917
BETA_GRID = (0.0, 0.2, -0.2, 0.6, -0.6, 0.8, -0.8, 0.99, -0.99)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark}  {self.suite:<10} {self.name:<28} {self.detail}"


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b else abs(a)


# -- kinematics ---------------------------------------------------------------

def _kinematics(rng: np.random.Generator) -> list[CheckResult]:
    out = []
    worst_s = worst_trip = 0.0
    for _ in range(500):
        beta = rng.uniform(-0.99, 0.99)
        v = kinematics.FourVector(*rng.uniform(-1e3, 1e3, 4))
        b = kinematics.make_boost(beta)
        w = kinematics.boost_four_vector(b, v)
        scale = float(np.sum(w.as_array() ** 2))
        worst_s = max(
            worst_s,
            abs(kinematics.minkowski_square(w) - kinematics.minkowski_square(v)) / scale,
        )
        back = kinematics.boost_four_vector(kinematics.make_boost(-beta), w)
        worst_trip = max(
            worst_trip,
            float(np.max(np.abs(back.as_array() - v.as_array())) / np.max(np.abs(v.as_array()))),
        )
    out.append(CheckResult("kinematics", "minkowski_invariance", worst_s <= 1e-12, f"max {worst_s:.3g}"))
    out.append(CheckResult("kinematics", "boost_round_trip", worst_trip <= 1e-10, f"max {worst_trip:.3g}"))

    recip = max(
        abs(kinematics.doppler_factor(kinematics.make_boost(b))
            * kinematics.doppler_factor(kinematics.make_boost(-b)) - 1.0)
        for b in BETA_GRID
    )
    out.append(CheckResult("kinematics", "doppler_reciprocity", recip <= 1e-12, f"max {recip:.3g}"))
    blue = all(kinematics.doppler_factor(kinematics.make_boost(b)) > 1.0 for b in BETA_GRID if b > 0)
    out.append(CheckResult("kinematics", "doppler_blue_shift", blue))
    consistent = max(
        _rel(
            kinematics.boost_four_vector(
                kinematics.make_boost(b), kinematics.FourVector(1.0, 1.0)
            ).t_comp,
            kinematics.doppler_factor(kinematics.make_boost(b)),
        )
        for b in BETA_GRID
    )
    out.append(CheckResult("kinematics", "doppler_vs_four_vector", consistent <= 1e-12, f"max {consistent:.3g}"))
    return out


# -- fields -------------------------------------------------------------------

def _fields(rng: np.random.Generator) -> list[CheckResult]:
    out = []
    sq = max(
        _rel(
            fields.energy_density_ratio(kinematics.make_boost(b)),
            kinematics.doppler_factor(kinematics.make_boost(b)) ** 2,
        )
        for b in BETA_GRID
    )
    out.append(CheckResult("fields", "ratio_equals_doppler_sq", sq <= 1e-12, f"max {sq:.3g}"))

    brute = 0.0
    for _ in range(200):
        beta = rng.uniform(-0.99, 0.99)
        f = fields.plane_wave(rng.uniform(1e-6, 1e3))
        boosted = fields.boost_fields(kinematics.make_boost(-beta), f)
        measured = fields.energy_density(boosted) / fields.energy_density(f)
        brute = max(brute, _rel(measured, fields.energy_density_ratio(kinematics.make_boost(beta))))
    out.append(CheckResult("fields", "ratio_closed_vs_brute", brute <= 1e-10, f"max {brute:.3g}"))

    inv = 0.0
    for _ in range(200):
        b = kinematics.make_boost(rng.uniform(-0.99, 0.99))
        f = fields.FieldState(rng.uniform(-1e3, 1e3, 3), rng.uniform(-1e3, 1e3, 3))
        g = fields.boost_fields(b, f)
        scale = g.e_squared + g.h_squared
        inv = max(
            inv,
            abs((g.e_squared - g.h_squared) - (f.e_squared - f.h_squared)) / scale,
            abs(g.e_dot_h - f.e_dot_h) / scale,
        )
    out.append(CheckResult("fields", "field_invariants", inv <= 1e-12, f"max {inv:.3g}"))

    flux = 0.0
    for beta in BETA_GRID:
        g = fields.boost_fields(kinematics.make_boost(beta), fields.plane_wave(1.0))
        s = fields.poynting(g)
        flux = max(flux, _rel(float(s[0]), fields.energy_density(g)), abs(s[1]) + abs(s[2]))
    out.append(CheckResult("fields", "plane_wave_flux", flux <= 1e-12, f"max {flux:.3g}"))
    return out


# -- pulse --------------------------------------------------------------------

def _pulse(rng: np.random.Generator) -> list[CheckResult]:
    out = []
    plan = pulse.QuadraturePlan(256, "simpson")
    worst = 0.0
    for n in (1, 2, 8, 64):
        p = pulse.MonochromaticPulse(1.0, 1.0, n)
        for beta in BETA_GRID:
            worst = max(worst, pulse.verify_energy_ratio(kinematics.make_boost(beta), p, plan).rel_error)
    out.append(CheckResult("pulse", "frame_consistency", worst <= 1e-6, f"max {worst:.3g}"))

    b = kinematics.make_boost(0.6)
    ref = pulse.verify_energy_ratio(b, pulse.MonochromaticPulse(1.0, 1.0, 8), plan).numeric
    spread = 0.0
    for _ in range(10):
        p = pulse.MonochromaticPulse(
            1.0, 1.0, int(rng.integers(1, 65)), float(rng.uniform(0, 2 * math.pi))
        )
        spread = max(spread, _rel(pulse.verify_energy_ratio(b, p, plan).numeric, ref))
    out.append(CheckResult("pulse", "shape_independence", spread <= 1e-6, f"max {spread:.3g}"))

    positive = all(
        pulse.integrate_energy(pulse.MonochromaticPulse(a, nu, n), plan) > 0
        for a, nu, n in zip(rng.uniform(1e-3, 1e3, 10), rng.uniform(0.1, 10, 10), rng.integers(1, 9, 10))
    )
    out.append(CheckResult("pulse", "energy_positivity", positive))

    conv = pulse.simpson_convergence(pulse.MonochromaticPulse(1.0, 1.0, 8, 0.3))
    ok = conv.saturated or 3.5 <= conv.order <= 4.5
    detail = (
        "saturated: exact on whole periods" if conv.saturated else f"order {conv.order:.3f}"
    )
    out.append(CheckResult("pulse", "simpson_convergence", ok, detail))
    return out


# -- duality ------------------------------------------------------------------

def _duality(rng: np.random.Generator) -> list[CheckResult]:
    out = []
    plan = pulse.QuadraturePlan()
    lab = pulse.MonochromaticPulse(1.0e4, 1.0, 8)
    seed = duality.seed_ensemble(lab, plan, 1.0)

    counts_ok = True
    p, ens = lab, seed
    for beta in rng.uniform(-0.9, 0.9, 6):
        b = kinematics.make_boost(beta)
        nxt = duality.transform_ensemble(b, ens, p, plan)
        counts_ok &= nxt.count == ens.count
        p, ens = pulse.boost_pulse(b, p), nxt
    out.append(CheckResult("duality", "count_invariance", counts_ok))

    frames = [duality.transform_ensemble(kinematics.make_boost(-b), seed, lab, plan) for b in (0.0, 0.6, 0.8)]
    ea, eb, ec = (f.per_photon_energy for f in frames)
    trans = _rel((ea / eb) * (eb / ec), ea / ec)
    out.append(CheckResult("duality", "ratio_transitivity", trans <= 1e-9, f"{trans:.3g}"))

    samples = [duality.FrequencyEnergySample.from_ensemble(f) for f in frames]
    uni = max(duality.universal_ratio_check(s, samples[0]) for s in samples)
    out.append(CheckResult("duality", "universal_ratio", uni <= 1e-6, f"max {uni:.3g}"))

    null = duality.parallel_null_check(frames)
    out.append(CheckResult("duality", "parallel_null", null <= 1e-6, f"{null:.3g}"))

    scale = int(rng.integers(2, 1000))
    fit = duality.fit_planck_constant(samples)
    rescaled = duality.fit_planck_constant(
        duality.FrequencyEnergySample.from_ensemble(
            duality.PhotonEnsemble(f.count * scale, f.total_energy * scale, f.frequency)
        )
        for f in frames
    )
    fit_scale = _rel(rescaled.h_est, fit.h_est)
    out.append(CheckResult("duality", "fit_normalization", fit_scale <= 1e-9, f"{fit_scale:.3g}"))

    h = float(rng.uniform(0.1, 10.0))
    nus = rng.uniform(0.1, 10.0, 8)
    exact = duality.fit_planck_constant(duality.FrequencyEnergySample(nu, h * nu) for nu in nus)
    out.append(CheckResult("duality", "fit_exact_model", _rel(exact.h_est, h) <= 1e-12, f"{_rel(exact.h_est, h):.3g}"))
    return out


# -- wavecheck ----------------------------------------------------------------

def default_wave_grid() -> wavecheck.Grid1D:
    """One spatial period, half a period in time, so that ``dx != dt``."""
    return wavecheck.Grid1D(0.0, 2 * math.pi, 128, 0.0, math.pi, 128)


def _wavecheck(rng: np.random.Generator) -> list[CheckResult]:
    out = []
    g = default_wave_grid()
    sine = wavecheck.convergence_order(wavecheck.SINE, 1.0, 1.0, g, 4)
    out.append(CheckResult(
        "wavecheck", "sine_order",
        not sine.saturated and 1.8 <= sine.order <= 2.2, f"order {sine.describe()}",
    ))
    for prof in (wavecheck.LINEAR, wavecheck.CUBIC):
        rep = wavecheck.convergence_order(prof, 1.0, 1.0, g, 3)
        ok = rep.saturated or 1.8 <= rep.order
        out.append(CheckResult("wavecheck", f"{prof.descriptor}_order", ok, rep.describe()))
    control = wavecheck.convergence_order(wavecheck.SINE, 1.0, 2.0, g, 3)
    out.append(CheckResult(
        "wavecheck", "non_light_like_control",
        min(control.errors) > 1.0, f"min residual {min(control.errors):.3g}",
    ))
    step = 2 * math.pi / (2 * (g.n_x - 1))
    base = wavecheck.residual_wave_equation(wavecheck.SINE, 1.0, 1.0, g)
    shift = max(
        _rel(wavecheck.residual_wave_equation(wavecheck.SINE.shifted(m * step), 1.0, 1.0, g), base)
        for m in rng.integers(1, 4 * (g.n_x - 1), 5)
    )
    out.append(CheckResult("wavecheck", "translation_invariance", shift <= 1e-12, f"max {shift:.3g}"))
    return out


# -- cli / reports ------------------------------------------------------------

def _reports(rng: np.random.Generator) -> list[CheckResult]:
    cfg = report.SweepConfig()
    a, b = report.run_sweep(cfg), report.run_sweep(cfg)
    same = report.to_csv(a) == report.to_csv(b) and report.to_json(a) == report.to_json(b)
    out = [CheckResult("cli", "output_determinism", same)]
    from_csv = report.parse_csv(report.to_csv(a))
    from_json = report.parse_json(report.to_json(a))
    agree = from_csv.rows == from_json.rows and from_csv.summary == from_json.summary
    out.append(CheckResult("cli", "csv_json_agreement", agree))
    out.append(CheckResult("cli", "default_sweep", a.passed, f"h_est {a.summary['h_est']!r}"))
    return out


SUITES: dict[str, Callable[[np.random.Generator], list[CheckResult]]] = {
    "kinematics": _kinematics,
    "fields": _fields,
    "pulse": _pulse,
    "duality": _duality,
    "wavecheck": _wavecheck,
    "cli": _reports,
}


def run_verification(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run every suite; each gets its own generator derived from ``seed``."""
    results = []
    for i, suite in enumerate(SUITES.values()):
        results.extend(suite(np.random.default_rng([seed, i])))
    return results
