import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from photonframe.duality import (
    FrequencyEnergySample,
    PhotonEnsemble,
    fit_planck_constant,
    parallel_null_check,
    seed_ensemble,
    transform_ensemble,
    universal_ratio_check,
)
from photonframe.errors import ConfigurationError, ConsistencyError, DegenerateFitError
from photonframe.kinematics import doppler_factor, make_boost
from photonframe.pulse import MonochromaticPulse, QuadraturePlan, boost_pulse

PLAN = QuadraturePlan()
UNIT_PULSE = MonochromaticPulse(1.0, 1.0, 8)


@pytest.fixture
def seed():
    return PhotonEnsemble(100, 1 / math.pi, 1.0)


def frames(betas, h0=1.0, amplitude=1.0e4):
    lab = MonochromaticPulse(amplitude, 1.0, 8)
    start = seed_ensemble(lab, PLAN, h0)
    return [transform_ensemble(make_boost(-b), start, lab, PLAN) for b in betas]


def test_transform_identity(seed):
    out = transform_ensemble(make_boost(0.0), seed, UNIT_PULSE, PLAN)
    assert out.count == seed.count
    assert out.frequency == seed.frequency
    assert out.total_energy == pytest.approx(seed.total_energy, rel=1e-15)


def test_transform_follows_energy_ratio(seed):
    b = make_boost(0.6)
    out = transform_ensemble(b, seed, UNIT_PULSE, PLAN)
    assert out.count == 100
    assert out.frequency == pytest.approx(seed.frequency / doppler_factor(b), rel=1e-15)
    assert seed.total_energy / out.total_energy == pytest.approx(2.0, rel=1e-6)


def test_per_photon_ratio_tracks_frequency(seed):
    out = transform_ensemble(make_boost(0.8), seed, UNIT_PULSE, PLAN)
    assert out.per_photon_energy / seed.per_photon_energy == pytest.approx(
        out.frequency / seed.frequency, rel=1e-6
    )


def test_transform_rejects_mismatched_frequency(seed):
    with pytest.raises(ConsistencyError):
        transform_ensemble(make_boost(0.1), seed, MonochromaticPulse(1.0, 2.0, 8), PLAN)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(-0.9, 0.9), min_size=1, max_size=6))
def test_count_never_changes(chain):
    p = MonochromaticPulse(1.0, 1.0, 4)
    ens = PhotonEnsemble(12345, 0.2, 1.0)
    for beta in chain:
        b = make_boost(beta)
        ens = transform_ensemble(b, ens, p, PLAN)
        p = boost_pulse(b, p)
        assert ens.count == 12345


def test_universal_ratio_examples():
    s = FrequencyEnergySample(1.0, 2.0)
    assert universal_ratio_check(s, s) == 0.0
    a, b = (FrequencyEnergySample.from_ensemble(f) for f in frames([0.6, 0.8]))
    assert universal_ratio_check(a, b) <= 1e-6
    s1, s2 = FrequencyEnergySample(1.0, 1.0), FrequencyEnergySample(2.0, 2.0)
    assert universal_ratio_check(FrequencyEnergySample(1.0, 2.0), s2) == pytest.approx(1.0)
    assert universal_ratio_check(s1, FrequencyEnergySample(2.0, 4.0)) == pytest.approx(0.5)


def test_fit_exact_line():
    fit = fit_planck_constant([FrequencyEnergySample(nu, nu) for nu in (1.0, 2.0, 3.5)])
    assert fit.h_est == 1.0
    assert fit.max_rel_residual == 0.0
    assert fit.n_samples == 3


@pytest.mark.parametrize("h0", [1.0, 6.62607015e-27])
def test_fit_recovers_seed_constant(h0):
    samples = [FrequencyEnergySample.from_ensemble(f) for f in frames([0, 0.2, 0.4, 0.6, 0.8], h0)]
    fit = fit_planck_constant(samples)
    assert fit.h_est == pytest.approx(h0, rel=1e-6)
    assert fit.max_rel_residual <= 1e-6


@pytest.mark.parametrize(
    "samples",
    [
        [FrequencyEnergySample(1.0, 1.0)],
        [FrequencyEnergySample(1.0, 1.0), FrequencyEnergySample(1.0 + 1e-9, 1.0)],
        [],
    ],
)
def test_fit_degenerate(samples):
    with pytest.raises(DegenerateFitError):
        fit_planck_constant(samples)


@given(st.floats(1e-30, 1e30), st.lists(st.floats(1e-3, 1e3), min_size=2, max_size=20, unique=True))
def test_fit_exact_model_to_machine_precision(h, nus):
    if max(nus) - min(nus) < 1e-6 * max(nus):
        return
    fit = fit_planck_constant(FrequencyEnergySample(nu, h * nu) for nu in nus)
    assert fit.h_est == pytest.approx(h, rel=1e-12)


@given(st.lists(st.tuples(st.floats(1e-3, 1e3), st.floats(1e-3, 1e3)), min_size=2, max_size=30), st.randoms())
def test_fit_order_independent(pairs, rnd):
    if max(p[0] for p in pairs) - min(p[0] for p in pairs) < 1e-6 * max(p[0] for p in pairs):
        return
    samples = [FrequencyEnergySample(nu, e) for nu, e in pairs]
    shuffled = samples[:]
    rnd.shuffle(shuffled)
    assert fit_planck_constant(shuffled).h_est == pytest.approx(fit_planck_constant(samples).h_est, rel=1e-12)


@given(st.integers(2, 10**6))
def test_fit_depends_only_on_per_photon_energy(scale):
    base = frames([0, 0.5, 0.9])
    rescaled = [PhotonEnsemble(f.count * scale, f.total_energy * scale, f.frequency) for f in base]
    h1 = fit_planck_constant(FrequencyEnergySample.from_ensemble(f) for f in base).h_est
    h2 = fit_planck_constant(FrequencyEnergySample.from_ensemble(f) for f in rescaled).h_est
    assert h2 == pytest.approx(h1, rel=1e-9)


def test_ratio_transitivity():
    a, b, c = (f.per_photon_energy for f in frames([-0.5, 0.3, 0.9]))
    assert (a / b) * (b / c) == pytest.approx(a / c, rel=1e-9)


def test_parallel_null_check():
    assert parallel_null_check(frames([0.0])) == 0.0
    sweep = frames([0.0, 0.6, 0.8])
    assert parallel_null_check(sweep) <= 1e-6
    bad = sweep[:2] + [PhotonEnsemble(sweep[2].count, 2 * sweep[2].total_energy, sweep[2].frequency)]
    assert parallel_null_check(bad) == pytest.approx(1.0, rel=1e-6)


def test_seed_ensemble_count_rounding():
    ens = seed_ensemble(MonochromaticPulse(1.0e4, 1.0, 8), PLAN, 1.0)
    assert ens.count == round(1.0e8 / math.pi)
    with pytest.raises(ConfigurationError):
        seed_ensemble(MonochromaticPulse(1.0, 1.0, 8), PLAN, 1.0)
    with pytest.raises(ConfigurationError):
        seed_ensemble(UNIT_PULSE, PLAN, -1.0)


@pytest.mark.parametrize("kwargs", [{"count": 0}, {"count": 1.5}, {"total_energy": 0.0}])
def test_invalid_ensembles(kwargs):
    args = {"count": 1, "total_energy": 1.0, "frequency": 1.0} | kwargs
    with pytest.raises(ConfigurationError):
        PhotonEnsemble(**args)
