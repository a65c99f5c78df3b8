"""Photon bookkeeping on top of the pulse energies.

A pulse is treated as ``count`` quanta of equal energy. The count is the
same in every frame, so the per-photon energy transforms exactly like the
pulse energy, i.e. like the frequency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConfigurationError, ConsistencyError, DegenerateFitError
from .kinematics import Boost, FourVector, minkowski_square
from .pulse import MonochromaticPulse, QuadraturePlan, boost_pulse, integrate_energy

__all__ = [
    "PhotonEnsemble",
    "FrequencyEnergySample",
    "PlanckFit",
    "seed_ensemble",
    "transform_ensemble",
    "universal_ratio_check",
    "fit_planck_constant",
    "parallel_null_check",
]


@dataclass(frozen=True)
class PhotonEnsemble:
    count: int
    total_energy: float
    frequency: float

    def __post_init__(self):
        if isinstance(self.count, bool) or int(self.count) != self.count or self.count < 1:
            raise ConfigurationError(f"photon count must be a positive integer, got {self.count!r}")
        if not (self.total_energy > 0 and self.frequency > 0):
            raise ConfigurationError("ensemble energy and frequency must be positive")
        object.__setattr__(self, "count", int(self.count))

    @property
    def per_photon_energy(self) -> float:
        return self.total_energy / self.count


@dataclass(frozen=True)
class FrequencyEnergySample:
    nu: float
    photon_energy: float
    beta: float = 0.0

    def __post_init__(self):
        if not (self.nu > 0 and self.photon_energy > 0):
            raise ConfigurationError("samples need positive frequency and photon energy")

    @classmethod
    def from_ensemble(cls, ens: PhotonEnsemble, beta: float = 0.0) -> FrequencyEnergySample:
        return cls(ens.frequency, ens.per_photon_energy, beta)


@dataclass(frozen=True)
class PlanckFit:
    h_est: float
    max_rel_residual: float
    n_samples: int


def seed_ensemble(
    p: MonochromaticPulse, q: QuadraturePlan = QuadraturePlan(), h0: float = 1.0
) -> PhotonEnsemble:
    """Lab-frame ensemble with ``count = round(E / (h0 nu))``.

    The rounding bounds how well ``h0`` can be recovered later, at
    ``0.5 / count`` relative.
    """
    if not (math.isfinite(h0) and h0 > 0):
        raise ConfigurationError(f"h0 must be positive, got {h0!r}")
    energy = integrate_energy(p, q)
    count = round(energy / (h0 * p.nu))
    if count < 1:
        raise ConfigurationError(
            f"pulse energy {energy:.6g} holds fewer than one quantum of h0*nu = {h0 * p.nu:.6g}"
        )
    return PhotonEnsemble(count, energy, p.nu)


def transform_ensemble(
    b: Boost, ens: PhotonEnsemble, p: MonochromaticPulse, q: QuadraturePlan = QuadraturePlan()
) -> PhotonEnsemble:
    """The ensemble seen from the frame reached by :func:`boost_pulse`.

    ``count`` is carried over untouched; the energy comes from integrating
    the boosted pulse.
    """
    if abs(ens.frequency - p.nu) > 1e-12 * p.nu:
        raise ConsistencyError(
            f"ensemble frequency {ens.frequency!r} does not match pulse frequency {p.nu!r}"
        )
    boosted = boost_pulse(b, p)
    return PhotonEnsemble(ens.count, integrate_energy(boosted, q), boosted.nu)


def universal_ratio_check(s1: FrequencyEnergySample, s2: FrequencyEnergySample) -> float:
    """``|(E1/E2) / (nu1/nu2) - 1|``; zero when energy tracks frequency."""
    return abs((s1.photon_energy / s2.photon_energy) / (s1.nu / s2.nu) - 1.0)


def fit_planck_constant(samples: Iterable[FrequencyEnergySample]) -> PlanckFit:
    """Least-squares slope through the origin, ``h = sum(nu E) / sum(nu^2)``.

    Sums are exactly rounded, so the estimate does not depend on sample order.
    """
    samples = list(samples)
    if len(samples) < 2:
        raise DegenerateFitError(f"need at least two samples, got {len(samples)}")
    nus = [s.nu for s in samples]
    if (max(nus) - min(nus)) < 1e-6 * max(nus):
        raise DegenerateFitError("samples span a single frequency; proportionality is untestable")
    h = math.fsum(s.nu * s.photon_energy for s in samples) / math.fsum(s.nu * s.nu for s in samples)
    residual = max(abs(s.photon_energy - h * s.nu) / (h * s.nu) for s in samples)
    return PlanckFit(h, residual, len(samples))


def parallel_null_check(ensembles: Sequence[PhotonEnsemble]) -> float:
    """Largest relative drift of ``E/nu`` across frames.

    Per frame, ``(E, E, 0, 0)`` and ``(nu, nu, 0, 0)`` must both be null and
    parallel; a non-null vector counts as its relative Minkowski square.
    """
    if not ensembles:
        return 0.0
    worst = 0.0
    reference = ensembles[0].total_energy / ensembles[0].frequency
    for ens in ensembles:
        energy_vec = FourVector(ens.total_energy, ens.total_energy)
        wave_vec = FourVector(ens.frequency, ens.frequency)
        for v in (energy_vec, wave_vec):
            worst = max(worst, abs(minkowski_square(v)) / v.t_comp**2)
        worst = max(worst, abs((energy_vec.t_comp / wave_vec.t_comp) / reference - 1.0))
    return worst
