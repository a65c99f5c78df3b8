"""Finite monochromatic wave trains and their electromagnetic energy.

A pulse occupies exactly ``n_periods`` wavelengths behind its leading
front. At frame time t its support is ``t <= x <= t + n_periods * lam``.
Energies are per unit transverse area: only the longitudinal length
element changes between frames.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .convergence import EPS, ConvergenceReport, estimate_order
from .errors import ConfigurationError
from .fields import FieldState, boost_fields, energy_density_ratio, plane_wave
from .kinematics import Boost, doppler_factor

__all__ = [
    "MonochromaticPulse",
    "QuadraturePlan",
    "QuadratureRule",
    "RatioReport",
    "sample_fields",
    "integrate_energy",
    "closed_form_energy",
    "boost_pulse",
    "energy_ratio_closed_form",
    "verify_energy_ratio",
    "simpson_convergence",
]


class QuadratureRule(str, enum.Enum):
    MIDPOINT = "midpoint"
    SIMPSON = "simpson"


@dataclass(frozen=True)
class MonochromaticPulse:
    """Rectangular-envelope wave train with E along +y and H along +z."""

    amplitude: float
    nu: float
    n_periods: int = 8
    phase0: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.amplitude) and self.amplitude > 0):
            raise ConfigurationError(f"amplitude must be positive, got {self.amplitude!r}")
        if not (math.isfinite(self.nu) and self.nu > 0):
            raise ConfigurationError(f"frequency must be positive, got {self.nu!r}")
        if isinstance(self.n_periods, bool) or int(self.n_periods) != self.n_periods or self.n_periods < 1:
            raise ConfigurationError(f"n_periods must be a positive integer, got {self.n_periods!r}")
        object.__setattr__(self, "n_periods", int(self.n_periods))

    @property
    def lam(self) -> float:
        return 1.0 / self.nu

    @property
    def length(self) -> float:
        return self.n_periods * self.lam

    def carrier(self, x, t=0.0):
        """``amplitude * sin(2 pi nu (x - t) + phase0)``, without the window."""
        return self.amplitude * np.sin(2.0 * np.pi * self.nu * (np.asarray(x) - t) + self.phase0)


@dataclass(frozen=True)
class QuadraturePlan:
    """Uniform panels per wavelength; Simpson needs an even count."""

    points_per_wavelength: int = 256
    rule: QuadratureRule = QuadratureRule.SIMPSON

    def __post_init__(self):
        try:
            rule = QuadratureRule(self.rule)
        except ValueError:
            raise ConfigurationError(f"unknown quadrature rule {self.rule!r}") from None
        object.__setattr__(self, "rule", rule)
        n = self.points_per_wavelength
        if isinstance(n, bool) or int(n) != n or n < 8:
            raise ConfigurationError(f"points_per_wavelength must be an integer >= 8, got {n!r}")
        if rule is QuadratureRule.SIMPSON and n % 2:
            raise ConfigurationError("simpson needs an even number of panels per wavelength")
        object.__setattr__(self, "points_per_wavelength", int(n))


@dataclass(frozen=True)
class RatioReport:
    numeric: float
    closed_form: float
    rel_error: float


def sample_fields(p: MonochromaticPulse, x: float, t: float) -> FieldState:
    """Fields of the pulse at event ``(t, x)``; zero outside the support."""
    if not (t <= x <= t + p.length):
        return FieldState()
    a = float(p.carrier(x, t))
    return FieldState((0.0, a, 0.0), (0.0, 0.0, a))


def integrate_energy(p: MonochromaticPulse, q: QuadraturePlan = QuadraturePlan()) -> float:
    """Energy of the pulse on the ``t = 0`` slice, ``integral of W dx``.

    Weighted samples are summed with :func:`math.fsum`, so the result does
    not depend on summation order.
    """
    if not isinstance(q, QuadraturePlan):
        raise ConfigurationError(f"expected a QuadraturePlan, got {type(q).__name__}")
    panels = q.points_per_wavelength * p.n_periods
    h = p.length / panels
    if q.rule is QuadratureRule.MIDPOINT:
        x = (np.arange(panels) + 0.5) * h
        weights = np.full(panels, h)
    else:
        x = np.arange(panels + 1) * h
        weights = np.full(panels + 1, 2.0)
        weights[1::2] = 4.0
        weights[0] = weights[-1] = 1.0
        weights *= h / 3.0
    e = p.carrier(x)
    # |E| = |H| on the plane wave
    w = 2.0 * e * e / (8.0 * math.pi)
    return math.fsum(weights * w)


def closed_form_energy(p: MonochromaticPulse) -> float:
    """``a^2 n lam / 8 pi``: sin^2 averages to 1/2 over whole periods."""
    return p.amplitude**2 * p.length / (8.0 * math.pi)


def boost_pulse(b: Boost, p: MonochromaticPulse) -> MonochromaticPulse:
    """The same pulse described from the frame moving with ``b.beta`` along +x.

    The number of periods and the phase at the leading front are invariant.
    Frequency and amplitude both pick up ``1 / doppler_factor(b)``; the
    amplitude factor is taken from :func:`boost_fields`.
    """
    amplitude = boost_fields(b, plane_wave(p.amplitude)).e_field[1]
    return replace(p, amplitude=amplitude, nu=p.nu / doppler_factor(b))


def energy_ratio_closed_form(b: Boost) -> float:
    """``E/E' = (W/W') (lam/lam')``, which reduces to ``nu/nu'``."""
    return energy_density_ratio(b) / doppler_factor(b)


def verify_energy_ratio(
    b: Boost, p: MonochromaticPulse, q: QuadraturePlan = QuadraturePlan()
) -> RatioReport:
    """Numerically integrated ``E/E'`` against the closed form.

    ``p`` is the pulse in K; ``E'`` is the energy of ``boost_pulse(b, p)``.
    """
    energy = integrate_energy(p, q)
    energy_primed = integrate_energy(boost_pulse(b, p), q)
    numeric = energy / energy_primed
    closed = energy_ratio_closed_form(b)
    return RatioReport(numeric, closed, abs(numeric / closed - 1.0))


def simpson_convergence(
    p: MonochromaticPulse, base_points: int = 8, doublings: int = 3
) -> ConvergenceReport:
    """Relative Simpson error against :func:`closed_form_energy` per doubling."""
    exact = closed_form_energy(p)
    errors, floors = [], []
    for level in range(doublings + 1):
        plan = QuadraturePlan(base_points * 2**level, QuadratureRule.SIMPSON)
        errors.append(abs(integrate_energy(p, plan) / exact - 1.0))
        floors.append(256 * EPS)
    return estimate_order(errors, floors)
