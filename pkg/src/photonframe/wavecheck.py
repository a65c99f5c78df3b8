"""Finite-difference check that travelling profiles solve the 1D wave equation.

For ``f(k x - omega t)`` with ``omega = k`` (c = 1), ``f_xx - f_tt`` vanishes
identically. Central second differences reproduce that up to ``O(dx^2 + dt^2)``.
Note that with ``k dx == omega dt`` the two discrete operators coincide and
the residual is exactly zero, so convergence studies need ``dx != dt``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .convergence import EPS, ConvergenceReport, estimate_order
from .errors import ConfigurationError, WaveEvaluationError

__all__ = [
    "WaveProfile",
    "Grid1D",
    "SINE",
    "LINEAR",
    "CUBIC",
    "PROFILES",
    "residual_wave_equation",
    "convergence_order",
]


@dataclass(frozen=True)
class WaveProfile:
    """A scalar profile ``f(u)``; ``evaluator`` must accept numpy arrays."""

    evaluator: Callable[[np.ndarray], np.ndarray]
    descriptor: str = "f"

    def __call__(self, u):
        return np.asarray(self.evaluator(u), dtype=float)

    def shifted(self, offset: float) -> WaveProfile:
        f = self.evaluator
        return WaveProfile(lambda u: f(u + offset), f"{self.descriptor}(u+{offset:g})")


SINE = WaveProfile(np.sin, "sin")
LINEAR = WaveProfile(lambda u: u, "linear")
CUBIC = WaveProfile(lambda u: u**3, "cubic")
PROFILES = {p.descriptor: p for p in (SINE, LINEAR, CUBIC)}


@dataclass(frozen=True)
class Grid1D:
    x_min: float
    x_max: float
    n_x: int
    t_min: float
    t_max: float
    n_t: int

    def __post_init__(self):
        if self.x_max <= self.x_min or self.t_max <= self.t_min:
            raise ConfigurationError("grid ranges must have max > min")
        if self.n_x < 8 or self.n_t < 8:
            raise ConfigurationError("grids need at least 8 points per axis")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_x - 1)

    @property
    def dt(self) -> float:
        return (self.t_max - self.t_min) / (self.n_t - 1)

    def refined(self) -> Grid1D:
        """Same ranges with both spacings halved."""
        return replace(self, n_x=2 * self.n_x - 1, n_t=2 * self.n_t - 1)


def _samples(p: WaveProfile, k: float, omega: float, g: Grid1D) -> np.ndarray:
    x = np.linspace(g.x_min, g.x_max, g.n_x)
    t = np.linspace(g.t_min, g.t_max, g.n_t)
    f = p(k * x[:, None] - omega * t[None, :])
    if f.shape != (g.n_x, g.n_t):
        raise WaveEvaluationError(f"profile {p.descriptor!r} returned shape {f.shape}")
    if not np.all(np.isfinite(f)):
        raise WaveEvaluationError(f"profile {p.descriptor!r} produced non-finite samples")
    return f


def _residual_and_floor(p: WaveProfile, k: float, omega: float, g: Grid1D) -> tuple[float, float]:
    f = _samples(p, k, omega, g)
    centre = f[1:-1, 1:-1]
    f_xx = (f[2:, 1:-1] - 2.0 * centre + f[:-2, 1:-1]) / g.dx**2
    f_tt = (f[1:-1, 2:] - 2.0 * centre + f[1:-1, :-2]) / g.dt**2
    residual = float(np.max(np.abs(f_xx - f_tt)))
    floor = 64.0 * EPS * float(np.max(np.abs(f))) * (1.0 / g.dx**2 + 1.0 / g.dt**2)
    return residual, floor


def residual_wave_equation(p: WaveProfile, k: float, omega: float, g: Grid1D) -> float:
    """Max ``|f_xx - f_tt|`` over interior grid points of ``f(k x - omega t)``."""
    return _residual_and_floor(p, k, omega, g)[0]


def convergence_order(
    p: WaveProfile, k: float, omega: float, g: Grid1D, levels: int = 3
) -> ConvergenceReport:
    """Observed order of the residual over ``levels`` uniform refinements."""
    if levels < 3:
        raise ConfigurationError("convergence_order needs at least 3 levels")
    residuals, floors = [], []
    for _ in range(levels):
        r, fl = _residual_and_floor(p, k, omega, g)
        residuals.append(r)
        floors.append(fl)
        g = g.refined()
    return estimate_order(residuals, floors)
