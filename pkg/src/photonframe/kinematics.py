"""Four-vectors and Lorentz boosts along the x axis.

Units are natural (c = 1). A :class:`Boost` with velocity ``beta`` relates
frame K to a frame K' moving with velocity ``beta`` along +x of K.
:func:`boost_four_vector` takes components measured in K' and returns the
components measured in K.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "Boost",
    "FourVector",
    "WaveFourVector",
    "make_boost",
    "compose_boosts",
    "boost_four_vector",
    "doppler_factor",
    "minkowski_square",
]


@dataclass(frozen=True)
class Boost:
    """Inertial frame change along x, parameterized by ``beta = V/c``."""

    beta: float
    gamma: float = field(init=False)
    direction: int = field(init=False)

    def __post_init__(self):
        beta = float(self.beta)
        if not math.isfinite(beta) or abs(beta) >= 1.0:
            raise DomainError(f"boost velocity must satisfy |beta| < 1, got {self.beta!r}")
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta)))
        object.__setattr__(self, "direction", 1 if beta >= 0.0 else -1)

    def inverse(self) -> Boost:
        return Boost(-self.beta)


@dataclass(frozen=True)
class FourVector:
    t_comp: float
    x_comp: float
    y_comp: float = 0.0
    z_comp: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.t_comp, self.x_comp, self.y_comp, self.z_comp])

    @property
    def spatial_norm(self) -> float:
        return math.hypot(self.x_comp, self.y_comp, self.z_comp)


@dataclass(frozen=True)
class WaveFourVector(FourVector):
    """Wave four-vector ``(omega, k_x, k_y, k_z)`` with c = 1.

    ``t_comp`` is ``k0 = omega`` in inverse length units, so ``nu * lam = 1``
    for light-like vectors.
    """

    @classmethod
    def from_frequency(cls, nu: float) -> WaveFourVector:
        """Light-like wave vector of frequency ``nu`` travelling along +x."""
        k0 = 2.0 * math.pi * nu
        return cls(k0, k0, 0.0, 0.0)

    @property
    def omega(self) -> float:
        return self.t_comp

    @property
    def nu(self) -> float:
        return self.t_comp / (2.0 * math.pi)

    @property
    def lam(self) -> float:
        return 2.0 * math.pi / self.t_comp

    def is_light_like(self, rtol: float = 1e-12) -> bool:
        return abs(minkowski_square(self)) <= rtol * self.t_comp**2


def make_boost(beta: float) -> Boost:
    """Build a :class:`Boost`; raises :class:`DomainError` unless ``|beta| < 1``."""
    return Boost(beta)


def compose_boosts(first: Boost, second: Boost) -> Boost:
    """Collinear composition by relativistic velocity addition."""
    b1, b2 = first.beta, second.beta
    return Boost((b1 + b2) / (1.0 + b1 * b2))


def boost_four_vector(b: Boost, v: FourVector) -> FourVector:
    """Components in K of a four-vector given in K'.

    ``t = gamma (t' + beta x')``, ``x = gamma (x' + beta t')``; y and z pass
    through. The result has the same concrete type as ``v``.
    """
    g, beta = b.gamma, b.beta
    t = g * (v.t_comp + beta * v.x_comp)
    x = g * (v.x_comp + beta * v.t_comp)
    return type(v)(t, x, v.y_comp, v.z_comp)


def doppler_factor(b: Boost) -> float:
    """Collinear frequency ratio ``nu/nu' = lam'/lam = (1 + beta) gamma``."""
    return (1.0 + b.beta) * b.gamma


def minkowski_square(v: FourVector) -> float:
    """``t^2 - x^2 - y^2 - z^2``."""
    # factored form keeps null vectors exactly null
    t, x = v.t_comp, v.x_comp
    return (t - x) * (t + x) - v.y_comp**2 - v.z_comp**2
