"""Electromagnetic field values in Gaussian units (c = 1).

The canonical plane wave travels along +x with E along +y and H along +z,
so the energy flux ``E x H`` points along +x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import Boost

__all__ = [
    "FieldState",
    "plane_wave",
    "energy_density",
    "poynting",
    "boost_fields",
    "energy_density_ratio",
]

Vector3 = tuple[float, float, float]


def _vec3(v) -> Vector3:
    x, y, z = (float(c) for c in v)
    return (x, y, z)


@dataclass(frozen=True)
class FieldState:
    """Instantaneous electric and magnetic field vectors at one point."""

    e_field: Vector3 = (0.0, 0.0, 0.0)
    h_field: Vector3 = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "e_field", _vec3(self.e_field))
        object.__setattr__(self, "h_field", _vec3(self.h_field))

    @property
    def e_squared(self) -> float:
        return math.fsum(c * c for c in self.e_field)

    @property
    def h_squared(self) -> float:
        return math.fsum(c * c for c in self.h_field)

    @property
    def e_dot_h(self) -> float:
        return math.fsum(e * h for e, h in zip(self.e_field, self.h_field))


def plane_wave(amplitude: float) -> FieldState:
    """Canonical +x plane wave: ``E = (0, a, 0)``, ``H = (0, 0, a)``."""
    return FieldState((0.0, amplitude, 0.0), (0.0, 0.0, amplitude))


def energy_density(f: FieldState) -> float:
    """``W = (|E|^2 + |H|^2) / 8 pi``."""
    return (f.e_squared + f.h_squared) / (8.0 * math.pi)


def poynting(f: FieldState) -> np.ndarray:
    """Energy flux ``S = (c / 4 pi) E x H`` with c = 1."""
    return np.cross(f.e_field, f.h_field) / (4.0 * math.pi)


def boost_fields(b: Boost, f: FieldState) -> FieldState:
    """Field components seen from the frame moving with ``b.beta`` along +x.

    Longitudinal components are unchanged; the transverse ones mix as

        E_y'' = gamma (E_y - beta H_z)    E_z'' = gamma (E_z + beta H_y)
        H_y'' = gamma (H_y + beta E_z)    H_z'' = gamma (H_z - beta E_y)

    For positive ``beta`` a +x plane wave is red-shifted by ``gamma (1 - beta)``.
    """
    g, beta = b.gamma, b.beta
    ex, ey, ez = f.e_field
    hx, hy, hz = f.h_field
    return FieldState(
        (ex, g * (ey - beta * hz), g * (ez + beta * hy)),
        (hx, g * (hy + beta * ez), g * (hz - beta * ey)),
    )


def energy_density_ratio(b: Boost) -> float:
    """``W/W' = (1 + beta)^2 / (1 - beta^2)`` for collinear propagation."""
    beta = b.beta
    # 1 - beta^2 factored to avoid cancellation near |beta| -> 1
    return (1.0 + beta) ** 2 / ((1.0 - beta) * (1.0 + beta))
