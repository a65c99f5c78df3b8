"""Observed order of accuracy from a refinement sequence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

EPS = 2.0**-52


@dataclass(frozen=True)
class ConvergenceReport:
    """Errors per refinement level and the order they imply.

    ``order`` is None when ``saturated``: some level's error already sits at
    the rounding floor, so the error ratios carry no truncation information.
    """

    errors: tuple[float, ...]
    floors: tuple[float, ...]
    orders: tuple[float, ...]
    order: float | None
    saturated: bool

    def describe(self) -> str:
        if self.saturated:
            return "saturated"
        return f"{self.order:.6g}"


def estimate_order(
    errors: Sequence[float], floors: Sequence[float], refinement: float = 2.0
) -> ConvergenceReport:
    """Average ``log(e_i / e_{i+1}) / log(refinement)`` over successive levels."""
    errors = tuple(float(e) for e in errors)
    floors = tuple(float(f) for f in floors)
    if len(errors) < 2 or len(errors) != len(floors):
        raise ValueError("need matching errors and floors for at least two levels")
    if any(e <= f for e, f in zip(errors, floors)):
        return ConvergenceReport(errors, floors, (), None, True)
    orders = tuple(
        math.log(errors[i] / errors[i + 1]) / math.log(refinement)
        for i in range(len(errors) - 1)
    )
    return ConvergenceReport(errors, floors, orders, math.fsum(orders) / len(orders), False)
