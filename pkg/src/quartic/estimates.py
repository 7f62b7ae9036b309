"""Small value types shared across the d=0,1,2 modules."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidArgument


class Order(str, Enum):
    LEADING = "leading"
    FIRST_CORRECTION = "first_correction"
    EXACT_ORACLE = "exact_oracle"


@dataclass(frozen=True)
class CouplingPoint:
    """Dimensionless coupling h.

    For d=0 and d=1, h = g^2/2 (the coefficient of x^4 in the tables).
    For d=2, h = g^2/(pi m^2) with m = 1.
    """

    h: float
    dim: int

    def __post_init__(self):
        if self.dim not in (0, 1, 2):
            raise InvalidArgument(f"dimension must be 0, 1 or 2, got {self.dim}")
        if not self.h >= 0:
            raise InvalidArgument(f"coupling must be >= 0, got {self.h}")

    @property
    def g2(self) -> float:
        return math.pi * self.h if self.dim == 2 else 2.0 * self.h


@dataclass(frozen=True)
class EnergyEstimate:
    value: float
    order: Order
    lower: float | None = None
    upper: float | None = None
