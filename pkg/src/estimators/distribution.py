"""
Distribution Cache

Cumulative distribution, total mass and median of a sampled density, shared by
the Hardy-type estimators and the isoperimetric profile.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy import integrate

from ..core.exceptions import DomainError, InsufficientDataError
from ..density.models import GridDensity


def _inverse(cdf: np.ndarray, x: np.ndarray, t: float) -> float:
    """Generalized inverse of a non-decreasing table; flat stretches give their midpoint."""
    low = int(np.searchsorted(cdf, t, side="left"))
    high = int(np.searchsorted(cdf, t, side="right"))
    if high > low:
        return 0.5 * float(x[low] + x[high - 1])
    if low == 0:
        return float(x[0])
    if low >= cdf.size:
        return float(x[-1])
    c0, c1 = cdf[low - 1], cdf[low]
    weight = (t - c0) / (c1 - c0)
    return float(x[low - 1] + weight * (x[low] - x[low - 1]))


@dataclass(frozen=True)
class DistributionCache:
    """Normalized distribution of a density sampled on a uniform grid."""
    density: GridDensity
    cdf: np.ndarray       # F on the grid, from 0 to 1
    mass: float           # H = int J
    median: float         # eta with F(eta) = 1/2

    @property
    def x(self) -> np.ndarray:
        return self.density.x

    @property
    def probability_density(self) -> np.ndarray:
        return np.asarray(self.density.values) / self.mass

    @property
    def support(self) -> Tuple[float, float]:
        return self.density.interval

    def quantile(self, t: float) -> float:
        """F^{-1}(t) by inverse linear interpolation."""
        if not 0.0 <= t <= 1.0:
            raise DomainError("t", t, f"Quantile level must lie in [0, 1], got {t}")
        return _inverse(self.cdf, self.x, t)

    def cdf_at(self, x: np.ndarray) -> np.ndarray:
        return np.interp(x, self.x, self.cdf)

    def density_at(self, x: np.ndarray) -> np.ndarray:
        return np.interp(x, self.x, self.probability_density)


def build_distribution(density: GridDensity) -> DistributionCache:
    """
    Integrate a sampled density once

    Args:
        density: Non-negative samples with positive total mass

    Returns:
        DistributionCache: trapezoidal cumulative, mass and median
    """
    if density.signed:
        raise DomainError("density", "signed", "A distribution needs a non-negative density")
    values = np.asarray(density.values, dtype=float)
    cumulative = integrate.cumulative_trapezoid(values, dx=density.dx, initial=0.0)
    mass = float(cumulative[-1])
    if not mass > 0:
        raise InsufficientDataError("positive total mass")

    cdf = np.maximum.accumulate(cumulative / mass)
    cdf[-1] = 1.0
    cdf.setflags(write=False)
    median = _inverse(cdf, density.x, 0.5)
    return DistributionCache(density=density, cdf=cdf, mass=mass, median=median)
