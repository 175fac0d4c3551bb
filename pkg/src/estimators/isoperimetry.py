"""
Isoperimetric profile, Cheeger and Ledoux constants

For log-concave measures on the line the isoperimetric profile equals the
flat profile I(t) = p(F^{-1}(t)). The constants are infima over t in (0, 1/2]:

    h_Che = inf I(t)/t,        l_Led = inf I(t) / (t sqrt(log(1/t)))
"""

import logging
import math
from typing import Callable

import numpy as np
from scipy import optimize

from ..core.exceptions import DomainError
from .distribution import DistributionCache

logger = logging.getLogger(__name__)

T_SAMPLES = 400


def isoperimetric_profile_flat(dist: DistributionCache, t: float) -> float:
    """Density at the t-quantile."""
    if not 0.0 < t < 1.0:
        raise DomainError("t", t, f"Profile level must lie in (0, 1), got {t}")
    return float(dist.density_at(np.array([dist.quantile(t)]))[0])


def _smallest_level(dist: DistributionCache) -> float:
    positive = dist.cdf[(dist.cdf > 0) & (dist.cdf < 0.5)]
    return float(positive[0]) if positive.size else 0.25


def _infimum(dist: DistributionCache, ratio: Callable[[float], float]) -> float:
    t_min = _smallest_level(dist)
    levels = np.unique(np.concatenate([
        np.geomspace(t_min, 0.5, T_SAMPLES),
        np.linspace(t_min, 0.5, T_SAMPLES),
    ]))
    values = np.array([ratio(float(t)) for t in levels])
    best = int(np.argmin(values))
    value = float(values[best])
    low = float(levels[max(best - 1, 0)])
    high = float(levels[min(best + 1, levels.size - 1)])
    if high > low:
        outcome = optimize.minimize_scalar(ratio, bounds=(low, high), method="bounded")
        if outcome.success and outcome.fun < value:
            value = float(outcome.fun)
    return value


def cheeger_constant(dist: DistributionCache) -> float:
    """inf over t in (0, 1/2] of I(t)/t."""
    value = _infimum(dist, lambda t: isoperimetric_profile_flat(dist, t) / t)
    logger.debug("Cheeger constant %.8g", value)
    return value


def ledoux_constant(dist: DistributionCache) -> float:
    """inf over t in (0, 1/2] of I(t)/(t sqrt(log 1/t))."""
    return _infimum(dist, lambda t: isoperimetric_profile_flat(dist, t) / (t * math.sqrt(math.log(1.0 / t))))


def cheeger_p_poincare_lower(h_che: float, p: float = 2.0) -> float:
    """Cheeger-type lower bound (h/p)^p for the p-Poincare constant."""
    if not p > 1:
        raise DomainError("p", p, f"p must be greater than 1, got {p}")
    if h_che < 0:
        raise DomainError("h_che", h_che, "Cheeger constant must be non-negative")
    return (h_che / p) ** p
