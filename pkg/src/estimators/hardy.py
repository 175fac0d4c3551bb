"""
Hardy-type Estimators

Two-sided estimates of functional-inequality constants of a one-dimensional
probability density p = J / H with median eta:

- Muckenhoupt:   B+ = sup_{x>eta} mu([x,inf)) int_eta^x 1/p,   B = B- + B+,
                 1/(4B) <= Lambda_Poi <= 4/B
- Bobkov-Goetze: the same suprema with the extra factor log(1/mu([x,inf))),
                 1/(C_BG B) <= Lambda_LS <= C_BG/B

Suprema are taken over the grid and refined by bounded scalar minimization
in the two cells around the best grid point.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from ..core.config import EstimatorConfig
from ..core.exceptions import DomainError
from ..density.models import GridDensity
from ..means.dimension import INF
from .distribution import DistributionCache, build_distribution

logger = logging.getLogger(__name__)

DIVERGENCE_GROWTH = 3.0


@dataclass(frozen=True)
class TwoSidedEstimate:
    """Bracket [lower, upper] for a functional-inequality constant."""
    b_minus: float
    b_plus: float
    lower: float
    upper: float
    method: str
    constants_used: Dict[str, float] = field(default_factory=dict)

    @property
    def b_total(self) -> float:
        return self.b_minus + self.b_plus

    @property
    def midpoint(self) -> float:
        """Geometric midpoint of the bracket."""
        if self.lower <= 0 or math.isinf(self.upper):
            return self.lower
        return math.sqrt(self.lower * self.upper)

    def contains(self, value: float, rel_tol: float = 0.0) -> bool:
        return self.lower * (1 - rel_tol) <= value <= self.upper * (1 + rel_tol)

    def to_dict(self) -> Dict[str, Any]:
        def plain(value: float) -> Any:
            return "inf" if math.isinf(value) else value

        return {
            "b_minus": plain(self.b_minus),
            "b_plus": plain(self.b_plus),
            "lower": plain(self.lower),
            "upper": plain(self.upper),
            "method": self.method,
            "constants_used": dict(self.constants_used),
        }


@dataclass
class SupremandCurve:
    """One side of a Hardy supremum: abscissae, supremand samples and the supremum."""
    x: np.ndarray
    values: np.ndarray
    supremum: float
    argmax: float


def _tail_factor(tail: np.ndarray, logarithmic: bool) -> np.ndarray:
    if not logarithmic:
        return tail
    safe = np.clip(tail, np.finfo(float).tiny, 1.0)
    return np.where(tail > 0, tail * np.log(1.0 / safe), 0.0)


def supremand_curve(dist: DistributionCache, side: str, logarithmic: bool = False,
                    refine: bool = True) -> SupremandCurve:
    """
    Supremand of B+ (side='plus') or B- (side='minus') on the grid

    The inverse-density integral is accumulated outward from the median, so
    vanishing density at the far end of the grid never contaminates inner points.
    """
    if side not in ("plus", "minus"):
        raise DomainError("side", side, "side must be 'plus' or 'minus'")
    grid = dist.x
    eta = dist.median
    density = dist.probability_density

    if side == "plus":
        mask = grid > eta
        xs = np.concatenate([[eta], grid[mask]])
        tails = 1.0 - np.concatenate([[0.5], dist.cdf[mask]])
    else:
        mask = grid < eta
        xs = np.concatenate([[eta], grid[mask][::-1]])
        tails = np.concatenate([[0.5], dist.cdf[mask][::-1]])
    if xs.size < 2:
        return SupremandCurve(xs, np.zeros_like(xs), 0.0, eta)

    p = np.interp(xs, grid, density)
    with np.errstate(divide="ignore"):
        inverse = np.where(p > 0, 1.0 / np.where(p > 0, p, 1.0), INF)
    distances = np.abs(np.diff(xs))
    steps = 0.5 * (inverse[1:] + inverse[:-1]) * distances
    hardy = np.concatenate([[0.0], np.cumsum(steps)])

    tails = np.clip(tails, 0.0, 1.0)
    factor = _tail_factor(tails, logarithmic)
    with np.errstate(invalid="ignore"):
        values = np.where(factor > 0, factor * hardy, 0.0)

    best = int(np.argmax(values))
    supremum = float(values[best])
    argmax = float(xs[best])
    if refine and math.isfinite(supremum) and 0 < best < xs.size - 1:
        supremum, argmax = _refine(dist, xs, hardy, side, logarithmic, best, supremum, argmax)
    return SupremandCurve(xs, values, supremum, argmax)


def _refine(dist: DistributionCache, xs: np.ndarray, hardy: np.ndarray, side: str,
            logarithmic: bool, best: int, supremum: float, argmax: float) -> Tuple[float, float]:
    order = np.argsort(xs)
    sorted_x, sorted_hardy = xs[order], hardy[order]

    def negative(x: float) -> float:
        cdf = float(dist.cdf_at(np.array([x]))[0])
        tail = np.array([1.0 - cdf if side == "plus" else cdf])
        factor = float(_tail_factor(tail, logarithmic)[0])
        return -factor * float(np.interp(x, sorted_x, sorted_hardy))

    low, high = sorted((float(xs[best - 1]), float(xs[best + 1])))
    outcome = optimize.minimize_scalar(negative, bounds=(low, high), method="bounded",
                                       options={"xatol": 1e-12 * max(1.0, abs(argmax))})
    if outcome.success and -outcome.fun > supremum:
        return float(-outcome.fun), float(outcome.x)
    return supremum, argmax


def _hardy_sides(dist: DistributionCache, logarithmic: bool, refine: bool) -> Tuple[float, float]:
    minus = supremand_curve(dist, "minus", logarithmic, refine)
    plus = supremand_curve(dist, "plus", logarithmic, refine)
    return minus.supremum, plus.supremum


def muckenhoupt_estimate(dist: DistributionCache,
                         config: Optional[EstimatorConfig] = None) -> TwoSidedEstimate:
    """
    Muckenhoupt bracket for the Poincare constant

    Args:
        dist: Distribution of the measure
        config: Estimator settings (bracket factor and refinement)

    Returns:
        TwoSidedEstimate: lower = 1/(4B), upper = 4/B with B = B- + B+
    """
    config = config or EstimatorConfig()
    b_minus, b_plus = _hardy_sides(dist, logarithmic=False, refine=config.refine)
    factor = config.muckenhoupt_constant
    total = b_minus + b_plus
    lower, upper = _bracket(total, factor)
    return TwoSidedEstimate(b_minus, b_plus, lower, upper, "muckenhoupt", {"C_M": factor})


def bobkov_gotze_estimate(dist: DistributionCache,
                          config: Optional[EstimatorConfig] = None) -> TwoSidedEstimate:
    """Bobkov-Goetze bracket for the log-Sobolev constant with factor C_BG."""
    config = config or EstimatorConfig()
    logger.info("Bobkov-Goetze bracket factor C_BG = %g", config.bg_constant)
    b_minus, b_plus = _hardy_sides(dist, logarithmic=True, refine=config.refine)
    total = b_minus + b_plus
    lower, upper = _bracket(total, config.bg_constant)
    return TwoSidedEstimate(b_minus, b_plus, lower, upper, "bobkov_gotze", {"C_BG": config.bg_constant})


def _bracket(total: float, factor: float) -> Tuple[float, float]:
    if math.isinf(total) or math.isnan(total):
        return 0.0, 0.0
    if total <= 0:
        return 0.0, INF
    return 1.0 / (factor * total), factor / total


@dataclass
class BGScan:
    """Bobkov-Goetze B+ of a nominally infinite density over growing truncations."""
    radii: List[float]
    b_plus: List[float]
    growth: float
    diverging: bool
    lower: float

    def to_dict(self) -> Dict[str, Any]:
        return {"radii": list(self.radii), "b_plus": list(self.b_plus), "growth": self.growth,
                "diverging": self.diverging, "lower": self.lower}


def bg_divergence_scan(density_factory: Callable[[float], GridDensity], radii: Optional[Sequence[float]] = None,
                       config: Optional[EstimatorConfig] = None,
                       growth_threshold: float = DIVERGENCE_GROWTH) -> BGScan:
    """
    Detect a diverging Bobkov-Goetze supremum

    Args:
        density_factory: Maps a truncation radius to the truncated sampled density
        radii: Increasing truncation radii (at least two); defaults to halvings of
            the exponential truncation radius, R/8, R/4, R/2, R
        growth_threshold: Ratio of the last to the first B+ treated as divergence

    Returns:
        BGScan: lower = 0 when the scan diverges
    """
    config = config or EstimatorConfig()
    if radii is None:
        radii = [config.exponential_radius / 2.0 ** k for k in (3, 2, 1, 0)]
    radii = [float(r) for r in radii]
    if len(radii) < 2 or any(b <= a for a, b in zip(radii, radii[1:])):
        raise DomainError("radii", radii, "Need at least two increasing truncation radii")

    values = []
    for radius in radii:
        dist = build_distribution(density_factory(radius))
        values.append(supremand_curve(dist, "plus", logarithmic=True, refine=config.refine).supremum)
        logger.debug("BG scan radius %g: B+ = %.6g", radius, values[-1])

    growth = values[-1] / values[0] if values[0] > 0 else INF
    diverging = growth > growth_threshold
    lower = 0.0 if diverging or values[-1] <= 0 else 1.0 / (config.bg_constant * values[-1])
    if diverging:
        logger.warning("Bobkov-Goetze supremum grows by %.3g across truncations; no log-Sobolev inequality", growth)
    return BGScan(radii, values, growth, diverging, lower)
