"""
Rayleigh quotients of sampled functions

Ray_p[f] = int |f'|^p J / int |f - c|^p J, where c is the unique constant
with int (f - c)^{(p-1)} J = 0 (the mean for p = 2). Any admissible f gives
an upper bound for the first nonzero Neumann eigenvalue.
"""

from typing import Optional, Union

import numpy as np
from scipy import integrate, optimize

from ..core.exceptions import DomainError
from ..density.models import GridDensity, ModelMeasure
from ..means.dimension import INF
from .weights import as_weight

DEGENERATE_RTOL = 1e-12


def _integral(values: np.ndarray, x: np.ndarray) -> float:
    return float(integrate.simpson(values, x=x))


def centering_constant(f: np.ndarray, weights: np.ndarray, x: np.ndarray, p: float) -> float:
    """Constant c with int |f-c|^{p-2}(f-c) J = 0."""
    if p == 2.0:
        return _integral(f * weights, x) / _integral(weights, x)

    def moment(c: float) -> float:
        shifted = f - c
        return _integral(np.sign(shifted) * np.abs(shifted) ** (p - 1.0) * weights, x)

    low, high = float(np.min(f)), float(np.max(f))
    if high - low <= DEGENERATE_RTOL * max(1.0, abs(high)):
        return low
    return float(optimize.brentq(moment, low, high, xtol=1e-14 * max(1.0, high - low)))


def quotient_from_samples(
    x: np.ndarray, f: np.ndarray, derivative: np.ndarray, weights: np.ndarray, p: float = 2.0
) -> float:
    """Quotient from samples of f, f' and J on a common grid."""
    c = centering_constant(f, weights, x, p)
    denominator = _integral(np.abs(f - c) ** p * weights, x)
    scale = _integral(np.abs(f) ** p * weights, x) + _integral(weights, x) * abs(c) ** p
    if denominator <= DEGENERATE_RTOL * max(scale, np.finfo(float).tiny):
        return INF
    return _integral(np.abs(derivative) ** p * weights, x) / denominator


def rayleigh_quotient(
    f: GridDensity,
    measure: Union[ModelMeasure, GridDensity],
    p: float = 2.0,
    derivative: Optional[np.ndarray] = None,
) -> float:
    """
    Rayleigh quotient of a sampled test function against a measure

    Args:
        f: Sampled test function (signed values allowed)
        measure: Model measure on the same interval, or a density on the same grid
        p: Exponent of the energy (2 for the Poincare quotient)
        derivative: Optional exact samples of f'; finite differences otherwise

    Returns:
        float: The quotient after centering; INF when f is constant
    """
    if not p > 1:
        raise DomainError("p", p, f"p must be greater than 1, got {p}")
    if isinstance(measure, GridDensity):
        f.require_same_grid(measure)
        weights = np.asarray(measure.values, dtype=float)
    else:
        a, b = measure.interval
        reference = GridDensity(x0=a, dx=(b - a) / (f.n_points - 1), values=np.ones(f.n_points))
        f.require_same_grid(reference)
        weights = as_weight(measure).density(f.x)

    x = f.x
    values = np.asarray(f.values, dtype=float)
    if derivative is None:
        derivative = np.gradient(values, f.dx, edge_order=2)
    return quotient_from_samples(x, values, np.asarray(derivative, dtype=float), weights, p)
