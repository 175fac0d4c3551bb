"""
Model densities J_{K,N,h}

Evaluation of the one-dimensional model densities solving
-LogHess_{N-1} J = K with J(0) = 1 and J'(0) = h:
- Values and log-values on their support (vectorized)
- Logarithmic derivative (log J)' used by the shooting solvers
- Support interval and the shift/scale canonical form
- Sampling onto a uniform grid

For finite N the density is (co_delta(x) + h/(N-1) si_delta(x))_+^{N-1}; for
N = INF it is exp(h x - K x^2/2). Values outside the closed support are 0;
at a support endpoint the value is 0 for N > 1 and INF for N <= 0.
"""

import logging
import math
from typing import Tuple, Union

import numpy as np

from ..core.exceptions import DomainError, InsufficientDataError
from ..means.dimension import INF, CurvatureDimension
from .models import CanonicalForm, GridDensity, ModelMeasure, ProfileCase

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]
UNIT_SLOPE_TOL = 1e-12      # |c| this close to 1 is the exponential case
ENDPOINT_CLEARANCE = 1e-9   # sampling keeps this far from blow-up endpoints


def _slope(cd: CurvatureDimension, h: float) -> float:
    """h/((N-1) sqrt|delta|) for delta != 0, h/(N-1) for delta = 0."""
    delta = cd.delta()
    scale = math.sqrt(abs(delta)) if delta != 0 else 1.0
    return h / ((cd.N - 1.0) * scale)


def model_support(cd: CurvatureDimension, h: float) -> Tuple[float, float]:
    """Maximal open interval containing 0 on which J_{K,N,h} is positive and finite."""
    if cd.infinite:
        return (-INF, INF)

    delta = cd.delta()
    c = _slope(cd, h)
    if delta > 0:
        root = math.sqrt(delta)
        phase = math.atan(c)
        return ((phase - math.pi / 2) / root, (phase + math.pi / 2) / root)
    if delta == 0:
        if c > 0:
            return (-1.0 / c, INF)
        if c < 0:
            return (-INF, -1.0 / c)
        return (-INF, INF)

    root = math.sqrt(-delta)
    if abs(c) <= 1.0 + UNIT_SLOPE_TOL:
        return (-INF, INF)
    zero = math.atanh(-1.0 / c) / root
    if c > 1:
        return (zero, INF)
    return (-INF, zero)


def _log_base(cd: CurvatureDimension, h: float, x: np.ndarray) -> np.ndarray:
    """log of co_delta(x) + h/(N-1) si_delta(x); -inf where it is not positive."""
    delta = cd.delta()
    c = _slope(cd, h)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if delta > 0:
            y = math.sqrt(delta) * x - math.atan(c)
            cosine = np.where(np.abs(y) < math.pi / 2, np.cos(y), 0.0)
            return np.where(cosine > 0, 0.5 * math.log1p(c * c) + np.log(cosine), -np.inf)
        if delta == 0:
            inner = c * x
            return np.where(inner > -1.0, np.log1p(inner), -np.inf)
        u = math.sqrt(-delta) * x
        s = np.sign(u)
        inner = (1.0 + c * s) + (1.0 - c * s) * np.exp(-2.0 * np.abs(u))
        return np.where(inner > 0, np.abs(u) - math.log(2.0) + np.log(inner), -np.inf)


def model_log_density(cd: CurvatureDimension, h: float, x: ArrayLike) -> ArrayLike:
    """log J_{K,N,h}(x); -inf outside the closed support."""
    points = np.asarray(x, dtype=float)
    if cd.infinite:
        result = h * points - cd.K * points ** 2 / 2.0
    else:
        low, high = model_support(cd, h)
        with np.errstate(invalid="ignore"):
            result = (cd.N - 1.0) * _log_base(cd, h, points)
        result = np.where((points < low) | (points > high), -np.inf, result)
    if np.ndim(x) == 0:
        return float(result)
    return result


def model_density_value(cd: CurvatureDimension, h: float, x: ArrayLike) -> ArrayLike:
    """J_{K,N,h}(x) as an extended non-negative value."""
    with np.errstate(over="ignore"):
        values = np.exp(np.asarray(model_log_density(cd, h, x), dtype=float))
    if np.ndim(x) == 0:
        return float(values)
    return values


def model_log_derivative(cd: CurvatureDimension, h: float, x: ArrayLike) -> ArrayLike:
    """(log J)'(x) in closed form; meaningful on the open support only."""
    points = np.asarray(x, dtype=float)
    if cd.infinite:
        result = h - cd.K * points
    else:
        delta = cd.delta()
        c = _slope(cd, h)
        with np.errstate(divide="ignore", invalid="ignore"):
            if delta > 0:
                root = math.sqrt(delta)
                result = -(cd.N - 1.0) * root * np.tan(root * points - math.atan(c))
            elif delta == 0:
                result = h / (1.0 + c * points)
            else:
                root = math.sqrt(-delta)
                slope = np.tanh(root * points)
                result = (cd.N - 1.0) * root * (slope + c) / (1.0 + c * slope)
    if np.ndim(x) == 0:
        return float(result)
    return result


def model_potential(cd: CurvatureDimension, h: float, x: ArrayLike) -> ArrayLike:
    """T(x) = -(log J)'(x), the drift of the Prufer phase equation."""
    derivative = model_log_derivative(cd, h, x)
    if np.ndim(x) == 0:
        return -float(derivative)
    return -np.asarray(derivative)


def canonical_form(cd: CurvatureDimension, h: float) -> CanonicalForm:
    """Case tag, shift and scale with J_{K,N,h}(x) = g * Y(x + s) in profile units."""
    if cd.infinite:
        if cd.K == 0:
            return CanonicalForm(ProfileCase.LINEAR_EXPONENTIAL, 0.0, 1.0, 1, cd, h)
        return CanonicalForm(ProfileCase.GAUSSIAN, -h / cd.K, math.exp(h * h / (2.0 * cd.K)), 1, cd, h)

    delta = cd.delta()
    power = cd.N - 1.0
    c = _slope(cd, h)
    if delta > 0:
        shift = -math.atan(c)
        return CanonicalForm(ProfileCase.TRIGONOMETRIC, shift, math.cos(shift) ** (-power), 1, cd, h)

    if delta == 0:
        if h == 0:
            return CanonicalForm(ProfileCase.UNIFORM, 0.0, 1.0, 1, cd, h)
        orientation = 1 if c > 0 else -1
        return CanonicalForm(ProfileCase.POWER, 1.0 / c, abs(c) ** power, orientation, cd, h)

    orientation = 1 if c >= 0 else -1
    if abs(abs(c) - 1.0) <= UNIT_SLOPE_TOL:
        return CanonicalForm(ProfileCase.EXPONENTIAL, 0.0, 1.0, orientation, cd, h)
    if abs(c) < 1.0:
        shift = math.atanh(c)
        return CanonicalForm(ProfileCase.HYPERBOLIC_COSH, shift, math.cosh(shift) ** (-power), 1, cd, h)
    shift = math.atanh(1.0 / c)
    return CanonicalForm(ProfileCase.HYPERBOLIC_SINH, shift, abs(math.sinh(shift)) ** (-power), orientation, cd, h)


def sample_density(measure: ModelMeasure, n_points: int) -> GridDensity:
    """
    Sample a model measure on a uniform grid

    Args:
        measure: Model measure with a finite interval
        n_points: Number of grid points (at least 3)

    Returns:
        GridDensity: Exact model values at a + i*(b-a)/(n_points-1)
    """
    if n_points < 3:
        raise InsufficientDataError("grid samples", minimum_required=3)
    a, b = measure.interval
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(
            "interval", (a, b),
            "Cannot sample an infinite interval; use exhaustion for unbounded supports",
        )

    cd = measure.cd
    if not cd.infinite and cd.N <= 0:
        low, high = measure.support()
        near_low = math.isfinite(low) and a - low < ENDPOINT_CLEARANCE
        near_high = math.isfinite(high) and high - b < ENDPOINT_CLEARANCE
        if near_low or near_high:
            raise DomainError(
                "interval", (a, b),
                f"Interval [{a}, {b}] reaches a blow-up endpoint of the support ({low}, {high})",
            )

    x = np.linspace(a, b, n_points)
    values = np.asarray(model_density_value(cd, measure.h, x), dtype=float)
    flags = []
    if values[0] == 0.0 or values[-1] == 0.0:
        flags.append("vanishing_endpoint")
    logger.debug("sampled %s h=%g on [%g, %g] with %d points", cd, measure.h, a, b, n_points)
    return GridDensity(x0=a, dx=(b - a) / (n_points - 1), values=values, flags=tuple(flags))
