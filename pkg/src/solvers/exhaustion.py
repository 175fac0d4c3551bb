"""
Monotone exhaustion for singular and infinite intervals

Eigenvalues on intervals whose endpoints touch the support boundary (where
the density vanishes or blows up) or lie at infinity are limits over a
monotone exhausting sequence of compact regular subintervals:
- singular ends retreat by epsilon_n = epsilon_0 * 2^-n
- infinite ends advance to +-R_n with R_n = R_0 * 2^n
- the limit is Aitken-extrapolated from the last three levels

A limit below zero_floor times the first level value is reported as 0.
"""

import logging
import math
from dataclasses import replace
from typing import Callable, List, Optional, Tuple

from ..core.config import RunConfig
from ..core.exceptions import ExhaustionError
from ..density.models import ModelMeasure
from ..means.dimension import CurvatureDimension
from .models import ExhaustionResult
from .prufer import solve_eigenproblem

logger = logging.getLogger(__name__)

LevelFunction = Callable[[int], Tuple[float, float]]


def aitken(x0: float, x1: float, x2: float) -> float:
    """Aitken delta-squared extrapolation of three successive terms."""
    d1 = x1 - x0
    d2 = x2 - x1
    denominator = d2 - d1
    if denominator == 0.0 or abs(d2) <= 1e-15 * max(abs(x2), 1e-300):
        return x2
    return x2 - d2 * d2 / denominator


def _clamped(extrapolant: float, values: List[float]) -> float:
    """Keep the extrapolant on the side the sequence is moving towards."""
    last, previous = values[-1], values[-2]
    if last <= previous:
        return min(max(extrapolant, 0.0), last)
    return max(extrapolant, last)


def extrapolate_limit(
    evaluate: LevelFunction,
    config: Optional[RunConfig] = None,
    label: str = "exhaustion",
) -> ExhaustionResult:
    """
    Drive a level sequence to its limit

    Args:
        evaluate: Maps level n to (level parameter, value)
        config: Run configuration (exhaustion section is used)
        label: Name used in logs and errors

    Returns:
        ExhaustionResult: Extrapolated limit with the level trace
    """
    settings = (config or RunConfig()).exhaustion
    levels: List[Tuple[float, float]] = []
    values: List[float] = []
    extrapolants: List[float] = []

    for n in range(settings.max_levels):
        parameter, value = evaluate(n)
        levels.append((parameter, value))
        values.append(value)
        logger.debug("%s level %d: parameter=%g value=%.12g", label, n, parameter, value)

        floor = settings.zero_floor * values[0]
        if value <= floor:
            return ExhaustionResult(0.0, True, True, levels, extrapolants, note="level value below zero floor")
        if len(values) < 3:
            continue

        estimate = _clamped(aitken(*values[-3:]), values)
        extrapolants.append(estimate)
        if estimate <= floor:
            return ExhaustionResult(0.0, True, True, levels, extrapolants, note="extrapolated limit below zero floor")

        if len(values) >= settings.min_levels and len(extrapolants) >= 2:
            change = abs(extrapolants[-1] - extrapolants[-2])
            if change <= settings.rel_tol * max(abs(estimate), floor):
                return ExhaustionResult(estimate, True, False, levels, extrapolants)

    raise ExhaustionError(
        f"{label} did not settle within {settings.max_levels} levels",
        levels=values,
    )


def level_interval(measure: ModelMeasure, n: int, config: RunConfig) -> Tuple[float, float]:
    """Compact regular subinterval of level n."""
    settings = config.exhaustion
    a, b = measure.interval
    kinds = measure.endpoint_kinds()
    width = b - a
    offset = settings.initial_offset
    if math.isfinite(width):
        offset = min(offset, width / 4.0)
    offset *= 2.0 ** (-n)
    radius = settings.initial_radius * 2.0 ** n

    left = a + offset if kinds[0] == "singular" else a
    right = b - offset if kinds[1] == "singular" else b
    if kinds[0] == "infinite" and kinds[1] == "infinite":
        return (-radius, radius)
    if kinds[0] == "infinite":
        return (right - radius, right)
    if kinds[1] == "infinite":
        return (left, left + radius)
    return (left, right)


def exhaust_interval(
    cd: CurvatureDimension,
    h: float,
    interval: Tuple[float, float],
    p: float = 2.0,
    config: Optional[RunConfig] = None,
    tol: Optional[float] = None,
) -> ExhaustionResult:
    """First nonzero Neumann eigenvalue of J_{K,N,h} on a possibly singular or infinite interval."""
    config = config or RunConfig()
    measure = ModelMeasure(cd, h, interval[0], interval[1])
    level_tol = min(config.solver.rel_tol, (tol or config.exhaustion.rel_tol) * 1e-3)

    if measure.is_regular():
        result = solve_eigenproblem(measure, p, level_tol, config.solver)
        return ExhaustionResult(result.eigenvalue, True, False, [(0.0, result.eigenvalue)], [],
                                interval=measure.interval, note="regular interval")

    def evaluate(n: int) -> Tuple[float, float]:
        left, right = level_interval(measure, n, config)
        level = measure.restricted(left, right)
        return float(n), solve_eigenproblem(level, p, level_tol, config.solver).eigenvalue

    if tol is not None and tol != config.exhaustion.rel_tol:
        config = _with_exhaustion_tol(config, tol)
    result = extrapolate_limit(evaluate, config, label=f"exhaustion of {cd} h={h:g}")
    return ExhaustionResult(result.value, result.converged, result.zero_limit, result.levels,
                            result.extrapolants, interval=measure.interval, note=result.note)


def _with_exhaustion_tol(config: RunConfig, tol: float) -> RunConfig:
    return replace(config, exhaustion=replace(config.exhaustion, rel_tol=tol))


def sl_eigenvalue_exhaustion(
    cd: CurvatureDimension,
    h: float,
    interval: Tuple[float, float],
    tol: Optional[float] = None,
    config: Optional[RunConfig] = None,
) -> ExhaustionResult:
    """
    Poincare constant of J_{K,N,h} restricted to a singular or infinite interval

    Args:
        cd: Curvature-dimension pair
        h: Model parameter h = J'(0)
        interval: (a, b); ends may sit on the support boundary or be infinite
        tol: Relative tolerance between successive extrapolants

    Returns:
        ExhaustionResult: ``value`` is the limit; ``zero_limit`` flags a vanishing limit
    """
    return exhaust_interval(cd, h, interval, p=2.0, config=config, tol=tol)
