"""
Weight adapters for the shooting solvers

The Prufer phase equation needs the drift T(x) = -(log J)'(x) and, for
eigenfunction normalization, J(x) itself. Model measures supply both in
closed form; sampled densities are interpolated with a monotone cubic
(PCHIP) interpolant of log J.
"""

import math
from typing import Tuple, Union

import numpy as np
from scipy.interpolate import PchipInterpolator

from ..core.exceptions import DomainError
from ..density.model_density import model_log_density, model_potential
from ..density.models import GridDensity, ModelMeasure

Measure = Union[ModelMeasure, GridDensity]


class Weight:
    """Positive weight J on a finite interval [a, b]."""

    def __init__(self, a: float, b: float, label: str):
        self.a = a
        self.b = b
        self.label = label

    @property
    def interval(self) -> Tuple[float, float]:
        return (self.a, self.b)

    def log_density(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def potential(self, x: float) -> float:
        raise NotImplementedError

    def density(self, x: np.ndarray) -> np.ndarray:
        return np.exp(self.log_density(x))


class ModelWeight(Weight):
    """Closed-form weight of a regular model measure."""

    def __init__(self, measure: ModelMeasure):
        a, b = measure.interval
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError("interval", (a, b), "The shooting solver needs a finite interval; use exhaustion")
        super().__init__(a, b, f"J[{measure.cd}, h={measure.h:g}] on [{a:g}, {b:g}]")
        self.measure = measure
        ends = np.asarray(model_log_density(measure.cd, measure.h, np.array([a, b])))
        if not np.all(np.isfinite(ends)):
            raise DomainError(
                "interval", (a, b),
                "Weight vanishes or blows up at an endpoint; the interval must lie inside the support",
            )

    def log_density(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(model_log_density(self.measure.cd, self.measure.h, x))

    def potential(self, x: float) -> float:
        return float(model_potential(self.measure.cd, self.measure.h, x))


class GridWeight(Weight):
    """Monotone cubic interpolation of a sampled density."""

    def __init__(self, density: GridDensity):
        if np.any(density.values <= 0):
            index = int(np.argmax(density.values <= 0))
            raise DomainError(
                "density", float(density.values[index]),
                f"Weight must be strictly positive on [a, b]; vanishes at x={density.x[index]:.6g}",
            )
        super().__init__(density.x0, density.x_end, f"grid density on [{density.x0:g}, {density.x_end:g}]")
        self.grid = density
        self._log = PchipInterpolator(density.x, np.log(density.values), extrapolate=True)
        self._slope = self._log.derivative()

    def log_density(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(self._log(x))

    def potential(self, x: float) -> float:
        return -float(self._slope(x))


def as_weight(measure: Measure) -> Weight:
    """Wrap a model measure or sampled density for the solvers."""
    if isinstance(measure, ModelMeasure):
        return ModelWeight(measure)
    if isinstance(measure, GridDensity):
        return GridWeight(measure)
    raise DomainError("measure", type(measure).__name__, "Expected a ModelMeasure or GridDensity")
