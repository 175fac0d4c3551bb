"""
Sturm-Liouville Solver

First nonzero Neumann eigenvalue of (J f')' = -lambda J f on [a, b], i.e. the
Poincare constant of the measure J dx restricted to [a, b].

- sl_first_eigenvalue: regular problems (finite interval, positive weight)
- eigenvalue_boundary_derivative: d lambda / d(endpoint) = -u(end)^2 lambda J(end)
- rayleigh_quotient: upper-bound check for any test function
"""

import logging
from typing import Optional

import numpy as np

from ..core.config import SolverConfig
from ..core.exceptions import DomainError
from .models import EigenResult
from .prufer import solve_eigenproblem
from .rayleigh import rayleigh_quotient
from .weights import Measure, as_weight

logger = logging.getLogger(__name__)

SIDES = ("left", "right")


def sl_first_eigenvalue(measure: Measure, tol: float = 1e-8,
                        config: Optional[SolverConfig] = None) -> EigenResult:
    """
    Solve the regular Neumann problem by phase shooting

    Args:
        measure: ModelMeasure on a finite interval inside the support, or a GridDensity
        tol: Relative tolerance on the eigenvalue
        config: Solver settings

    Returns:
        EigenResult: eigenvalue, normalized eigenfunction and diagnostics
    """
    if not tol > 0:
        raise DomainError("tol", tol, f"Tolerance must be positive, got {tol}")
    return solve_eigenproblem(measure, 2.0, tol, config)


def eigenvalue_boundary_derivative(measure: Measure, side: str = "right", tol: float = 1e-11,
                                   config: Optional[SolverConfig] = None) -> float:
    """Derivative of lambda_1 when the named endpoint moves outward."""
    if side not in SIDES:
        raise DomainError("side", side, f"side must be one of {SIDES}")
    result = sl_first_eigenvalue(measure, tol, config)
    values = result.eigenfunction.values
    end = result.interval[1] if side == "right" else result.interval[0]
    u_end = float(values[-1] if side == "right" else values[0])
    weight_end = float(as_weight(measure).density(np.array([end]))[0])
    derivative = -u_end * u_end * result.eigenvalue * weight_end
    logger.debug("boundary derivative at %s end %g: %.10g", side, end, derivative)
    return derivative


__all__ = ["sl_first_eigenvalue", "eigenvalue_boundary_derivative", "rayleigh_quotient"]
