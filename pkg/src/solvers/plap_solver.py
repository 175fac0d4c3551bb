"""
Weighted p-Laplacian Solver

First nonzero Neumann eigenvalue of (J f'^{(p-1)})' + lambda J f^{(p-1)} = 0,
where f^{(q)} = |f|^{q-1} f. The p-trigonometric phase is shot on the
parameter alpha and lambda = (p-1) alpha^p. The phase must increase along the
eigenfunction; a decreasing phase is reported as a solver error.
"""

from typing import Optional, Tuple

from ..core.config import RunConfig, SolverConfig
from ..core.exceptions import DomainError
from ..means.dimension import CurvatureDimension
from .exhaustion import exhaust_interval
from .models import EigenResult, ExhaustionResult
from .prufer import solve_eigenproblem
from .ptrig import cos_p, pi_p, sin_p
from .weights import Measure


def plap_first_eigenvalue(measure: Measure, p: float, tol: float = 1e-8,
                          config: Optional[SolverConfig] = None) -> EigenResult:
    """
    Solve the regular Neumann p-Laplacian problem

    Args:
        measure: ModelMeasure on a finite interval inside the support, or a GridDensity
        p: Exponent in (1, inf)
        tol: Relative tolerance on the eigenvalue
        config: Solver settings

    Returns:
        EigenResult: eigenvalue with the p-normalized eigenfunction (int |f|^p J = 1)
    """
    if not p > 1:
        raise DomainError("p", p, f"p must be greater than 1, got {p}")
    if not tol > 0:
        raise DomainError("tol", tol, f"Tolerance must be positive, got {tol}")
    return solve_eigenproblem(measure, float(p), tol, config)


def plap_eigenvalue_exhaustion(cd: CurvatureDimension, h: float, interval: Tuple[float, float],
                               p: float, tol: Optional[float] = None,
                               config: Optional[RunConfig] = None) -> ExhaustionResult:
    """p-Poincare constant of J_{K,N,h} on a singular or infinite interval."""
    if not p > 1:
        raise DomainError("p", p, f"p must be greater than 1, got {p}")
    return exhaust_interval(cd, h, interval, p=float(p), config=config, tol=tol)


__all__ = ["plap_first_eigenvalue", "plap_eigenvalue_exhaustion", "pi_p", "sin_p", "cos_p"]
