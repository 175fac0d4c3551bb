"""
Eigenvalue solvers for one-dimensional weighted Laplacians.
"""

from .exhaustion import aitken, exhaust_interval, extrapolate_limit, sl_eigenvalue_exhaustion
from .models import EigenResult, ExhaustionResult
from .plap_solver import plap_eigenvalue_exhaustion, plap_first_eigenvalue
from .ptrig import PTrig, cos_p, get_ptrig, pi_p, sin_p
from .rayleigh import centering_constant, rayleigh_quotient
from .sl_solver import eigenvalue_boundary_derivative, sl_first_eigenvalue
from .weights import GridWeight, ModelWeight, as_weight

__all__ = [
    "aitken",
    "exhaust_interval",
    "extrapolate_limit",
    "sl_eigenvalue_exhaustion",
    "EigenResult",
    "ExhaustionResult",
    "plap_eigenvalue_exhaustion",
    "plap_first_eigenvalue",
    "PTrig",
    "cos_p",
    "get_ptrig",
    "pi_p",
    "sin_p",
    "centering_constant",
    "rayleigh_quotient",
    "eigenvalue_boundary_derivative",
    "sl_first_eigenvalue",
    "GridWeight",
    "ModelWeight",
    "as_weight",
]
