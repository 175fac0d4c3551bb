"""
Sharp lower bounds, classical reference bounds and monotonicity sweeps.
"""

from .dispatcher import (
    BoundDispatcher,
    anomalous_limit,
    compute_bound,
    log_sobolev_bound,
    p_poincare_bound,
    poincare_bound,
)
from .models import BoundRequest, BoundResult, Inequality, LimitResult, Method
from .reference import ReferenceBound, reference_bounds
from .sweeps import MonotonicitySweeper, Regime, SweepResult, Verdict, diameter_sweep, h_regime, monotonicity_sweep

__all__ = [
    "BoundDispatcher",
    "anomalous_limit",
    "compute_bound",
    "log_sobolev_bound",
    "p_poincare_bound",
    "poincare_bound",
    "BoundRequest",
    "BoundResult",
    "Inequality",
    "LimitResult",
    "Method",
    "ReferenceBound",
    "reference_bounds",
    "MonotonicitySweeper",
    "Regime",
    "SweepResult",
    "Verdict",
    "diameter_sweep",
    "h_regime",
    "monotonicity_sweep",
]
