"""
Two-sided estimators for Poincare and log-Sobolev constants of 1-D measures.
"""

from .distribution import DistributionCache, build_distribution
from .hardy import (
    BGScan,
    SupremandCurve,
    TwoSidedEstimate,
    bg_divergence_scan,
    bobkov_gotze_estimate,
    muckenhoupt_estimate,
    supremand_curve,
)
from .integral_estimates import (
    IntegralBracket,
    integral_estimate_exp_square,
    integral_estimate_gaussian,
    integral_estimate_segment,
)
from .isoperimetry import cheeger_constant, cheeger_p_poincare_lower, isoperimetric_profile_flat, ledoux_constant
from .log_sobolev import ClosedFormBound, Exactness, ls_bound_closed, ls_upsilon0, ls_upsilon0_regime

__all__ = [
    "DistributionCache",
    "build_distribution",
    "BGScan",
    "SupremandCurve",
    "TwoSidedEstimate",
    "bg_divergence_scan",
    "bobkov_gotze_estimate",
    "muckenhoupt_estimate",
    "supremand_curve",
    "IntegralBracket",
    "integral_estimate_exp_square",
    "integral_estimate_gaussian",
    "integral_estimate_segment",
    "cheeger_constant",
    "cheeger_p_poincare_lower",
    "isoperimetric_profile_flat",
    "ledoux_constant",
    "ClosedFormBound",
    "Exactness",
    "ls_bound_closed",
    "ls_upsilon0",
    "ls_upsilon0_regime",
]
