"""
Model densities, sampled densities and curvature-dimension checkers.
"""

from .checkers import CDReport, cd_differential_check, cd_midpoint_check
from .model_density import (
    canonical_form,
    model_density_value,
    model_log_density,
    model_log_derivative,
    model_potential,
    model_support,
    sample_density,
)
from .models import CanonicalForm, GridDensity, ModelMeasure, ProfileCase

__all__ = [
    "CDReport",
    "cd_differential_check",
    "cd_midpoint_check",
    "canonical_form",
    "model_density_value",
    "model_log_density",
    "model_log_derivative",
    "model_potential",
    "model_support",
    "sample_density",
    "CanonicalForm",
    "GridDensity",
    "ModelMeasure",
    "ProfileCase",
]
