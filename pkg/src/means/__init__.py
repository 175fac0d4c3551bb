"""
Distortion coefficients, distorted means and the (K, N) parameter pair.
"""

from .dimension import INF, CurvatureDimension, is_inf, parse_extended
from .kernel import classical_mean, distorted_mean_M, distorted_mean_Mtilde, sigma, tau

__all__ = [
    "INF",
    "CurvatureDimension",
    "is_inf",
    "parse_extended",
    "sigma",
    "tau",
    "distorted_mean_M",
    "distorted_mean_Mtilde",
    "classical_mean",
]
