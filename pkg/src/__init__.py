"""
curvature-bounds: sharp Poincare, p-Poincare and log-Sobolev lower bounds
under CDD(K, N, D) for every real dimension N.
"""

__version__ = "1.0.0"
