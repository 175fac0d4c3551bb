"""
Core infrastructure shared by all subpackages: exceptions and run configuration.
"""

from .config import RunConfig
from .exceptions import (
    CurvatureBoundsError,
    DomainError,
    ExhaustionError,
    FileOperationError,
    GridMismatchError,
    InsufficientDataError,
    ProvisoError,
    SolverError,
    UnsupportedRangeError,
)

__all__ = [
    "RunConfig",
    "CurvatureBoundsError",
    "DomainError",
    "ExhaustionError",
    "FileOperationError",
    "GridMismatchError",
    "InsufficientDataError",
    "ProvisoError",
    "SolverError",
    "UnsupportedRangeError",
]
