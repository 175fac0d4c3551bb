"""
Curvature Bounds Exceptions

Custom exception classes for the bound computations.
Every error carries a stable error code; the command line maps the codes
to its exit statuses.
"""

from typing import Any, Dict, List, Optional


class CurvatureBoundsError(Exception):
    """Base exception class for all curvature-bound errors."""

    def __init__(self, message: str, error_code: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class DomainError(CurvatureBoundsError):
    """Raised when a parameter lies outside the admissible range."""

    def __init__(self, parameter: str, value: Any, message: Optional[str] = None):
        if not message:
            message = f"Invalid value for parameter '{parameter}': {value}"

        super().__init__(message, "DOMAIN_ERROR")
        self.parameter = parameter
        self.value = value


class ProvisoError(CurvatureBoundsError):
    """Raised when K<0, N<=0 and the diameter reaches l_delta."""

    def __init__(self, K: float, N: float, D: float, l_delta: float):
        message = (
            f"Diameter proviso violated for K={K}, N={N}: "
            f"D={D} must be smaller than l_delta={l_delta:.6f}"
        )
        super().__init__(message, "PROVISO_VIOLATION")
        self.K = K
        self.N = N
        self.D = D
        self.l_delta = l_delta


class UnsupportedRangeError(CurvatureBoundsError):
    """Raised for parameter ranges the model-measure method does not cover."""

    def __init__(self, parameter: str, value: Any, reason: str):
        message = f"Unsupported {parameter}={value}: {reason}"
        super().__init__(message, "UNSUPPORTED_RANGE")
        self.parameter = parameter
        self.value = value
        self.reason = reason


class SolverError(CurvatureBoundsError):
    """Raised when a numerical solve fails."""

    def __init__(
        self,
        solver: str,
        reason: str,
        diagnostics: Optional[Dict[str, Any]] = None,
        error_code: str = "SOLVER_ERROR",
    ):
        message = f"{solver} failed: {reason}"
        super().__init__(message, error_code)
        self.solver = solver
        self.reason = reason
        self.diagnostics = diagnostics or {}


class ExhaustionError(SolverError):
    """Raised when an exhausting sequence does not settle."""

    def __init__(self, reason: str, levels: Optional[List[float]] = None):
        levels = list(levels or [])
        super().__init__(
            "exhaustion",
            reason,
            diagnostics={"levels": levels},
            error_code="EXHAUSTION_ERROR",
        )
        self.levels = levels


class GridMismatchError(CurvatureBoundsError):
    """Raised when two sampled functions do not share a grid."""

    def __init__(self, expected: Any, actual: Any):
        message = f"Grid mismatch: expected {expected}, got {actual}"
        super().__init__(message, "GRID_MISMATCH")
        self.expected = expected
        self.actual = actual


class InsufficientDataError(CurvatureBoundsError):
    """Raised when a sampled density is too short or carries no mass."""

    def __init__(self, data_type: str, minimum_required: Optional[int] = None):
        message = f"Insufficient {data_type}"
        if minimum_required:
            message += f" (minimum required: {minimum_required})"

        super().__init__(message, "INSUFFICIENT_DATA")
        self.data_type = data_type
        self.minimum_required = minimum_required


class FileOperationError(CurvatureBoundsError):
    """Raised when file operations fail."""

    def __init__(self, operation: str, file_path: str, original_error: Optional[Exception] = None):
        message = f"Failed to {operation} file '{file_path}'"
        if original_error:
            message += f": {str(original_error)}"

        super().__init__(message, "FILE_OPERATION_ERROR")
        self.operation = operation
        self.file_path = file_path
        self.original_error = original_error
