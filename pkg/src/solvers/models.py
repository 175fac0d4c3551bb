"""
Solver Result Models

- EigenResult: first nonzero Neumann eigenvalue with diagnostics
- ExhaustionResult: limit of eigenvalues along an exhausting sequence
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..density.models import GridDensity, json_extended


@dataclass(frozen=True)
class EigenResult:
    """First nonzero Neumann eigenvalue of the weighted (p-)Laplacian."""
    eigenvalue: float
    phase_residual: float
    eigenfunction: GridDensity
    iterations: int
    p: float = 2.0
    alpha: float = 0.0
    rayleigh: Optional[float] = None
    ode_method: str = "DOP853"

    @property
    def interval(self) -> Tuple[float, float]:
        return self.eigenfunction.interval

    def to_dict(self, include_eigenfunction: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "lambda": self.eigenvalue,
            "residual": self.phase_residual,
            "iterations": self.iterations,
            "p": self.p,
            "rayleigh": self.rayleigh,
            "ode_method": self.ode_method,
        }
        if include_eigenfunction:
            data["eigenfunction"] = self.eigenfunction.to_dict()
        return data


@dataclass(frozen=True)
class ExhaustionResult:
    """Limit of eigenvalues over a monotone exhausting sequence of intervals."""
    value: float
    converged: bool
    zero_limit: bool
    levels: List[Tuple[float, float]] = field(default_factory=list)   # (level parameter, eigenvalue)
    extrapolants: List[float] = field(default_factory=list)
    interval: Tuple[float, float] = (0.0, 0.0)
    note: str = ""

    @property
    def iterations(self) -> int:
        return len(self.levels)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "converged": self.converged,
            "zero_limit": self.zero_limit,
            "levels": [{"parameter": json_extended(s), "lambda": v} for s, v in self.levels],
            "extrapolants": list(self.extrapolants),
            "interval": [json_extended(self.interval[0]), json_extended(self.interval[1])],
            "note": self.note,
        }
