"""
Bound Data Models

- Inequality / Method enums
- BoundRequest: (inequality, K, N, D, p) with admissibility checks
- BoundResult: sharp (or equivalent-up-to-constants) lower bound with diagnostics
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from ..core.exceptions import DomainError, ProvisoError, UnsupportedRangeError
from ..density.models import json_extended
from ..estimators.log_sobolev import Exactness
from ..means.dimension import CurvatureDimension, is_inf


class Inequality(Enum):
    """Functional inequality whose constant is bounded"""
    POINCARE = "poincare"
    P_POINCARE = "p_poincare"
    LOG_SOBOLEV = "log_sobolev"

    @classmethod
    def from_string(cls, value: str) -> "Inequality":
        normalized = value.strip().lower().replace("-", "_")
        for item in cls:
            if item.value == normalized:
                return item
        raise DomainError("inequality", value, f"Unknown inequality '{value}'; use poincare, p_poincare or log_sobolev")


class Method(Enum):
    """How a bound value was obtained"""
    CLOSED_FORM = "closed_form"
    SL_SOLVE = "sl_solve"
    SL_EXHAUSTION = "sl_exhaustion"
    PLAP_SOLVE = "plap_solve"
    BG_CLOSED = "bg_closed"


@dataclass(frozen=True)
class BoundRequest:
    """One bound query under CDD(K, N, D)."""
    inequality: Inequality
    K: float
    N: float
    D: float
    p: Optional[float] = None

    def __post_init__(self) -> None:
        if not self.D > 0:
            raise DomainError("D", self.D, f"Diameter must be positive, got {self.D}")
        if self.p is not None and not (self.p > 1 and math.isfinite(self.p)):
            raise DomainError("p", self.p, f"p must be a finite real greater than 1, got {self.p}")

    @property
    def cd(self) -> CurvatureDimension:
        return CurvatureDimension(self.K, self.N)

    @property
    def finite_diameter(self) -> bool:
        return not is_inf(self.D)

    def validate(self) -> None:
        """Raise on the first admissibility violation for this inequality."""
        cd = self.cd
        if self.inequality is Inequality.POINCARE:
            if 1 < self.N < 2:
                raise UnsupportedRangeError(
                    "N", self.N, "the sharp Poincare table is derived for N in (-inf, 0] and [2, inf]",
                )
        else:
            if self.N < 2:
                raise UnsupportedRangeError(
                    "N", self.N, f"{self.inequality.value} bounds are available for N in [2, inf] only",
                )
        if self.inequality is Inequality.P_POINCARE and self.p is None:
            raise DomainError("p", None, "p_poincare needs an exponent p in (1, inf)")
        if self.K < 0 and not cd.infinite and self.N <= 0:
            l_delta = cd.l_delta()
            if not self.D < l_delta:
                raise ProvisoError(self.K, self.N, self.D, l_delta)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "inequality": self.inequality.value,
            "K": self.K,
            "N": json_extended(self.N),
            "D": json_extended(self.D),
            "p": self.p,
        }


@dataclass
class BoundResult:
    """Lower bound for the constant of the requested inequality."""
    value: float
    case_label: str
    method: Method
    exactness: Exactness
    request: Optional[BoundRequest] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.value < 0 or math.isnan(self.value):
            raise DomainError("value", self.value, "Bound values are non-negative")

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "value": json_extended(self.value),
            "case_label": self.case_label,
            "method": self.method.value,
            "exactness": self.exactness.value,
            "diagnostics": self.diagnostics,
        }
        if self.request is not None:
            data["request"] = self.request.to_dict()
        return data


@dataclass
class LimitResult:
    """Epsilon -> 0 limit of an anomalous-branch eigenvalue."""
    value: float
    case_label: str
    converged: bool
    levels: list = field(default_factory=list)   # (epsilon, lambda)
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "case_label": self.case_label,
            "converged": self.converged,
            "levels": [{"epsilon": e, "lambda": v} for e, v in self.levels],
            "note": self.note,
        }
