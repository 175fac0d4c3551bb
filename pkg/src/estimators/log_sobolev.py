"""
Closed-form log-Sobolev bounds

For the extremal measure e^{kx^2/2} on an interval of length D the log-Sobolev
constant is equivalent, up to universal constants, to

    Upsilon_0(k, D) = max{sqrt(k), 1/D} * k D / (e^{k D^2/8} - 1)

and the lower bound under curvature K and diameter D dispatches on the sign
of K.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from ..core.exceptions import DomainError
from ..means.dimension import is_inf


class Exactness(Enum):
    """Whether a bound value is sharp or holds up to universal constants"""
    EXACT = "exact"
    UP_TO_CONSTANTS = "up_to_constants"

    @classmethod
    def from_string(cls, value: str) -> "Exactness":
        for item in cls:
            if item.value == value.lower():
                return item
        raise ValueError(f"Unknown exactness: {value}")


@dataclass(frozen=True)
class ClosedFormBound:
    value: float
    exactness: Exactness
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "exactness": self.exactness.value, "note": self.note}


def _check_positive(name: str, value: float) -> None:
    if not value > 0 or math.isnan(value):
        raise DomainError(name, value, f"{name} must be positive, got {value}")


def ls_upsilon0(k: float, D: float) -> float:
    """Upsilon_0(k, D); tends to 8/D^2 as k -> 0."""
    _check_positive("k", k)
    _check_positive("D", D)
    if is_inf(D):
        return 0.0
    exponent = k * D * D / 8.0
    if exponent > 700.0:
        log_value = math.log(max(math.sqrt(k), 1.0 / D)) + math.log(k * D) - exponent
        return math.exp(log_value)
    return max(math.sqrt(k), 1.0 / D) * k * D / math.expm1(exponent)


def ls_upsilon0_regime(k: float, D: float) -> Tuple[str, float]:
    """
    Two-regime asymptotic of Upsilon_0

    Returns:
        ('concentrated', k^{3/2} D e^{-k D^2/8}) when sqrt(k) D > 1,
        ('flat', 1/D^2) otherwise
    """
    _check_positive("k", k)
    _check_positive("D", D)
    if math.sqrt(k) * D > 1.0:
        return "concentrated", k ** 1.5 * D * math.exp(-k * D * D / 8.0)
    return "flat", 1.0 / (D * D)


def ls_bound_closed(K: float, D: float) -> ClosedFormBound:
    """
    Log-Sobolev lower bound under curvature K and diameter D

    Args:
        K: Lower Ricci bound
        D: Diameter in (0, inf]

    Returns:
        ClosedFormBound: K > 0 gives max{K, 1/D^2}; K = 0 gives pi^2/D^2 (exact);
        K < 0 gives Upsilon_0(|K|, D). K <= 0 with D = inf gives 0.
    """
    if not math.isfinite(K):
        raise DomainError("K", K, f"K must be finite, got {K}")
    _check_positive("D", D)

    if K > 0:
        value = K if is_inf(D) else max(K, 1.0 / (D * D))
        return ClosedFormBound(value, Exactness.UP_TO_CONSTANTS)
    if is_inf(D):
        return ClosedFormBound(0.0, Exactness.EXACT,
                               note="no log-Sobolev inequality without positive curvature on an unbounded space")
    if K == 0:
        return ClosedFormBound(math.pi ** 2 / (D * D), Exactness.EXACT,
                               note="uniform density attains the bound")
    return ClosedFormBound(ls_upsilon0(-K, D), Exactness.UP_TO_CONSTANTS)


__all__ = ["Exactness", "ClosedFormBound", "ls_upsilon0", "ls_upsilon0_regime", "ls_bound_closed"]
