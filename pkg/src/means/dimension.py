"""
Curvature-dimension parameter pair

The pair (K, N) with the derived quantities delta = K/(N-1) and
l_delta = pi/sqrt(delta). Finite N must lie outside (0, 1].
"""

import math
from dataclasses import dataclass

from ..core.exceptions import DomainError

INF = math.inf


def is_inf(value: float) -> bool:
    """True for the symbol +INF."""
    return math.isinf(value) and value > 0


def parse_extended(text: str) -> float:
    """Parse a real number or the literal ``inf``."""
    cleaned = text.strip().lower()
    if cleaned in ("inf", "+inf", "infinity", "+infinity"):
        return INF
    value = float(cleaned)
    if math.isnan(value):
        raise ValueError(text)
    return value


@dataclass(frozen=True)
class CurvatureDimension:
    """Curvature lower bound K and effective dimension N."""
    K: float
    N: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.K):
            raise DomainError("K", self.K, f"K must be a finite real, got {self.K}")
        if math.isnan(self.N) or self.N == -INF:
            raise DomainError("N", self.N, f"N must be a real number or +inf, got {self.N}")
        if 0 < self.N <= 1:
            raise DomainError(
                "N", self.N,
                f"N={self.N} lies in (0, 1], outside the range (-inf, 0] U (1, inf] of the theory",
            )

    @property
    def infinite(self) -> bool:
        return is_inf(self.N)

    def delta(self) -> float:
        """delta = K/(N-1); zero for N = INF."""
        if self.infinite:
            return 0.0
        return self.K / (self.N - 1.0)

    def l_delta(self) -> float:
        """Maximal diameter pi/sqrt(delta) of the model support; INF when delta <= 0."""
        delta = self.delta()
        if delta > 0:
            return math.pi / math.sqrt(delta)
        return INF

    def __str__(self) -> str:
        n_text = "inf" if self.infinite else f"{self.N:g}"
        return f"CD({self.K:g}, {n_text})"
