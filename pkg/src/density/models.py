"""
Density Data Models

Core data models for one-dimensional measures:
- GridDensity: sampled density (or signed function) on a uniform grid
- ModelMeasure: model density J_{K,N,h} restricted to an interval
- ProfileCase / CanonicalForm: the shift/scale normal form of J_{K,N,h}
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import DomainError, GridMismatchError, InsufficientDataError, ProvisoError
from ..means.dimension import INF, CurvatureDimension

SPACING_RTOL = 1e-9


@dataclass(frozen=True)
class GridDensity:
    """Samples values[i] at x0 + i*dx; immutable after construction."""
    x0: float
    dx: float
    values: np.ndarray
    signed: bool = False
    flags: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size < 3:
            raise InsufficientDataError("grid samples", minimum_required=3)
        if not (math.isfinite(self.dx) and self.dx > 0):
            raise DomainError("dx", self.dx, f"Grid spacing must be positive, got {self.dx}")
        if not math.isfinite(self.x0):
            raise DomainError("x0", self.x0, f"Grid origin must be finite, got {self.x0}")
        if not np.all(np.isfinite(values)):
            raise DomainError("values", "non-finite", "Grid values must be finite")
        if not self.signed and np.any(values < 0):
            raise DomainError("values", float(values.min()), "Density values must be non-negative")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_samples(cls, x: Sequence[float], values: Sequence[float], signed: bool = False) -> "GridDensity":
        """Build from explicit abscissae, checking uniform spacing."""
        grid = np.asarray(x, dtype=float)
        if grid.size < 3:
            raise InsufficientDataError("grid samples", minimum_required=3)
        steps = np.diff(grid)
        dx = float(steps.mean())
        scale = max(1.0, float(np.max(np.abs(grid))))
        if dx <= 0 or np.max(np.abs(steps - dx)) > SPACING_RTOL * scale:
            raise DomainError("x", "non-uniform", "Grid abscissae must be increasing and uniformly spaced")
        return cls(x0=float(grid[0]), dx=dx, values=np.asarray(values, dtype=float), signed=signed)

    @property
    def n_points(self) -> int:
        return int(self.values.size)

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n_points)

    @property
    def x_end(self) -> float:
        return self.x0 + self.dx * (self.n_points - 1)

    @property
    def interval(self) -> Tuple[float, float]:
        return (self.x0, self.x_end)

    def same_grid(self, other: "GridDensity") -> bool:
        if self.n_points != other.n_points:
            return False
        scale = max(abs(self.dx), abs(self.x0), abs(self.x_end), 1.0)
        return (abs(self.x0 - other.x0) <= SPACING_RTOL * scale
                and abs(self.dx - other.dx) <= SPACING_RTOL * self.dx)

    def require_same_grid(self, other: "GridDensity") -> None:
        if not self.same_grid(other):
            raise GridMismatchError(
                (self.x0, self.dx, self.n_points),
                (other.x0, other.dx, other.n_points),
            )

    def to_dict(self) -> Dict[str, Any]:
        return {"x0": self.x0, "dx": self.dx, "values": [float(v) for v in self.values]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any], signed: bool = False) -> "GridDensity":
        try:
            return cls(x0=float(data["x0"]), dx=float(data["dx"]),
                       values=np.asarray(data["values"], dtype=float), signed=signed)
        except KeyError as e:
            raise DomainError(str(e), None, f"Grid density payload is missing {e}")


class ProfileCase(Enum):
    """Canonical profile families of the model densities."""

    TRIGONOMETRIC = "a"        # cos^{N-1}
    POWER = "b1"               # x_+^{N-1}
    UNIFORM = "b2"             # 1
    HYPERBOLIC_COSH = "c1"     # cosh^{N-1}
    HYPERBOLIC_SINH = "c2"     # sinh_+^{N-1}
    EXPONENTIAL = "c3"         # exp(+-sqrt(-delta)(N-1)x)
    GAUSSIAN = "d1"            # exp(-K x^2/2)
    LINEAR_EXPONENTIAL = "d2"  # exp(h x)

    @classmethod
    def from_string(cls, tag: str) -> "ProfileCase":
        try:
            return cls(tag.lower())
        except ValueError:
            raise DomainError("case", tag, f"Unknown profile case '{tag}'")


@dataclass(frozen=True)
class CanonicalForm:
    """
    J_{K,N,h}(x) = scale * Y(orientation * (arg(x) + shift))

    arg(x) is sqrt(|delta|)*x for the trigonometric and hyperbolic cases and x
    otherwise, so ``shift`` is the tabulated phase s.
    """
    case: ProfileCase
    shift: float
    scale: float
    orientation: int
    cd: CurvatureDimension
    h: float

    @property
    def frequency(self) -> float:
        """Factor turning x into the profile argument."""
        if self.case in (ProfileCase.TRIGONOMETRIC, ProfileCase.HYPERBOLIC_COSH,
                         ProfileCase.HYPERBOLIC_SINH, ProfileCase.EXPONENTIAL):
            return math.sqrt(abs(self.cd.delta()))
        return 1.0

    def profile(self, y: np.ndarray) -> np.ndarray:
        """The fixed profile Y of the case, evaluated at profile arguments y."""
        y = np.asarray(y, dtype=float)
        N = self.cd.N
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            if self.case is ProfileCase.TRIGONOMETRIC:
                base = np.where(np.abs(y) < math.pi / 2, np.cos(y), 0.0)
                return _positive_power(base, N - 1.0)
            if self.case is ProfileCase.POWER:
                return _positive_power(y, N - 1.0)
            if self.case is ProfileCase.UNIFORM:
                return np.ones_like(y)
            if self.case is ProfileCase.HYPERBOLIC_COSH:
                return np.exp((N - 1.0) * _log_cosh(y))
            if self.case is ProfileCase.HYPERBOLIC_SINH:
                return _positive_power(np.sinh(y), N - 1.0)
            if self.case is ProfileCase.EXPONENTIAL:
                return np.exp((N - 1.0) * y)
            if self.case is ProfileCase.GAUSSIAN:
                return np.exp(-self.cd.K * y ** 2 / 2.0)
            return np.exp(self.h * y)

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        argument = self.frequency * np.asarray(x, dtype=float) + self.shift
        return self.scale * self.profile(self.orientation * argument)

    def to_dict(self) -> Dict[str, Any]:
        return {"case": self.case.value, "shift": self.shift, "scale": self.scale,
                "orientation": self.orientation}


def _log_cosh(y: np.ndarray) -> np.ndarray:
    a = np.abs(y)
    return a + np.log1p(np.exp(-2.0 * a)) - math.log(2.0)


def _positive_power(base: np.ndarray, exponent: float) -> np.ndarray:
    """base_+^exponent with 0 outside the positive set and 0^neg = INF."""
    base = np.asarray(base, dtype=float)
    out = np.zeros_like(base)
    positive = base > 0
    out[positive] = base[positive] ** exponent
    if exponent < 0:
        out[base == 0] = INF
    return out


@dataclass(frozen=True)
class ModelMeasure:
    """Model density J_{K,N,h} restricted to [a, b]; a and b may be infinite."""
    cd: CurvatureDimension
    h: float
    a: float
    b: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.h):
            raise DomainError("h", self.h, f"h must be finite, got {self.h}")
        if math.isnan(self.a) or math.isnan(self.b) or not self.a < self.b:
            raise DomainError("interval", (self.a, self.b), f"Interval needs a < b, got [{self.a}, {self.b}]")

        from .model_density import model_support
        low, high = model_support(self.cd, self.h)
        slack = 1e-12 * max(1.0, abs(self.a), abs(self.b)) if math.isfinite(self.a + self.b) else 0.0
        if self.a < low - slack or self.b > high + slack:
            raise DomainError(
                "interval", (self.a, self.b),
                f"Interval [{self.a}, {self.b}] leaves the support ({low}, {high}) of J for {self.cd}, h={self.h}",
            )
        if self.cd.K < 0 and not self.cd.infinite and self.cd.N <= 0:
            l_delta = self.cd.l_delta()
            if not self.b - self.a < l_delta:
                raise ProvisoError(self.cd.K, self.cd.N, self.b - self.a, l_delta)

    @property
    def interval(self) -> Tuple[float, float]:
        return (self.a, self.b)

    @property
    def length(self) -> float:
        return self.b - self.a

    def support(self) -> Tuple[float, float]:
        from .model_density import model_support
        return model_support(self.cd, self.h)

    def is_regular(self) -> bool:
        """Finite endpoints strictly inside the support."""
        low, high = self.support()
        return math.isfinite(self.a) and math.isfinite(self.b) and low < self.a and self.b < high

    def endpoint_kinds(self) -> List[str]:
        """'infinite', 'singular' (touches the support boundary) or 'regular' for each end."""
        low, high = self.support()
        kinds = []
        for end, boundary in ((self.a, low), (self.b, high)):
            if math.isinf(end):
                kinds.append("infinite")
            elif math.isfinite(boundary) and abs(end - boundary) <= 1e-12 * max(1.0, abs(boundary)):
                kinds.append("singular")
            else:
                kinds.append("regular")
        return kinds

    def restricted(self, a: float, b: float) -> "ModelMeasure":
        return ModelMeasure(self.cd, self.h, a, b)

    def to_dict(self) -> Dict[str, Any]:
        return {"K": self.cd.K, "N": _json_extended(self.cd.N), "h": self.h,
                "a": _json_extended(self.a), "b": _json_extended(self.b)}


def _json_extended(value: float) -> Any:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def json_extended(value: Optional[float]) -> Any:
    """JSON-friendly representation of an extended real."""
    if value is None:
        return None
    return _json_extended(float(value))
