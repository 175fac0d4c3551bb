"""
Run configuration for curvature-bound computations

Collects every tolerance, grid size and constant used by the solvers,
estimators, checkers and sweeps:
- Dataclass sections with documented defaults
- key = value override files with dotted keys (``solver.rel_tol = 1e-9``)
- Validation of positivity constraints
"""

import logging
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Union

from .exceptions import DomainError, FileOperationError

logger = logging.getLogger(__name__)


@dataclass
class SolverConfig:
    """Shooting solver configuration"""
    rel_tol: float = 1e-8              # Relative tolerance on the eigenvalue
    ode_method: str = "DOP853"         # Primary solve_ivp method for the phase equation
    fallback_method: str = "Radau"     # Used when the primary integration fails
    phase_atol: float = 1e-13          # Absolute tolerance on phase and log-amplitude
    max_bracket_steps: int = 80        # Doublings/halvings allowed while bracketing
    max_iterations: int = 200          # Root-finder iteration cap
    eigenfunction_points: int = 401    # Samples of the reconstructed eigenfunction


@dataclass
class ExhaustionConfig:
    """Monotone exhaustion configuration"""
    rel_tol: float = 1e-5              # Stop when successive extrapolants agree to this
    initial_offset: float = 0.1        # First endpoint retreat epsilon_0
    initial_radius: float = 2.0        # First radius for infinite ends
    min_levels: int = 4                # Levels computed before convergence is tested
    max_levels: int = 30               # Hard cap before declaring non-convergence
    zero_floor: float = 1e-10          # Fraction of the first value treated as zero


@dataclass
class EstimatorConfig:
    """Hardy-type estimator configuration"""
    grid_points: int = 4001            # Samples used for distributions
    gaussian_radius: float = 8.0       # Truncation of Gaussian-type supports
    exponential_radius: float = 40.0   # Truncation of exponential-type supports
    bg_constant: float = 16.0          # Bobkov-Goetze bracket factor C_BG
    muckenhoupt_constant: float = 4.0  # Muckenhoupt bracket factor
    refine: bool = True                # Bounded scalar refinement around grid maxima


@dataclass
class CheckerConfig:
    """Curvature-dimension checker configuration"""
    tol_constant: float = 100.0        # Differential tolerance is tol_constant * dx**2
    midpoint_rel_tol: float = 1e-8     # Relative slack of the midpoint inequality
    n_triples: int = 2000              # Random triples drawn by the midpoint check


@dataclass
class SweepConfig:
    """Parameter sweep configuration"""
    max_workers: int = 4               # Worker threads for independent solves
    timeout_per_task: int = 600        # Single solve timeout (seconds)
    monotone_slack: float = 1e-7       # Relative slack for monotonicity verdicts
    constant_rel_tol: float = 1e-6     # Relative spread accepted as constant


_SECTIONS = ("solver", "exhaustion", "estimator", "checker", "sweep")
_OUTPUT_FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    """Complete run configuration"""
    solver: SolverConfig = field(default_factory=SolverConfig)
    exhaustion: ExhaustionConfig = field(default_factory=ExhaustionConfig)
    estimator: EstimatorConfig = field(default_factory=EstimatorConfig)
    checker: CheckerConfig = field(default_factory=CheckerConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    output_format: str = "text"        # text, json or csv
    seed: int = 12345                  # Seed for randomized checks
    profile_points: int = 201          # Rows emitted by profile exports
    language: str = "en"               # Report language

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "RunConfig":
        """Build a configuration from defaults and a key = value file."""
        config = cls()
        config.update(read_key_value_file(path))
        config.validate()
        return config

    def update(self, overrides: Dict[str, str]) -> None:
        """Apply string overrides keyed by ``section.field`` or ``field``."""
        for key, raw in overrides.items():
            section_name, _, name = key.rpartition(".")
            if section_name:
                if section_name not in _SECTIONS:
                    raise DomainError(key, raw, f"Unknown configuration section '{section_name}'")
                target = getattr(self, section_name)
            else:
                target = self
                if name in _SECTIONS:
                    raise DomainError(key, raw, f"'{name}' is a section, use '{name}.<field>'")

            known = {f.name: f for f in fields(target)}
            if name not in known:
                raise DomainError(key, raw, f"Unknown configuration key '{key}'")

            current = getattr(target, name)
            setattr(target, name, _coerce(key, raw, current))
            logger.debug("config override %s = %r", key, getattr(target, name))

    def validate(self) -> None:
        """Check that tolerances and sizes are positive."""
        positive = {
            "solver.rel_tol": self.solver.rel_tol,
            "solver.phase_atol": self.solver.phase_atol,
            "exhaustion.rel_tol": self.exhaustion.rel_tol,
            "exhaustion.initial_offset": self.exhaustion.initial_offset,
            "exhaustion.initial_radius": self.exhaustion.initial_radius,
            "exhaustion.zero_floor": self.exhaustion.zero_floor,
            "estimator.gaussian_radius": self.estimator.gaussian_radius,
            "estimator.exponential_radius": self.estimator.exponential_radius,
            "estimator.bg_constant": self.estimator.bg_constant,
            "estimator.muckenhoupt_constant": self.estimator.muckenhoupt_constant,
            "checker.tol_constant": self.checker.tol_constant,
            "checker.midpoint_rel_tol": self.checker.midpoint_rel_tol,
            "sweep.monotone_slack": self.sweep.monotone_slack,
            "sweep.constant_rel_tol": self.sweep.constant_rel_tol,
        }
        for key, value in positive.items():
            if not value > 0:
                raise DomainError(key, value, f"'{key}' must be positive, got {value}")

        minimum_counts = {
            "solver.eigenfunction_points": (self.solver.eigenfunction_points, 3),
            "estimator.grid_points": (self.estimator.grid_points, 3),
            "checker.n_triples": (self.checker.n_triples, 1),
            "sweep.max_workers": (self.sweep.max_workers, 1),
            "profile_points": (self.profile_points, 3),
            "exhaustion.min_levels": (self.exhaustion.min_levels, 3),
        }
        for key, (value, minimum) in minimum_counts.items():
            if value < minimum:
                raise DomainError(key, value, f"'{key}' must be at least {minimum}, got {value}")

        if self.exhaustion.max_levels < self.exhaustion.min_levels:
            raise DomainError("exhaustion.max_levels", self.exhaustion.max_levels,
                              "exhaustion.max_levels must not be below exhaustion.min_levels")
        if self.output_format not in _OUTPUT_FORMATS:
            raise DomainError("output_format", self.output_format,
                              f"output_format must be one of {', '.join(_OUTPUT_FORMATS)}")
        if self.language not in ("en", "zh"):
            raise DomainError("language", self.language, "language must be 'en' or 'zh'")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def read_key_value_file(path: Union[str, Path]) -> Dict[str, str]:
    """
    Read a simple configuration file

    Args:
        path: File with one ``key = value`` pair per line; ``#`` starts a comment

    Returns:
        Dict[str, str]: Raw values keyed by their (possibly dotted) names
    """
    file_path = Path(path)
    try:
        lines = file_path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise FileOperationError("read", str(file_path), e)

    values: Dict[str, str] = {}
    for number, line in enumerate(lines, 1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise DomainError(f"line {number}", content, f"Expected 'key = value' on line {number}: {line!r}")
        key, value = (part.strip() for part in content.split("=", 1))
        if not key:
            raise DomainError(f"line {number}", content, f"Missing key on line {number}")
        values[key] = value
    return values


def _coerce(key: str, raw: str, current: Any) -> Any:
    """Convert a raw string to the type of the current value."""
    try:
        if isinstance(current, bool):
            lowered = raw.strip().lower()
            if lowered in ("1", "true", "yes", "on"):
                return True
            if lowered in ("0", "false", "no", "off"):
                return False
            raise ValueError(raw)
        if isinstance(current, int):
            return int(raw)
        if isinstance(current, float):
            return float(raw)
    except ValueError:
        raise DomainError(key, raw, f"Cannot convert '{raw}' for '{key}' to {type(current).__name__}")
    return raw.strip()
