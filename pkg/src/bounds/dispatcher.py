"""
Sharp Bound Dispatcher

Maps a BoundRequest onto the case tables for the Poincare, p-Poincare and
log-Sobolev constants under CDD(K, N, D):

Poincare, by range of N
- 1) N in [2, inf):   a K>0 cos^{N-1} / KN/(N-1),   b K<0 cosh^{N-1} / 0,   c K=0 (pi/D)^2 / 0
- 2) N = inf:         a K>0 e^{-Kx^2/2} / K,        b K<0 e^{|K|x^2/2} / 0,   c K=0 (pi/D)^2 / 0
- 3) N in (-inf, -1]: a K<0 cos^{N-1},              b K>0 cosh^{N-1} / KN/(N-1), c K=0 (pi/D)^2 / 0
- 4) N in (-1, 0]:    eps -> 0 limits of the one-sided profiles (a K<0, b K>0, c K=0)

Profiles are symmetric (h = 0) on [-D/2, D/2] in families 1-3 and start at
the blow-up point of the support in family 4.
"""

import logging
import math
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..core.config import RunConfig
from ..core.exceptions import DomainError, ProvisoError
from ..density.model_density import model_log_density
from ..density.models import GridDensity, ModelMeasure
from ..estimators.distribution import build_distribution
from ..estimators.hardy import bobkov_gotze_estimate
from ..estimators.log_sobolev import Exactness, ls_bound_closed, ls_upsilon0_regime
from ..means.dimension import INF, CurvatureDimension, is_inf
from ..solvers.exhaustion import exhaust_interval, extrapolate_limit
from ..solvers.plap_solver import plap_first_eigenvalue
from ..solvers.ptrig import pi_p
from ..solvers.sl_solver import sl_first_eigenvalue
from .models import BoundRequest, BoundResult, Inequality, LimitResult, Method
from .reference import reference_bounds


class BoundDispatcher:
    """Evaluates sharp lower bounds with one run configuration."""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()
        self.logger = logging.getLogger(__name__)

    @property
    def tol(self) -> float:
        return self.config.solver.rel_tol

    def evaluate(self, request: BoundRequest) -> BoundResult:
        if request.inequality is Inequality.POINCARE:
            return self.poincare(request)
        if request.inequality is Inequality.P_POINCARE:
            return self.p_poincare(request)
        return self.log_sobolev(request)

    # ------------------------------------------------------------------
    # Poincare
    # ------------------------------------------------------------------

    def poincare(self, request: BoundRequest) -> BoundResult:
        request.validate()
        K, N, D = request.K, request.N, request.D
        cd = request.cd

        if cd.infinite:
            family = "2"
        elif N >= 2:
            family = "1"
        elif N <= -1:
            family = "3"
        else:
            family = "4"

        if K == 0:
            label = family + "c"
        elif family == "3" or family == "4":
            label = family + ("a" if K < 0 else "b")
        else:
            label = family + ("a" if K > 0 else "b")

        self.logger.debug("poincare %s D=%s dispatches to case %s", cd, D, label)
        if family == "4":
            result = self._anomalous(request, label)
        elif K == 0:
            result = self._closed(request, label, math.pi ** 2 / (D * D) if request.finite_diameter else 0.0)
        elif request.finite_diameter and (cd.delta() <= 0 or D < cd.l_delta()):
            result = self._symmetric_profile(request, label, cd)
        else:
            result = self._closed(request, label, self._closed_value(cd, label))

        result.diagnostics["reference_bounds"] = [row.to_dict() for row in reference_bounds(K, N, D)]
        return result

    def _closed_value(self, cd: CurvatureDimension, label: str) -> float:
        """Value of the closed-form branch once the profile is unavailable."""
        if label == "1a" or label == "3b":
            return cd.K * cd.N / (cd.N - 1.0)
        if label == "2a":
            return cd.K
        return 0.0

    def _closed(self, request: BoundRequest, label: str, value: float) -> BoundResult:
        cd = request.cd
        return BoundResult(value, label, Method.CLOSED_FORM, Exactness.EXACT, request,
                           {"delta": cd.delta(), "l_delta": _plain(cd.l_delta())})

    def _symmetric_profile(self, request: BoundRequest, label: str, cd: CurvatureDimension) -> BoundResult:
        half = request.D / 2.0
        measure = ModelMeasure(cd, 0.0, -half, half)
        eigen = sl_first_eigenvalue(measure, self.tol, self.config.solver)
        diagnostics = eigen.to_dict(include_eigenfunction=False)
        diagnostics.update({"delta": cd.delta(), "l_delta": _plain(cd.l_delta()), "interval": [-half, half]})
        return BoundResult(eigen.eigenvalue, label, Method.SL_SOLVE, Exactness.EXACT, request, diagnostics)

    def _anomalous(self, request: BoundRequest, label: str) -> BoundResult:
        limit = self.anomalous_limit(request.K, request.N, request.D)
        diagnostics: Dict[str, Any] = limit.to_dict()
        diagnostics.pop("value", None)
        return BoundResult(limit.value, label, Method.SL_EXHAUSTION, Exactness.EXACT, request, diagnostics)

    # ------------------------------------------------------------------
    # Anomalous range N in [-1, 0]
    # ------------------------------------------------------------------

    def anomalous_profile(self, cd: CurvatureDimension) -> Tuple[float, float, float, str]:
        """(h, blow-up point z, support end, label) of the one-sided profile."""
        K = cd.K
        if K < 0:
            l_delta = cd.l_delta()
            return 0.0, -l_delta / 2.0, l_delta / 2.0, "4a"
        if K > 0:
            root = math.sqrt(-cd.delta())
            return (cd.N - 1.0) * root / math.tanh(1.0), -1.0 / root, INF, "4b"
        return cd.N - 1.0, -1.0, INF, "4c"

    def anomalous_limit(self, K: float, N: float, D: float) -> LimitResult:
        """
        lim_{eps -> 0+} of the eigenvalue of the one-sided profile on [z + eps, z + eps + D]

        Args:
            K: Curvature
            N: Dimension in [-1, 0]
            D: Diameter in (0, inf]

        Returns:
            LimitResult: Extrapolated limit; the D = inf case of K > 0 is a nested limit
        """
        if not -1.0 <= N <= 0.0:
            raise DomainError("N", N, f"The one-sided limit is defined for N in [-1, 0], got {N}")
        if not D > 0:
            raise DomainError("D", D, f"Diameter must be positive, got {D}")
        cd = CurvatureDimension(K, N)
        h, z, end, label = self.anomalous_profile(cd)
        if K < 0 and not D < cd.l_delta():
            raise ProvisoError(K, N, D, cd.l_delta())
        if is_inf(D) and K == 0:
            return LimitResult(0.0, label, True, note="unbounded diameter without curvature")

        settings = self.config.exhaustion
        first = settings.initial_offset
        if not is_inf(D):
            first = min(first, D / 4.0)
            if math.isfinite(end):
                first = min(first, (end - z - D) / 4.0)
        level_tol = min(self.tol, settings.rel_tol * 1e-3)

        def evaluate(n: int) -> Tuple[float, float]:
            eps = first * 2.0 ** (-n)
            left = z + eps
            if is_inf(D):
                inner = exhaust_interval(cd, h, (left, INF), config=self.config)
                return eps, inner.value
            measure = ModelMeasure(cd, h, left, left + D)
            return eps, sl_first_eigenvalue(measure, level_tol, self.config.solver).eigenvalue

        outcome = extrapolate_limit(evaluate, self.config, label=f"one-sided limit {label} for {cd}, D={D}")
        note = "nested limit: inner right end to infinity, outer eps to 0" if is_inf(D) else outcome.note
        return LimitResult(outcome.value, label, outcome.converged, list(outcome.levels), note)

    # ------------------------------------------------------------------
    # p-Poincare
    # ------------------------------------------------------------------

    def p_poincare(self, request: BoundRequest) -> BoundResult:
        request.validate()
        K, D = request.K, request.D
        p = float(request.p)  # validated
        cd = request.cd
        family = "2" if cd.infinite else "1"
        label = family + ("a" if K > 0 else "b" if K < 0 else "c")

        if K == 0:
            value = (p - 1.0) * (pi_p(p) / D) ** p if request.finite_diameter else 0.0
            result = self._closed(request, label, value)
        elif K < 0 and not request.finite_diameter:
            result = self._closed(request, label, 0.0)
        elif request.finite_diameter and (K < 0 or D < cd.l_delta()):
            half = D / 2.0
            eigen = plap_first_eigenvalue(ModelMeasure(cd, 0.0, -half, half), p, self.tol, self.config.solver)
            diagnostics = eigen.to_dict(include_eigenfunction=False)
            diagnostics["interval"] = [-half, half]
            result = BoundResult(eigen.eigenvalue, label, Method.PLAP_SOLVE, Exactness.EXACT, request, diagnostics)
        elif p == 2.0:
            result = self._closed(request, label, self._closed_value(cd, label))
        else:
            low, high = (-cd.l_delta() / 2.0, cd.l_delta() / 2.0) if not cd.infinite else (-INF, INF)
            limit = exhaust_interval(cd, 0.0, (low, high), p=p, config=self.config)
            result = BoundResult(limit.value, label, Method.PLAP_SOLVE, Exactness.EXACT, request,
                                 {"exhaustion": limit.to_dict()})

        result.diagnostics["reference_bounds"] = [row.to_dict() for row in reference_bounds(K, request.N, D, p)]
        return result

    # ------------------------------------------------------------------
    # log-Sobolev
    # ------------------------------------------------------------------

    def log_sobolev(self, request: BoundRequest) -> BoundResult:
        request.validate()
        K, D = request.K, request.D
        closed = ls_bound_closed(K, D)
        label = "ls_positive" if K > 0 else "ls_flat" if K == 0 else "ls_negative"
        diagnostics: Dict[str, Any] = {"note": closed.note}
        if K < 0 and request.finite_diameter:
            regime, asymptotic = ls_upsilon0_regime(-K, D)
            diagnostics["upsilon_regime"] = {"regime": regime, "asymptotic": asymptotic}

        density = self._gaussian_profile(K, D)
        if density is not None:
            estimate = bobkov_gotze_estimate(build_distribution(density), self.config.estimator)
            diagnostics["bobkov_gotze"] = estimate.to_dict()
        return BoundResult(closed.value, label, Method.BG_CLOSED, closed.exactness, request, diagnostics)

    def _gaussian_profile(self, K: float, D: float) -> Optional[GridDensity]:
        """e^{-K x^2/2} on [-D/2, D/2], truncated for K > 0 and D = inf."""
        if is_inf(D):
            if K <= 0:
                return None
            half = self.config.estimator.gaussian_radius / math.sqrt(K)
        else:
            half = D / 2.0
        x = np.linspace(-half, half, self.config.estimator.grid_points)
        log_values = np.asarray(model_log_density(CurvatureDimension(K, INF), 0.0, x))
        values = np.exp(log_values - np.max(log_values))
        return GridDensity(x0=float(x[0]), dx=float(x[1] - x[0]), values=values)


def _plain(value: float) -> Any:
    return "inf" if math.isinf(value) else value


def poincare_bound(request: BoundRequest, config: Optional[RunConfig] = None) -> BoundResult:
    """Sharp Poincare lower bound under CDD(K, N, D)."""
    return BoundDispatcher(config).poincare(request)


def p_poincare_bound(request: BoundRequest, config: Optional[RunConfig] = None) -> BoundResult:
    """Sharp p-Poincare lower bound for N in [2, inf]."""
    return BoundDispatcher(config).p_poincare(request)


def log_sobolev_bound(request: BoundRequest, config: Optional[RunConfig] = None) -> BoundResult:
    """Log-Sobolev lower bound (up to universal constants unless K = 0)."""
    return BoundDispatcher(config).log_sobolev(request)


def anomalous_limit(K: float, N: float, D: float, config: Optional[RunConfig] = None) -> LimitResult:
    """One-sided eps -> 0 limit for N in [-1, 0]."""
    return BoundDispatcher(config).anomalous_limit(K, N, D)


def compute_bound(request: BoundRequest, config: Optional[RunConfig] = None) -> BoundResult:
    return BoundDispatcher(config).evaluate(request)
