"""
Monotonicity Sweeps

Tabulates lambda(h, d), the first nonzero Neumann eigenvalue of J_{K,N,h} on
[-d/2, d/2], along one parameter and checks the expected direction:

- in |h| at fixed d: non-decreasing for N in (-inf, -1) U (1, inf],
  non-increasing for N in (-1, 0], constant for N = -1
- in d at fixed h: non-increasing

Parameter points outside the regular domain ([-d/2, d/2] strictly inside the
support) are flagged and skipped.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..batch.concurrent_manager import SweepExecutor, TaskResult
from ..core.config import RunConfig
from ..core.exceptions import DomainError
from ..density.models import ModelMeasure, json_extended
from ..means.dimension import CurvatureDimension
from ..solvers.models import EigenResult
from ..solvers.sl_solver import sl_first_eigenvalue


TABLE_COLUMNS = ["h_or_d", "lambda", "residual", "verdict_flag"]


class Verdict(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


class Regime(Enum):
    """Expected direction of lambda along the swept parameter"""
    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"


def h_regime(N: float) -> Regime:
    """Direction of lambda in |h| for fixed d."""
    if N == -1:
        return Regime.CONSTANT
    if -1 < N <= 0:
        return Regime.DECREASING
    return Regime.INCREASING


@dataclass
class SweepResult:
    """Sweep table with its verdict."""
    parameter: str
    K: float
    N: float
    fixed: float
    regime: Regime
    table: pd.DataFrame
    verdict: Verdict
    skipped: List[Tuple[float, str]] = field(default_factory=list)
    max_violation: float = 0.0

    @property
    def partial(self) -> bool:
        return bool(self.skipped)

    def to_dict(self) -> Dict[str, Any]:
        rows = []
        for record in self.table.to_dict(orient="records"):
            rows.append({
                "h_or_d": record["h_or_d"],
                "lambda": None if pd.isna(record["lambda"]) else float(record["lambda"]),
                "residual": None if pd.isna(record["residual"]) else float(record["residual"]),
                "verdict_flag": record["verdict_flag"],
            })
        return {
            "parameter": self.parameter,
            "K": self.K,
            "N": json_extended(self.N),
            "fixed": self.fixed,
            "regime": self.regime.value,
            "verdict": self.verdict.value,
            "max_violation": self.max_violation,
            "rows": rows,
            "skipped": [{"value": value, "reason": reason} for value, reason in self.skipped],
        }


class MonotonicitySweeper:
    """Runs eigenvalue sweeps in parallel and judges their monotonicity."""

    def __init__(self, config: Optional[RunConfig] = None, max_workers: Optional[int] = None):
        self.config = config or RunConfig()
        self.max_workers = max_workers
        self.logger = logging.getLogger(__name__)

    def _solve(self, cd: CurvatureDimension, h: float, d: float) -> EigenResult:
        if not d > 0:
            raise DomainError("d", d, f"Interval length must be positive, got {d}")
        measure = ModelMeasure(cd, h, -d / 2.0, d / 2.0)
        if not measure.is_regular():
            raise DomainError("(h, d)", (h, d), f"[-{d / 2:g}, {d / 2:g}] is not inside the support of J for h={h:g}")
        return sl_first_eigenvalue(measure, self.config.solver.rel_tol, self.config.solver)

    def _run(self, values: Sequence[float], task) -> List[TaskResult]:
        sweep_config = self.config.sweep
        if self.max_workers is not None:
            sweep_config = replace(sweep_config, max_workers=self.max_workers)
        with SweepExecutor(sweep_config) as executor:
            results = executor.execute_concurrent([float(v) for v in values], task)
        return sorted(results, key=lambda r: r.parameter)

    def sweep_h(self, K: float, N: float, d: float, h_values: Sequence[float]) -> SweepResult:
        cd = CurvatureDimension(K, N)
        regime = h_regime(N)
        results = self._run(h_values, lambda h: self._solve(cd, h, d))
        return self._judge("h", K, N, d, regime, results, key=abs)

    def sweep_d(self, K: float, N: float, h: float, d_values: Sequence[float]) -> SweepResult:
        cd = CurvatureDimension(K, N)
        results = self._run(d_values, lambda d: self._solve(cd, h, d))
        return self._judge("d", K, N, h, Regime.DECREASING, results, key=lambda v: v)

    def _judge(self, parameter: str, K: float, N: float, fixed: float, regime: Regime,
               results: List[TaskResult], key) -> SweepResult:
        records = []
        skipped = []
        for item in results:
            if item.success:
                records.append({"h_or_d": item.parameter, "lambda": item.result.eigenvalue,
                                "residual": item.result.phase_residual, "verdict_flag": "ok"})
            else:
                skipped.append((item.parameter, item.error or "failed"))
                records.append({"h_or_d": item.parameter, "lambda": np.nan,
                                "residual": np.nan, "verdict_flag": "skipped"})
        table = pd.DataFrame.from_records(records, columns=TABLE_COLUMNS)

        valid = table[table["verdict_flag"] == "ok"].copy()
        valid["order"] = valid["h_or_d"].map(key)
        valid = valid.sort_values(["order", "h_or_d"], kind="mergesort")
        if len(valid) < 2:
            verdict, worst = Verdict.INCONCLUSIVE, 0.0
        else:
            verdict, worst, offenders = self._verdict(valid, regime)
            table.loc[table.index.isin(offenders), "verdict_flag"] = "violation"

        if skipped:
            self.logger.warning("%d of %d sweep points skipped", len(skipped), len(results))
        self.logger.info("%s sweep for CD(%g, %s): %s (%s)", parameter, K, N, verdict.value, regime.value)
        return SweepResult(parameter, K, N, fixed, regime, table, verdict, skipped, worst)

    def _verdict(self, valid: pd.DataFrame, regime: Regime) -> Tuple[Verdict, float, List[int]]:
        values = valid["lambda"].to_numpy(dtype=float)
        scale = float(np.max(np.abs(values)))
        if regime is Regime.CONSTANT:
            spread = (float(values.max()) - float(values.min())) / scale
            tolerance = self.config.sweep.constant_rel_tol
            offenders = list(valid.index) if spread > tolerance else []
            return (Verdict.PASS if spread <= tolerance else Verdict.FAIL), spread, offenders

        steps = np.diff(values) / scale
        if regime is Regime.DECREASING:
            steps = -steps
        slack = self.config.sweep.monotone_slack
        bad = np.where(steps < -slack)[0]
        worst = float(max(0.0, -steps.min()))
        offenders = [int(valid.index[i + 1]) for i in bad]
        return (Verdict.PASS if bad.size == 0 else Verdict.FAIL), worst, offenders


def monotonicity_sweep(K: float, N: float, d: float, h_values: Sequence[float],
                       config: Optional[RunConfig] = None, max_workers: Optional[int] = None) -> SweepResult:
    """lambda(h, d) over h at fixed d, judged in |h| against the N-regime."""
    return MonotonicitySweeper(config, max_workers).sweep_h(K, N, d, h_values)


def diameter_sweep(K: float, N: float, h: float, d_values: Sequence[float],
                   config: Optional[RunConfig] = None, max_workers: Optional[int] = None) -> SweepResult:
    """lambda(h, d) over d at fixed h, judged non-increasing."""
    return MonotonicitySweeper(config, max_workers).sweep_d(K, N, h, d_values)
