"""
Unit tests for the monotonicity and diameter sweeps
"""
import math
import unittest

import numpy as np
import pandas as pd

from tests.test_utils import random_regular_measures, validate_payload

from src.bounds.sweeps import (
    TABLE_COLUMNS,
    MonotonicitySweeper,
    Regime,
    Verdict,
    diameter_sweep,
    h_regime,
    monotonicity_sweep,
)
from src.means.dimension import INF
from src.solvers.sl_solver import sl_first_eigenvalue


class TestHRegime(unittest.TestCase):
    """Test cases for h_regime"""

    def test_regimes_by_dimension(self):
        cases = [(3.0, Regime.INCREASING), (INF, Regime.INCREASING), (-2.0, Regime.INCREASING),
                 (-1.0, Regime.CONSTANT), (-0.5, Regime.DECREASING), (0.0, Regime.DECREASING)]
        for N, regime in cases:
            with self.subTest(N=N):
                self.assertIs(h_regime(N), regime)


class TestMonotonicitySweep(unittest.TestCase):
    """Test cases for monotonicity_sweep"""

    def test_positive_dimension_increases_in_h(self):
        h_values = np.linspace(0.0, 2.0, 9)
        result = monotonicity_sweep(1.0, 3.0, 1.0, h_values, max_workers=2)
        self.assertIs(result.verdict, Verdict.PASS)
        self.assertIs(result.regime, Regime.INCREASING)
        self.assertFalse(result.partial)
        lambdas = result.table.sort_values("h_or_d")["lambda"].to_numpy()
        self.assertTrue(np.all(np.diff(lambdas) >= -1e-9 * lambdas.max()))
        self.assertEqual(list(result.table.columns), TABLE_COLUMNS)

    def test_sweep_is_judged_in_absolute_h(self):
        result = monotonicity_sweep(1.0, 3.0, 1.0, [-1.0, -0.5, 0.0, 0.5, 1.0])
        self.assertIs(result.verdict, Verdict.PASS)
        table = result.table.set_index("h_or_d")
        self.assertAlmostEqual(table.loc[-1.0, "lambda"], table.loc[1.0, "lambda"], places=7)

    def test_minus_one_dimension_is_constant(self):
        result = monotonicity_sweep(1.0, -1.0, 1.0, np.linspace(0.0, 2.0, 5))
        self.assertIs(result.regime, Regime.CONSTANT)
        self.assertIs(result.verdict, Verdict.PASS)
        self.assertLess(result.max_violation, 1e-6)

    def test_anomalous_dimension_skips_points_outside_support(self):
        result = monotonicity_sweep(0.0, -0.5, 1.0, [0.1, 1.0, 10.0])
        self.assertIs(result.regime, Regime.DECREASING)
        self.assertIs(result.verdict, Verdict.PASS)
        self.assertTrue(result.partial)
        self.assertEqual([value for value, _ in result.skipped], [10.0])
        row = result.table[result.table["h_or_d"] == 10.0].iloc[0]
        self.assertEqual(row["verdict_flag"], "skipped")
        self.assertTrue(pd.isna(row["lambda"]))

    def test_single_valid_point_is_inconclusive(self):
        result = monotonicity_sweep(0.0, -0.5, 1.0, [0.5, 10.0])
        self.assertIs(result.verdict, Verdict.INCONCLUSIVE)

    def test_result_dictionary_matches_schema(self):
        data = monotonicity_sweep(0.0, -0.5, 1.0, [0.1, 1.0, 10.0]).to_dict()
        self.assertEqual(data["rows"][-1]["lambda"], None)
        self.assertEqual(data["N"], -0.5)
        validate_payload(self, data, "sweep_result")

class TestMonotonicityFamilies(unittest.TestCase):
    """Test cases for |h| sweeps across every dimension regime"""

    def setUp(self):
        """Set up test fixtures"""
        # [-1/2, 1/2] stays inside the support of every family for |h| <= 1.5
        self.families = [(1.0, 3.0), (-1.0, 3.0), (1.0, INF), (0.0, -0.5), (1.0, -2.0), (1.0, -1.0)]
        self.h_values = np.linspace(0.0, 1.5, 15)

    def test_fifteen_point_sweeps_follow_regime(self):
        for K, N in self.families:
            with self.subTest(K=K, N=N):
                result = monotonicity_sweep(K, N, 1.0, self.h_values, max_workers=2)
                self.assertIs(result.regime, h_regime(N))
                self.assertIs(result.verdict, Verdict.PASS)
                self.assertEqual(result.skipped, [])
                self.assertEqual(len(result.table), 15)
                if result.regime is Regime.CONSTANT:
                    self.assertLess(result.max_violation, 1e-6)

    def test_regimes_are_strict_away_from_constant_case(self):
        for K, N in [(1.0, 3.0), (0.0, -0.5)]:
            with self.subTest(K=K, N=N):
                lambdas = monotonicity_sweep(K, N, 1.0, [0.0, 1.5]).table.sort_values("h_or_d")["lambda"]
                first, last = lambdas.to_numpy()
                if h_regime(N) is Regime.INCREASING:
                    self.assertGreater(last, first)
                else:
                    self.assertLess(last, first)


class TestNestedIntervals(unittest.TestCase):
    """Test cases for eigenvalues on nested subintervals of random model measures"""

    def setUp(self):
        """Set up test fixtures"""
        self.measures = random_regular_measures(count=10)

    def test_shrinking_interval_never_lowers_eigenvalue(self):
        violations = []
        for measure in self.measures:
            a, b = measure.interval
            lambdas = [sl_first_eigenvalue(measure.restricted(a + s * (b - a), b - s * (b - a) / 2.0)).eigenvalue
                       for s in (0.0, 0.1, 0.2, 0.3, 0.4)]
            for outer, inner in zip(lambdas, lambdas[1:]):
                if inner < outer * (1.0 - 1e-7):
                    violations.append((measure.to_dict(), outer, inner))
        self.assertEqual(violations, [])

    def test_diameter_sweeps_pass(self):
        for measure in self.measures:
            d = measure.b - measure.a
            with self.subTest(measure=measure.to_dict()):
                result = diameter_sweep(measure.cd.K, measure.cd.N, measure.h, np.linspace(0.4, 1.0, 7) * d)
                self.assertIs(result.verdict, Verdict.PASS)
                self.assertEqual(result.skipped, [])


class TestDiameterSweep(unittest.TestCase):
    """Test cases for diameter_sweep"""

    def test_flat_density_follows_pi_squared_over_d_squared(self):
        result = diameter_sweep(0.0, 2.0, 0.0, [1.0, 2.0, 3.0, 4.0])
        self.assertIs(result.verdict, Verdict.PASS)
        self.assertIs(result.regime, Regime.DECREASING)
        for record in result.table.to_dict(orient="records"):
            with self.subTest(d=record["h_or_d"]):
                self.assertAlmostEqual(record["lambda"] * record["h_or_d"] ** 2 / math.pi ** 2, 1.0, places=7)

    def test_non_positive_length_is_skipped(self):
        result = diameter_sweep(0.0, 2.0, 0.0, [0.0, 1.0, 2.0])
        self.assertEqual(len(result.skipped), 1)
        self.assertIn("DOMAIN_ERROR", result.skipped[0][1])


class TestVerdict(unittest.TestCase):
    """Test cases for the verdict on a tabulated sweep"""

    def setUp(self):
        """Set up test fixtures"""
        self.sweeper = MonotonicitySweeper()

    def frame(self, values):
        return pd.DataFrame({"h_or_d": np.arange(len(values), dtype=float), "lambda": values})

    def test_wrong_direction_fails(self):
        verdict, worst, offenders = self.sweeper._verdict(self.frame([3.0, 2.0, 2.5]), Regime.INCREASING)
        self.assertIs(verdict, Verdict.FAIL)
        self.assertAlmostEqual(worst, 1.0 / 3.0)
        self.assertEqual(offenders, [1])

    def test_decreasing_passes_within_slack(self):
        verdict, worst, offenders = self.sweeper._verdict(self.frame([3.0, 2.0, 2.0 + 1e-9]), Regime.DECREASING)
        self.assertIs(verdict, Verdict.PASS)
        self.assertEqual(offenders, [])

    def test_constant_regime_uses_relative_spread(self):
        verdict, spread, _ = self.sweeper._verdict(self.frame([1.0, 1.0 + 1e-8, 1.0]), Regime.CONSTANT)
        self.assertIs(verdict, Verdict.PASS)
        verdict, spread, offenders = self.sweeper._verdict(self.frame([1.0, 1.1, 1.0]), Regime.CONSTANT)
        self.assertIs(verdict, Verdict.FAIL)
        self.assertEqual(len(offenders), 3)


if __name__ == '__main__':
    unittest.main()
