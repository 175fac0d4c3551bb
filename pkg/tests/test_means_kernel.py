"""
Unit tests for the curvature-dimension pair, distortion coefficients and distorted means
"""
import math
import unittest

import numpy as np

from tests.test_utils import TestConfig, assert_relative_close

from src.core.exceptions import DomainError
from src.means.dimension import INF, CurvatureDimension, is_inf, parse_extended
from src.means.kernel import (
    classical_mean,
    distorted_mean_M,
    distorted_mean_Mtilde,
    sigma,
    tau,
)

PROPERTY_SLACK = 1e-12


class TestCurvatureDimension(unittest.TestCase):
    """Test cases for CurvatureDimension"""

    def test_delta_and_l_delta(self):
        cd = CurvatureDimension(2.0, 3.0)
        self.assertAlmostEqual(cd.delta(), 1.0)
        self.assertAlmostEqual(cd.l_delta(), math.pi)

    def test_non_positive_delta_has_unbounded_l_delta(self):
        for K, N in [(0.0, 3.0), (-1.0, 3.0), (1.0, -2.0)]:
            with self.subTest(K=K, N=N):
                self.assertTrue(is_inf(CurvatureDimension(K, N).l_delta()))

    def test_negative_dimension_with_negative_curvature_has_positive_delta(self):
        cd = CurvatureDimension(-1.0, -1.0)
        self.assertAlmostEqual(cd.delta(), 0.5)
        self.assertAlmostEqual(cd.l_delta(), math.pi / math.sqrt(0.5))

    def test_infinite_dimension(self):
        cd = CurvatureDimension(1.0, INF)
        self.assertTrue(cd.infinite)
        self.assertEqual(cd.delta(), 0.0)
        self.assertEqual(str(cd), "CD(1, inf)")

    def test_rejects_dimension_in_zero_one(self):
        for N in (0.5, 1.0):
            with self.subTest(N=N):
                with self.assertRaises(DomainError):
                    CurvatureDimension(1.0, N)

    def test_rejects_non_finite_curvature(self):
        with self.assertRaises(DomainError):
            CurvatureDimension(math.inf, 3.0)
        with self.assertRaises(DomainError):
            CurvatureDimension(0.0, -math.inf)

    def test_parse_extended(self):
        self.assertTrue(is_inf(parse_extended("inf")))
        self.assertTrue(is_inf(parse_extended(" Infinity ")))
        self.assertEqual(parse_extended("-2.5"), -2.5)
        with self.assertRaises(ValueError):
            parse_extended("nan")
        with self.assertRaises(ValueError):
            parse_extended("abc")


class TestDistortionCoefficients(unittest.TestCase):
    """Test cases for sigma and tau"""

    def test_sigma_flat_cases_are_linear(self):
        for K, calN, theta in [(0.0, 3.0, 1.0), (1.0, 0.0, 1.0), (1.0, INF, 2.0), (1.0, 3.0, 0.0)]:
            with self.subTest(K=K, calN=calN, theta=theta):
                self.assertEqual(sigma(0.3, K, calN, theta), 0.3)

    def test_sigma_positive_kappa(self):
        self.assertAlmostEqual(sigma(0.5, 1.0, 1.0, 1.0), math.sin(0.5) / math.sin(1.0), places=14)

    def test_sigma_negative_kappa(self):
        self.assertAlmostEqual(sigma(0.5, -1.0, 1.0, 1.0), math.sinh(0.5) / math.sinh(1.0), places=14)

    def test_sigma_negative_kappa_large_argument_does_not_overflow(self):
        value = sigma(0.5, -1.0, 1.0, 200.0)
        self.assertTrue(math.isfinite(value))
        self.assertAlmostEqual(math.log(value), -100.0, places=8)

    def test_sigma_beyond_first_zero_is_infinite(self):
        self.assertTrue(is_inf(sigma(0.5, 1.0, 1.0, 4.0)))
        self.assertTrue(is_inf(sigma(0.5, 1.0, 1.0, math.pi)))

    def test_sigma_endpoints(self):
        self.assertEqual(sigma(0.0, 1.0, 2.0, 1.0), 0.0)
        self.assertAlmostEqual(sigma(1.0, 1.0, 2.0, 1.0), 1.0, places=14)

    def test_sigma_rejects_forbidden_dimension(self):
        with self.assertRaises(DomainError):
            sigma(0.5, 1.0, -0.5, 1.0)
        with self.assertRaises(DomainError):
            sigma(1.5, 1.0, 2.0, 1.0)
        with self.assertRaises(DomainError):
            sigma(0.5, 1.0, 2.0, -1.0)

    def test_tau_matches_definition(self):
        t, K, N, theta = 0.4, 1.0, 3.0, 1.2
        expected = t ** (1.0 / N) * sigma(t, K, N - 1.0, theta) ** (1.0 - 1.0 / N)
        self.assertAlmostEqual(tau(t, K, N, theta), expected, places=14)

    def test_tau_negative_dimension(self):
        t, K, N, theta = 0.4, 1.0, -2.0, 0.7
        expected = t ** (1.0 / N) * sigma(t, K, N - 1.0, theta) ** (1.0 - 1.0 / N)
        self.assertAlmostEqual(tau(t, K, N, theta), expected, places=12)

    def test_tau_linear_limits(self):
        self.assertEqual(tau(0.3, 2.0, INF, 1.0), 0.3)
        self.assertEqual(tau(0.3, 2.0, 1.0, 1.0), 0.3)

    def test_tau_dimension_zero_limit(self):
        self.assertAlmostEqual(tau(0.3, 0.0, 0.0, 1.0), 0.3)
        # sigma_{K,-1} exceeds t for K < 0 and falls below it for K > 0
        self.assertTrue(is_inf(tau(0.3, -1.0, 0.0, 1.0)))
        self.assertEqual(tau(0.3, 1.0, 0.0, 1.0), 0.0)

    def test_tau_rejects_dimension_between_zero_and_one(self):
        with self.assertRaises(DomainError):
            tau(0.5, 1.0, 0.5, 1.0)


class TestDistortedMeans(unittest.TestCase):
    """Test cases for the distorted and classical means"""

    def test_zero_argument_gives_zero(self):
        self.assertEqual(distorted_mean_M(0.5, 1.0, 2.0, 1.0, 0.0, 3.0), 0.0)
        self.assertEqual(distorted_mean_Mtilde(0.5, 1.0, 3.0, 1.0, 2.0, 0.0), 0.0)

    def test_flat_power_mean(self):
        # K = 0, calN = 2: ((1-t) sqrt(a) + t sqrt(b))^2
        self.assertAlmostEqual(distorted_mean_M(0.5, 0.0, 2.0, 1.0, 1.0, 4.0), 2.25, places=14)

    def test_flat_harmonic_mean(self):
        self.assertAlmostEqual(distorted_mean_M(0.5, 0.0, -1.0, 1.0, 1.0, 4.0), 1.6, places=14)

    def test_dimension_zero_is_maximum(self):
        self.assertEqual(distorted_mean_M(0.3, 5.0, 0.0, 1.0, 2.0, 7.0), 7.0)

    def test_infinite_dimension_is_gaussian_mean(self):
        t, K, d, a, b = 0.25, 2.0, 0.5, 1.5, 3.0
        expected = math.exp((1 - t) * math.log(a) + t * math.log(b) + K * t * (1 - t) * d ** 2 / 2)
        self.assertAlmostEqual(distorted_mean_M(t, K, INF, d, a, b), expected, places=13)
        self.assertAlmostEqual(distorted_mean_Mtilde(t, K, INF, d, a, b), expected, places=13)

    def test_singular_distance(self):
        self.assertTrue(is_inf(distorted_mean_M(0.5, 1.0, 1.0, 4.0, 1.0, 1.0)))
        self.assertEqual(distorted_mean_M(0.5, -1.0, -1.0, 4.0, 1.0, 1.0), 0.0)

    def test_mean_increases_with_curvature(self):
        values = [distorted_mean_M(0.5, K, 2.0, 1.0, 1.0, 2.0) for K in (-1.0, 0.0, 1.0)]
        self.assertLess(values[0], values[1])
        self.assertLess(values[1], values[2])

    def test_mtilde_dimension_one_is_arithmetic(self):
        self.assertAlmostEqual(distorted_mean_Mtilde(0.25, 3.0, 1.0, 1.0, 2.0, 6.0), 3.0)

    def test_mtilde_matches_tau_combination(self):
        t, K, N, d, a, b = 0.6, 1.0, 4.0, 0.8, 2.0, 5.0
        expected = (tau(1 - t, K, N, d) * a ** (1 / N) + tau(t, K, N, d) * b ** (1 / N)) ** N
        self.assertAlmostEqual(distorted_mean_Mtilde(t, K, N, d, a, b), expected, places=12)

    def test_classical_means(self):
        self.assertEqual(classical_mean(INF, 0.5, 1.0, 4.0), 4.0)
        self.assertEqual(classical_mean(-INF, 0.5, 1.0, 4.0), 1.0)
        self.assertAlmostEqual(classical_mean(0.0, 0.5, 1.0, 4.0), 2.0, places=14)
        self.assertAlmostEqual(classical_mean(1.0, 0.5, 1.0, 4.0), 2.5, places=14)
        self.assertAlmostEqual(classical_mean(-1.0, 0.5, 1.0, 4.0), 1.6, places=14)

    def test_rejects_invalid_arguments(self):
        with self.assertRaises(DomainError):
            distorted_mean_M(0.5, 1.0, -0.5, 1.0, 1.0, 1.0)
        with self.assertRaises(DomainError):
            distorted_mean_M(0.5, 1.0, 2.0, 1.0, -1.0, 1.0)
        with self.assertRaises(DomainError):
            classical_mean(1.0, 2.0, 1.0, 1.0)


class TestExtremeExponents(unittest.TestCase):
    """Test cases for means whose power exponent is very large"""

    def test_small_dimension_parameter_tends_to_maximum(self):
        for calN in (1e-3, 1e-6):
            with self.subTest(calN=calN):
                self.assertAlmostEqual(distorted_mean_M(0.5, 0.0, calN, 1.0, 5.0, 5.0), 5.0, places=10)
                # ((a^{1/calN} + b^{1/calN}) / 2)^calN with a << b
                expected = 5.0 * 0.5 ** calN
                assert_relative_close(self, distorted_mean_M(0.5, 0.0, calN, 1.0, 2.0, 5.0), expected, 1e-10)
                self.assertLessEqual(distorted_mean_M(0.5, 0.0, calN, 1.0, 2.0, 5.0), 5.0)

    def test_small_dimension_with_curvature(self):
        value = distorted_mean_M(0.5, 1.0, 1e-3, 0.01, 5.0, 5.0)
        self.assertTrue(math.isfinite(value))
        self.assertGreater(value, 5.0)

    def test_large_power_tends_to_extremes(self):
        for p in (500.0, 1000.0):
            with self.subTest(p=p):
                self.assertAlmostEqual(classical_mean(p, 0.5, 5.0, 5.0), 5.0, places=10)
                self.assertAlmostEqual(classical_mean(-p, 0.5, 5.0, 5.0), 5.0, places=10)
                assert_relative_close(self, classical_mean(p, 0.5, 2.0, 5.0), 5.0 * 0.5 ** (1.0 / p), 1e-10)
                assert_relative_close(self, classical_mean(-p, 0.5, 2.0, 5.0), 2.0 * 0.5 ** (-1.0 / p), 1e-10)

    def test_gaussian_mean_saturates(self):
        self.assertTrue(is_inf(distorted_mean_M(0.5, 1e6, INF, 100.0, 1.0, 1.0)))


def _at_least(lhs, rhs, slack=PROPERTY_SLACK):
    """lhs >= rhs up to a relative slack, with INF handled by branch."""
    if is_inf(lhs):
        return True
    if is_inf(rhs):
        return False
    return lhs >= rhs - slack * max(abs(lhs), abs(rhs))


def _l_delta(K, N):
    return CurvatureDimension(K, N).l_delta()


class TestMeanProperties(unittest.TestCase):
    """Test cases for the ordering properties of the distorted means on seeded random tuples"""

    def setUp(self):
        """Set up test fixtures"""
        self.rng = np.random.default_rng(TestConfig.SEED)
        self.samples = 10_000

    def draw_dimension(self):
        """N in (-inf, 0] U (1, inf], INF included."""
        kind = self.rng.integers(0, 5)
        if kind == 0:
            return INF
        if kind in (1, 2):
            return float(self.rng.uniform(1.2, 20.0))
        return float(-self.rng.uniform(0.05, 10.0))

    def draw_distance(self, K, N):
        limit = _l_delta(K, N)
        if is_inf(limit):
            return float(self.rng.uniform(0.01, 3.0))
        return float(self.rng.uniform(0.01, 0.95) * limit)

    def draw_value(self):
        return float(np.exp(self.rng.uniform(np.log(0.1), np.log(10.0))))

    def draw_common(self):
        t = float(self.rng.uniform(0.01, 0.99))
        K = float(self.rng.uniform(-2.0, 2.0))
        N = self.draw_dimension()
        return t, K, N, self.draw_distance(K, N)

    def test_product_inequality(self):
        violations = []
        for _ in range(self.samples):
            t, K, N, d = self.draw_common()
            a1, b1, a2, b2 = (self.draw_value() for _ in range(4))
            calN = INF if is_inf(N) else N - 1.0
            lhs = distorted_mean_M(t, K, calN, d, a1, b1) * classical_mean(1.0, t, a2, b2)
            rhs = distorted_mean_Mtilde(t, K, N, d, a1 * a2, b1 * b2)
            if not _at_least(lhs, rhs):
                violations.append((t, K, N, d, a1, b1, a2, b2))
        self.assertEqual(violations, [])

    def test_distance_monotonicity_follows_curvature_sign(self):
        violations = []
        for _ in range(self.samples):
            t, K, N, d = self.draw_common()
            shorter = float(self.rng.uniform(0.0, 1.0)) * d
            a, b = self.draw_value(), self.draw_value()
            near = distorted_mean_Mtilde(t, K, N, shorter, a, b)
            far = distorted_mean_Mtilde(t, K, N, d, a, b)
            holds = _at_least(far, near) if K >= 0 else _at_least(near, far)
            if not holds:
                violations.append((t, K, N, shorter, d, a, b))
        self.assertEqual(violations, [])

    def test_argument_monotonicity(self):
        violations = []
        for _ in range(self.samples):
            t, K, N, d = self.draw_common()
            a, b = self.draw_value(), self.draw_value()
            factor = float(self.rng.uniform(1.0, 3.0))
            base = distorted_mean_Mtilde(t, K, N, d, a, b)
            if not (_at_least(distorted_mean_Mtilde(t, K, N, d, a * factor, b), base)
                    and _at_least(distorted_mean_Mtilde(t, K, N, d, a, b * factor), base)):
                violations.append((t, K, N, d, a, b, factor))
        self.assertEqual(violations, [])

    def test_dimension_monotonicity_in_reciprocal(self):
        # 1/N ranges over [-inf, 1): -inf is N = 0 and 0 is N = INF
        def from_reciprocal(u):
            if u == -INF:
                return 0.0
            return INF if u == 0.0 else 1.0 / u

        violations = []
        for _ in range(self.samples):
            t = float(self.rng.uniform(0.01, 0.99))
            K = float(self.rng.uniform(-2.0, 2.0))
            d = float(self.rng.uniform(0.01, 2.0))
            a, b = self.draw_value(), self.draw_value()
            pair = []
            for _ in range(2):
                kind = self.rng.integers(0, 8)
                u = -INF if kind == 0 else 0.0 if kind == 1 else float(self.rng.uniform(-5.0, 0.9))
                pair.append(0.0 if abs(u) < 0.01 else u)
            low, high = sorted(pair)
            N_low, N_high = from_reciprocal(low), from_reciprocal(high)
            calN_low = INF if is_inf(N_low) else N_low - 1.0
            calN_high = INF if is_inf(N_high) else N_high - 1.0
            if not (_at_least(distorted_mean_M(t, K, calN_high, d, a, b), distorted_mean_M(t, K, calN_low, d, a, b))
                    and _at_least(distorted_mean_Mtilde(t, K, N_high, d, a, b),
                                  distorted_mean_Mtilde(t, K, N_low, d, a, b))):
                violations.append((t, K, N_low, N_high, d, a, b))
        self.assertEqual(violations, [])

    def test_positive_curvature_blows_up_at_l_delta(self):
        K, N = 2.0, 3.0
        limit = _l_delta(K, N)
        values = [distorted_mean_Mtilde(0.4, K, N, limit * (1.0 - eps), 1.5, 2.5)
                  for eps in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5)]
        for previous, current in zip(values, values[1:]):
            self.assertGreater(current, previous)
        self.assertGreater(values[-1], 1e6)
        self.assertTrue(is_inf(distorted_mean_Mtilde(0.4, K, N, limit, 1.5, 2.5)))

    def test_negative_curvature_vanishes_at_l_delta(self):
        K, N = -1.0, -2.0
        limit = _l_delta(K, N)
        values = [distorted_mean_Mtilde(0.4, K, N, limit * (1.0 - eps), 1.5, 2.5)
                  for eps in (1e-1, 1e-2, 1e-3, 1e-4, 1e-5)]
        for previous, current in zip(values, values[1:]):
            self.assertLess(current, previous)
        self.assertLess(values[-1], 1e-9)
        self.assertEqual(distorted_mean_Mtilde(0.4, K, N, limit, 1.5, 2.5), 0.0)
        self.assertEqual(distorted_mean_Mtilde(0.4, K, N, limit * 1.1, 1.5, 2.5), 0.0)

    def test_sigma_at_zero_distance_is_linear(self):
        for _ in range(1000):
            t = float(self.rng.uniform(0.0, 1.0))
            K = float(self.rng.uniform(-10.0, 10.0))
            calN = self.draw_dimension()
            if not is_inf(calN) and -1.0 < calN < 0.0:
                calN = -1.0
            with self.subTest(t=t, K=K, calN=calN):
                self.assertEqual(sigma(t, K, calN, 0.0), t)


if __name__ == '__main__':
    unittest.main()
