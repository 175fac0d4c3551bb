"""
Test configuration and utilities
"""
import json
import math
import os
import sys
import unittest

import numpy as np

# Repository root on the Python path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.density.model_density import model_support, sample_density
from src.density.models import GridDensity, ModelMeasure
from src.means.dimension import INF, CurvatureDimension

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), '..', 'schemas', 'results.schema.json')


class TestConfig:
    """Test configuration constants"""
    SUPPORTED_LANGUAGES = ['en', 'zh']
    SUPPORTED_FORMATS = ['text', 'json', 'csv']
    SEED = 12345
    EIGEN_RTOL = 1e-6          # Relative agreement required of eigenvalue solves
    CLOSED_FORM_RTOL = 1e-7
    # Regular (K, N, h) triples with [-d/2, d/2] inside the support for d = 1
    REGULAR_TRIPLES = [
        (1.0, 3.0, 0.0), (1.0, 3.0, 1.0), (-1.0, 4.0, 0.5), (0.0, 2.0, 0.3),
        (1.0, INF, 0.5), (-2.0, INF, -1.0), (1.0, -2.0, 0.2), (-1.0, -0.5, 0.1),
    ]


class MockDensities:
    """Sampled densities for checker and estimator tests"""

    @staticmethod
    def uniform(a=0.0, b=1.0, n_points=201):
        return GridDensity(x0=a, dx=(b - a) / (n_points - 1), values=np.ones(n_points))

    @staticmethod
    def gaussian(K=1.0, half_width=6.0, n_points=2001, h=0.0):
        """e^{h x - K x^2/2} on [-half_width, half_width]."""
        x = np.linspace(-half_width, half_width, n_points)
        values = np.exp(h * x - K * x ** 2 / 2.0)
        return GridDensity(x0=float(x[0]), dx=float(x[1] - x[0]), values=values)

    @staticmethod
    def anti_gaussian(half_width=1.0, n_points=401):
        """e^{x^2/2}, which has curvature -1 in the Bakry-Emery sense."""
        x = np.linspace(-half_width, half_width, n_points)
        return GridDensity(x0=float(x[0]), dx=float(x[1] - x[0]), values=np.exp(x ** 2 / 2.0))

    @staticmethod
    def model(K, N, h=0.0, d=1.0, n_points=401):
        """Sampled J_{K,N,h} on [-d/2, d/2]."""
        return sample_density(model_measure(K, N, h, d), n_points)


def model_measure(K, N, h=0.0, d=1.0):
    """Model measure on the symmetric interval [-d/2, d/2]."""
    return ModelMeasure(CurvatureDimension(K, N), h, -d / 2.0, d / 2.0)


def random_regular_measures(count=5, seed=TestConfig.SEED):
    """Seeded random model measures whose interval keeps a margin of 1/2 inside the support."""
    rng = np.random.default_rng(seed)
    measures = []
    while len(measures) < count:
        K = float(rng.uniform(-2.0, 2.0))
        N = float(rng.choice([2.5, 3.0, 5.0, INF, -2.0, -0.5]))
        h = float(rng.uniform(-1.0, 1.0))
        d = float(rng.uniform(0.5, 1.5))
        low, high = model_support(CurvatureDimension(K, N), h)
        if not (low < -d / 2.0 - 0.5 and d / 2.0 + 0.5 < high):
            continue
        if K < 0 and N <= 0 and not d < CurvatureDimension(K, N).l_delta():
            continue
        measures.append(model_measure(K, N, h, d))
    return measures


def mpmath_model_density(K, N, h, x, digits=30):
    """High-precision reference value of J_{K,N,h}(x)."""
    import mpmath

    with mpmath.workdps(digits):
        K, h, x = mpmath.mpf(K), mpmath.mpf(h), mpmath.mpf(x)
        if math.isinf(N):
            return float(mpmath.exp(h * x - K * x ** 2 / 2))
        N = mpmath.mpf(N)
        delta = K / (N - 1)
        if delta > 0:
            root = mpmath.sqrt(delta)
            base = mpmath.cos(root * x) + h / (N - 1) * mpmath.sin(root * x) / root
        elif delta < 0:
            root = mpmath.sqrt(-delta)
            base = mpmath.cosh(root * x) + h / (N - 1) * mpmath.sinh(root * x) / root
        else:
            base = 1 + h / (N - 1) * x
        return float(base ** (N - 1))


def mpmath_pi_p(p, digits=30):
    """2 * int_0^1 (1 - s^p)^{-1/p} ds in high precision."""
    import mpmath

    with mpmath.workdps(digits):
        p = mpmath.mpf(p)
        return float(2 * mpmath.quad(lambda s: (1 - s ** p) ** (-1 / p), [0, 1]))


def mpmath_sin_p_inverse(p, y, digits=30):
    """int_0^y (1 - s^p)^{-1/p} ds, the inverse of sin_p on [0, 1]."""
    import mpmath

    with mpmath.workdps(digits):
        p = mpmath.mpf(p)
        return float(mpmath.quad(lambda s: (1 - s ** p) ** (-1 / p), [0, y]))


def load_schema():
    with open(SCHEMA_PATH, 'r', encoding='utf-8') as f:
        return json.load(f)


def validate_payload(test_case, payload, kind):
    """Assert that a JSON payload satisfies one definition of the results schema."""
    try:
        import jsonschema
    except ImportError:
        test_case.skipTest("jsonschema not installed")
    schema = load_schema()
    wrapped = {"$schema": schema["$schema"], "$ref": f"#/$defs/{kind}", "$defs": schema["$defs"]}
    jsonschema.validate(payload, wrapped)


def assert_relative_close(test_case, actual, expected, rtol, msg=None):
    """Relative comparison that also accepts expected == 0 with an absolute floor."""
    scale = max(abs(expected), 1e-300)
    test_case.assertLessEqual(abs(actual - expected) / scale if expected != 0 else abs(actual), rtol,
                              msg or f"{actual} differs from {expected} by more than rtol={rtol}")


def assert_bound_result_structure(test_case, result_dict):
    """Assert that a bound result dictionary has the expected structure"""
    for key in ('value', 'case_label', 'method', 'exactness', 'diagnostics'):
        test_case.assertIn(key, result_dict, f"Missing key: {key}")
    test_case.assertIn(result_dict['exactness'], ('exact', 'up_to_constants'))


def skip_without(module_name):
    """unittest skip decorator for optional test dependencies."""
    try:
        __import__(module_name)
        return lambda obj: obj
    except ImportError:
        return unittest.skip(f"{module_name} not installed")
