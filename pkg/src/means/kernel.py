"""
Distortion coefficients and distorted means

Implements the extended-valued interpolation kernel of the synthetic
curvature-dimension condition on the line:
- sigma and tau distortion coefficients
- Distorted means M (dimension parameter calN) and M-tilde (dimension N)
- Classical weighted power means

Infinite values are produced by explicit branches; no 0*inf or inf-inf
expression is ever evaluated.
"""

import math
import sys

from scipy.special import logsumexp

from ..core.exceptions import DomainError
from .dimension import INF, is_inf

PI_SQUARED = math.pi ** 2
NEAR_SINGULAR = 1e-12   # kappa within this of pi**2 takes the limit branch
LOG_FLOAT_MAX = math.log(sys.float_info.max)


def _check_t(t: float) -> None:
    if not 0.0 <= t <= 1.0:
        raise DomainError("t", t, f"t must lie in [0, 1], got {t}")


def _check_nonnegative(name: str, value: float) -> None:
    if math.isnan(value) or value < 0:
        raise DomainError(name, value, f"{name} must be non-negative, got {value}")


def _sinh_ratio(t: float, s: float) -> float:
    """sinh(t*s)/sinh(s) without overflow."""
    if t == 1.0:
        return 1.0
    return math.exp((t - 1.0) * s) * math.expm1(-2.0 * t * s) / math.expm1(-2.0 * s)


def sigma(t: float, K: float, calN: float, theta: float) -> float:
    """
    Distortion coefficient sigma^{(t)}_{K,calN}(theta)

    Args:
        t: Interpolation time in [0, 1]
        K: Curvature parameter
        calN: Dimension parameter with calN <= -1 or calN >= 0 (INF allowed)
        theta: Non-negative distance

    Returns:
        float: Coefficient value, INF when (K/calN) theta**2 >= pi**2
    """
    _check_t(t)
    _check_nonnegative("theta", theta)
    if math.isnan(calN) or -1.0 < calN < 0.0:
        raise DomainError("calN", calN, f"calN must satisfy calN <= -1 or calN >= 0, got {calN}")

    if calN == 0 or math.isinf(calN) or K == 0 or theta == 0:
        return t

    kappa = (K / calN) * theta ** 2
    if kappa >= PI_SQUARED - NEAR_SINGULAR:
        return INF
    if kappa > 0:
        root = math.sqrt(kappa)
        return math.sin(t * root) / math.sin(root)
    return _sinh_ratio(t, math.sqrt(-kappa))


def tau(t: float, K: float, N: float, theta: float) -> float:
    """Distortion coefficient tau^{(t)}_{K,N}(theta) = t^{1/N} sigma_{K,N-1}^{(t)}(theta)^{1-1/N}."""
    _check_t(t)
    if math.isnan(N) or 0.0 < N < 1.0:
        raise DomainError("N", N, f"tau requires N in (-inf, 0] U [1, inf], got {N}")

    if is_inf(N) or N == 1.0:
        return t

    coefficient = sigma(t, K, N - 1.0, theta)
    if math.isinf(coefficient):
        return INF
    if t == 0.0:
        return 0.0

    if N == 0.0:
        # tau = sigma * (sigma/t)^{-1/N} with -1/N -> +inf
        ratio = coefficient / t
        if abs(ratio - 1.0) <= NEAR_SINGULAR:
            return coefficient
        return INF if ratio > 1.0 else 0.0

    return math.exp(math.log(t) / N + (1.0 - 1.0 / N) * math.log(coefficient))


def _gaussian_mean(t: float, K: float, d: float, a: float, b: float) -> float:
    if t == 0.0:
        return a
    if t == 1.0:
        return b
    return _exp((1.0 - t) * math.log(a) + t * math.log(b) + K * t * (1.0 - t) * d ** 2 / 2.0)


def _exp(log_value: float) -> float:
    """exp saturating to INF instead of raising OverflowError."""
    if log_value >= LOG_FLOAT_MAX:
        return INF
    return math.exp(log_value)


def _power_combination(weight_a: float, weight_b: float, a: float, b: float, exponent: float) -> float:
    """
    (w_a a^{1/e} + w_b b^{1/e})^e with e negative or positive

    Evaluated as exp(e * logsumexp(log w + log v / e)) so that exponents near 0
    or large powers saturate to 0 or INF rather than overflow.
    """
    terms = []
    for weight, value in ((weight_a, a), (weight_b, b)):
        if weight > 0.0:
            terms.append(math.log(weight) + math.log(value) / exponent)
    terms = [term for term in terms if term != -INF]
    if not terms:
        return INF if exponent < 0 else 0.0
    if INF in terms:
        return 0.0 if exponent < 0 else INF
    return _exp(exponent * float(logsumexp(terms)))


def distorted_mean_M(t: float, K: float, calN: float, d: float, a: float, b: float) -> float:
    """
    Distorted mean M^{(t)}_{K,calN}[d](a, b)

    Args:
        t: Interpolation time in [0, 1]
        K: Curvature parameter
        calN: Dimension parameter in (-inf, -1] U [0, inf) U {INF}
        d: Distance between the two points
        a, b: Non-negative values at the two points

    Returns:
        float: Mean value, possibly INF
    """
    _check_t(t)
    _check_nonnegative("d", d)
    _check_nonnegative("a", a)
    _check_nonnegative("b", b)
    if math.isnan(calN) or -1.0 < calN < 0.0:
        raise DomainError("calN", calN, f"M requires calN in (-inf, -1] U [0, inf], got {calN}")

    if a == 0.0 or b == 0.0:
        return 0.0
    if calN == 0.0:
        return max(a, b)
    if math.isinf(calN):
        return _gaussian_mean(t, K, d, a, b)

    kappa = (K / calN) * d ** 2
    if kappa >= PI_SQUARED - NEAR_SINGULAR:
        return INF if K > 0 else 0.0

    return _power_combination(sigma(1.0 - t, K, calN, d), sigma(t, K, calN, d), a, b, calN)


def distorted_mean_Mtilde(t: float, K: float, N: float, d: float, a: float, b: float) -> float:
    """Distorted mean M-tilde^{(t)}_{K,N}[d](a, b) built from the tau coefficients."""
    _check_t(t)
    _check_nonnegative("d", d)
    _check_nonnegative("a", a)
    _check_nonnegative("b", b)
    if math.isnan(N) or 0.0 < N < 1.0:
        raise DomainError("N", N, f"M-tilde requires N in (-inf, 0] U [1, inf], got {N}")

    if a == 0.0 or b == 0.0:
        return 0.0
    if is_inf(N):
        return _gaussian_mean(t, K, d, a, b)
    if N == 0.0:
        if t == 0.0:
            return a
        if t == 1.0:
            return b
        left = (1.0 - t) * a / sigma(1.0 - t, K, -1.0, d)
        right = t * b / sigma(t, K, -1.0, d)
        return min(left, right)
    if N == 1.0:
        return (1.0 - t) * a + t * b

    kappa = (K / (N - 1.0)) * d ** 2
    if kappa >= PI_SQUARED - NEAR_SINGULAR:
        return INF if K > 0 else 0.0

    return _power_combination(tau(1.0 - t, K, N, d), tau(t, K, N, d), a, b, N)


def classical_mean(p: float, t: float, a: float, b: float) -> float:
    """Classical weighted power mean of order p, with the min/max/geometric limits."""
    _check_t(t)
    _check_nonnegative("a", a)
    _check_nonnegative("b", b)
    if math.isnan(p):
        raise DomainError("p", p, "p must not be NaN")

    if a == 0.0 or b == 0.0:
        return 0.0
    if p == INF:
        return max(a, b)
    if p == -INF:
        return min(a, b)
    if p == 0.0:
        return _gaussian_mean(t, 0.0, 0.0, a, b)
    return _power_combination(1.0 - t, t, a, b, 1.0 / p)
