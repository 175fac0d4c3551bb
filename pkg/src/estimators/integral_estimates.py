"""
Two-sided estimates of Gaussian-type integrals

Brackets used when bounding the Hardy suprema of e^{+-k x^2/2} densities in
closed form. Each bracket also records the adaptive quadrature value.
"""

import math
from dataclasses import dataclass

from scipy import integrate

from ..core.exceptions import DomainError


@dataclass(frozen=True)
class IntegralBracket:
    lower: float
    upper: float
    value: float   # adaptive quadrature

    @property
    def ratio(self) -> float:
        return self.upper / self.lower

    def contains(self, value: float, rel_tol: float = 1e-12) -> bool:
        return self.lower * (1 - rel_tol) <= value <= self.upper * (1 + rel_tol)


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not (value > 0 and math.isfinite(value)):
            raise DomainError(name, value, f"{name} must be positive and finite, got {value}")


def integral_estimate_exp_square(k: float, R: float) -> IntegralBracket:
    """int_0^R e^{k x^2/2} dx within [(e^{kR^2/2}-1)/(kR), 2 (e^{kR^2/2}-1)/(kR)]."""
    _require_positive(k=k, R=R)
    chord = math.expm1(k * R * R / 2.0) / (k * R)
    value, _ = integrate.quad(lambda x: math.exp(k * x * x / 2.0), 0.0, R, epsabs=0.0, epsrel=1e-12)
    return IntegralBracket(chord, 2.0 * chord, value)


def integral_estimate_gaussian(k: float, R: float) -> IntegralBracket:
    """int_0^R e^{-k x^2/2} dx within [e^{-1/2} m, sqrt(pi/2) m], m = min(1/sqrt k, R)."""
    _require_positive(k=k, R=R)
    m = min(1.0 / math.sqrt(k), R)
    value = math.sqrt(math.pi / (2.0 * k)) * math.erf(R * math.sqrt(k / 2.0))
    return IntegralBracket(math.exp(-0.5) * m, math.sqrt(math.pi / 2.0) * m, value)


def integral_estimate_segment(k: float, a: float, b: float, sign: int = 1) -> IntegralBracket:
    """int_a^b e^{sign k x^2/2} dx for 0 < a < b, bracketed by dividing the exact x-weighted integral by b and a."""
    _require_positive(k=k, a=a, b=b)
    if not a < b:
        raise DomainError("interval", (a, b), f"Need 0 < a < b, got a={a}, b={b}")
    if sign not in (1, -1):
        raise DomainError("sign", sign, "sign must be +1 or -1")
    if sign > 0:
        weighted = math.exp(k * a * a / 2.0) * math.expm1(k * (b * b - a * a) / 2.0) / k
    else:
        weighted = -math.exp(-k * a * a / 2.0) * math.expm1(-k * (b * b - a * a) / 2.0) / k
    value, _ = integrate.quad(lambda x: math.exp(sign * k * x * x / 2.0), a, b, epsabs=0.0, epsrel=1e-12)
    return IntegralBracket(weighted / b, weighted / a, value)
