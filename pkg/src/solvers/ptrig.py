"""
Generalized p-trigonometric functions

sin_p is defined implicitly by x = int_0^{sin_p x} ds / (1 - s^p)^{1/p} on the
quarter period [0, pi_p/2] and extended by symmetry to a 2 pi_p periodic odd
function; cos_p is its derivative, so |sin_p|^p + |cos_p|^p = 1.

The defining integral is a regularized incomplete beta integral, so the
inversion is evaluated exactly with scipy.special.betaincinv.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

import numpy as np
from scipy import special

from ..core.exceptions import DomainError

ArrayLike = Union[float, np.ndarray]


def pi_p(p: float) -> float:
    """pi_p = 2 pi / (p sin(pi/p)); pi_2 = pi."""
    if not p > 1:
        raise DomainError("p", p, f"p must be greater than 1, got {p}")
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


@dataclass(frozen=True)
class PTrig:
    """p-trigonometric functions for a fixed exponent p > 1."""
    p: float

    def __post_init__(self) -> None:
        if not self.p > 1 or not math.isfinite(self.p):
            raise DomainError("p", self.p, f"p must be a finite real greater than 1, got {self.p}")

    @property
    def pi_p(self) -> float:
        return pi_p(self.p)

    def _quarter(self, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """sin_p and cos_p at fraction r in [0, 1] of the quarter period."""
        a = 1.0 / self.p
        sine = special.betaincinv(a, 1.0 - a, r) ** a
        cosine = special.betaincinv(1.0 - a, a, 1.0 - r) ** a
        return sine, cosine

    def sin_cos(self, x: ArrayLike) -> Tuple[ArrayLike, ArrayLike]:
        """(sin_p(x), cos_p(x)) with the periodic extension."""
        points = np.asarray(x, dtype=float)
        if self.p == 2.0:
            sine, cosine = np.sin(points), np.cos(points)
        else:
            period = self.pi_p
            half = period / 2.0
            y = np.mod(points + half, 2.0 * period) - half
            upper = y > half
            y = np.where(upper, period - y, y)
            r = np.clip(np.abs(y) / half, 0.0, 1.0)
            sine, cosine = self._quarter(r)
            sine = np.sign(y) * sine
            cosine = np.where(upper, -cosine, cosine)
        if np.ndim(x) == 0:
            return float(sine), float(cosine)
        return sine, cosine

    def sin_p(self, x: ArrayLike) -> ArrayLike:
        return self.sin_cos(x)[0]

    def cos_p(self, x: ArrayLike) -> ArrayLike:
        return self.sin_cos(x)[1]

    def theta(self, phi: ArrayLike) -> ArrayLike:
        """Theta(phi) = cos_p^{(p-1)}(phi) sin_p(phi) / (p-1), with signed powers."""
        sine, cosine = self.sin_cos(phi)
        if self.p == 2.0:
            return np.multiply(sine, cosine) if np.ndim(phi) else float(sine * cosine)
        value = np.sign(cosine) * np.abs(cosine) ** (self.p - 1.0) * sine / (self.p - 1.0)
        if np.ndim(phi) == 0:
            return float(value)
        return value


@lru_cache(maxsize=32)
def get_ptrig(p: float) -> PTrig:
    """Shared immutable PTrig instance for exponent p."""
    return PTrig(float(p))


def sin_p(p: float, x: ArrayLike) -> ArrayLike:
    return get_ptrig(p).sin_p(x)


def cos_p(p: float, x: ArrayLike) -> ArrayLike:
    return get_ptrig(p).cos_p(x)
