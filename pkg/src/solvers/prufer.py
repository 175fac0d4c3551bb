"""
Prufer phase shooting for Neumann eigenvalues

Solves (J f'^{(p-1)})' + lambda J f^{(p-1)} = 0, f'(a) = f'(b) = 0 through the
polar variables alpha f = e sin_p(phi), f' = e cos_p(phi):

    phi' = alpha - T(x) Theta(phi),      (log e)' = T(x) |cos_p(phi)|^p / (p-1)

with T = -(log J)' and lambda = (p-1) alpha^p. The phase is shot forward from
phi(a) = -pi_p/2 and backward from phi(b) = +pi_p/2; the difference of the two
phases at the midpoint increases strictly with alpha, equals -pi_p at alpha = 0,
and vanishes exactly at the first nonzero eigenvalue.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

import numpy as np
from scipy import integrate, optimize

from ..core.config import SolverConfig
from ..core.exceptions import SolverError
from ..density.models import GridDensity
from .models import EigenResult
from .ptrig import PTrig, get_ptrig
from .rayleigh import quotient_from_samples
from .weights import Measure, Weight, as_weight

MONOTONE_SLACK = 1e-6


@dataclass
class ShootingOutcome:
    """Converged shooting parameter."""
    alpha: float
    residual: float
    iterations: int
    bracket: Tuple[float, float]


class PhaseShooter:
    """Two-sided phase shooting on a finite interval with positive weight."""

    def __init__(self, weight: Weight, p: float = 2.0, tol: float = 1e-8,
                 config: Optional[SolverConfig] = None):
        self.weight = weight
        self.trig: PTrig = get_ptrig(p)
        self.p = self.trig.p
        self.tol = tol
        self.config = config or SolverConfig()
        self.a, self.b = weight.interval
        self.midpoint = 0.5 * (self.a + self.b)
        self.rtol = max(tol / 10.0, 1e-13)
        self.method_used = self.config.ode_method
        self.evaluations = 0
        self.logger = logging.getLogger(__name__)

    def _phase_rhs(self, alpha: float) -> Callable[[float, np.ndarray], List[float]]:
        potential = self.weight.potential
        theta = self.trig.theta

        def rhs(x: float, y: np.ndarray) -> List[float]:
            return [alpha - potential(x) * theta(y[0])]

        return rhs

    def _polar_rhs(self, alpha: float) -> Callable[[float, np.ndarray], List[float]]:
        potential = self.weight.potential
        trig = self.trig
        p = self.p

        def rhs(x: float, y: np.ndarray) -> List[float]:
            drift = potential(x)
            sine, cosine = trig.sin_cos(y[0])
            if p == 2.0:
                return [alpha - drift * sine * cosine, drift * cosine * cosine]
            magnitude = abs(cosine) ** (p - 1.0)
            theta = np.sign(cosine) * magnitude * sine / (p - 1.0)
            return [alpha - drift * theta, drift * magnitude * abs(cosine) / (p - 1.0)]

        return rhs

    def _integrate(self, rhs: Callable, start: float, stop: float, y0: List[float],
                   t_eval: Optional[np.ndarray] = None) -> Any:
        methods = [self.config.ode_method]
        if self.config.fallback_method and self.config.fallback_method != self.config.ode_method:
            methods.append(self.config.fallback_method)

        message = ""
        for method in methods:
            solution = integrate.solve_ivp(
                rhs, (start, stop), y0, method=method, t_eval=t_eval,
                rtol=self.rtol, atol=self.config.phase_atol,
            )
            if solution.success:
                if method != self.method_used:
                    self.logger.warning("phase integration switched to %s on %s", method, self.weight.label)
                    self.method_used = method
                return solution
            message = solution.message
            self.logger.debug("%s integration failed on [%g, %g]: %s", method, start, stop, message)

        raise SolverError(
            "prufer shooting",
            f"phase integration failed on [{start:g}, {stop:g}]: {message}",
            diagnostics={"weight": self.weight.label, "methods": methods},
        )

    def mismatch(self, alpha: float) -> float:
        """phi_left(m) - phi_right(m); negative below the first eigenvalue."""
        self.evaluations += 1
        half = self.trig.pi_p / 2.0
        rhs = self._phase_rhs(alpha)
        left = self._integrate(rhs, self.a, self.midpoint, [-half])
        right = self._integrate(rhs, self.b, self.midpoint, [half])
        return float(left.y[0, -1] - right.y[0, -1])

    def bracket(self) -> Tuple[float, float, int]:
        """Geometric search for alpha_low < alpha_high with a sign change of the mismatch."""
        alpha = self.trig.pi_p / (self.b - self.a)
        value = self.mismatch(alpha)
        trace: List[Tuple[float, float]] = [(alpha, value)]
        if value == 0.0:
            return alpha, alpha, 1

        factor = 2.0 if value < 0 else 0.5
        for step in range(1, self.config.max_bracket_steps + 1):
            previous = alpha
            alpha *= factor
            value = self.mismatch(alpha)
            trace.append((alpha, value))
            if value == 0.0:
                return alpha, alpha, step + 1
            if (value > 0) == (factor > 1):
                self.logger.debug("bracket [%g, %g] after %d steps", min(previous, alpha), max(previous, alpha), step)
                return min(previous, alpha), max(previous, alpha), step + 1

        raise SolverError(
            "prufer shooting",
            f"no sign change of the phase mismatch after {self.config.max_bracket_steps} steps",
            diagnostics={"trace": trace[-5:], "weight": self.weight.label},
        )

    def solve(self) -> ShootingOutcome:
        low, high, steps = self.bracket()
        if low == high:
            return ShootingOutcome(low, 0.0, steps, (low, high))

        alpha_rtol = max(self.tol / (2.0 * self.p), 4.0 * np.finfo(float).eps)
        root, info = optimize.brentq(
            self.mismatch, low, high,
            xtol=1e-15 * low, rtol=alpha_rtol,
            maxiter=self.config.max_iterations, full_output=True, disp=False,
        )
        if not info.converged:
            raise SolverError(
                "prufer shooting", f"root finder did not converge: {info.flag}",
                diagnostics={"bracket": (low, high), "iterations": info.iterations},
            )
        residual = abs(self.mismatch(root))
        return ShootingOutcome(float(root), residual, steps + info.iterations, (low, high))

    def reconstruct(self, alpha: float, n_points: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Grid, phase, f and f' with int |f|^p J = 1 and f(a) < 0."""
        n = n_points if n_points % 2 == 1 else n_points + 1
        x = np.linspace(self.a, self.b, n)
        middle = n // 2
        half = self.trig.pi_p / 2.0
        rhs = self._polar_rhs(alpha)

        left = self._integrate(rhs, self.a, x[middle], [-half, 0.0], t_eval=x[: middle + 1])
        right = self._integrate(rhs, self.b, x[middle], [half, 0.0], t_eval=x[middle:][::-1])
        right_phase = right.y[0][::-1]
        right_log = right.y[1][::-1] + (left.y[1][-1] - right.y[1][-1])

        phase = np.concatenate([left.y[0], right_phase[1:]])
        log_radius = np.concatenate([left.y[1], right_log[1:]])
        log_radius -= np.max(log_radius)

        sine, cosine = self.trig.sin_cos(phase)
        radius = np.exp(log_radius)
        f = radius * sine / alpha
        derivative = radius * cosine

        weights = self.weight.density(x)
        norm = float(integrate.simpson(np.abs(f) ** self.p * weights, x=x))
        scale = norm ** (-1.0 / self.p)
        return x, phase, f * scale, derivative * scale


def solve_eigenproblem(measure: Measure, p: float, tol: float,
                       config: Optional[SolverConfig] = None) -> EigenResult:
    """Shoot, reconstruct and package the first nonzero Neumann eigenpair."""
    config = config or SolverConfig()
    weight = as_weight(measure)
    shooter = PhaseShooter(weight, p=p, tol=tol, config=config)
    outcome = shooter.solve()

    x, phase, f, derivative = shooter.reconstruct(outcome.alpha, config.eigenfunction_points)
    if p != 2.0:
        drop = float(np.min(np.diff(phase)))
        if drop < -MONOTONE_SLACK:
            raise SolverError(
                "p-Laplacian shooting", "phase is not monotone along the eigenfunction",
                diagnostics={"largest_decrease": -drop, "alpha": outcome.alpha, "weight": weight.label},
            )

    weights = weight.density(x)
    rayleigh = quotient_from_samples(x, f, derivative, weights, p)
    eigenvalue = (shooter.p - 1.0) * outcome.alpha ** shooter.p
    shooter.logger.debug(
        "lambda=%.12g on %s (p=%g, %d shooting evaluations)",
        eigenvalue, weight.label, p, shooter.evaluations,
    )

    eigenfunction = GridDensity(x0=float(x[0]), dx=float(x[1] - x[0]), values=f, signed=True)
    return EigenResult(
        eigenvalue=eigenvalue,
        phase_residual=outcome.residual,
        eigenfunction=eigenfunction,
        iterations=outcome.iterations,
        p=shooter.p,
        alpha=outcome.alpha,
        rayleigh=rayleigh,
        ode_method=shooter.method_used,
    )
