"""Exponential power (generalized normal) probe distributions.

The family is

    P(x) = C * exp(-2 |x / gamma|**alpha),
    C    = alpha * 2**(1/alpha) / (2 * gamma * Gamma(1/alpha)),

with shape ``alpha > 0`` and scale ``gamma > 0``: a two-sided exponential at
``alpha = 1``, a Gaussian with standard deviation ``gamma / 2`` at
``alpha = 2``, and approaching a square pulse of width ``~gamma`` as
``alpha`` grows.  All quantities are dimensionless.

A probe can alternatively be constructed from its mean energy ``<E>``, the
mean of ``p**2`` for the real wave function ``sqrt(P)``.  That mean equals
one quarter of the classical Fisher information of the location family, and
fixing it pins the scale to

    gamma = alpha * 2**(1/alpha) / (2 * sqrt(E)) * sqrt(Gamma(2 - 1/alpha) / Gamma(1/alpha)),

which is only finite for ``alpha > 1/2``.  Narrower shapes still define a
valid density; they simply cannot be normalized by energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .numerics import (
    ConvergenceError,
    DomainError,
    QuadratureSpec,
    integrate_half_line,
    log_gamma,
)

__all__ = ["ProbeDistribution"]

_LN2 = math.log(2.0)
# exp() overflow / underflow thresholds for double precision
_EXP_MAX = 709.0
_EXP_MIN = -745.0


@dataclass(frozen=True)
class ProbeDistribution:
    """Immutable exponential power density; safe to share across threads."""

    alpha: float
    gamma_scale: float
    norm_const: float

    def __post_init__(self):
        if not (self.alpha > 0.0) or not math.isfinite(self.alpha):
            raise DomainError(f"shape alpha must be positive, got {self.alpha}")
        if not (self.gamma_scale > 0.0) or not math.isfinite(self.gamma_scale):
            raise DomainError(f"scale gamma must be positive, got {self.gamma_scale}")

    @classmethod
    def from_shape_scale(cls, alpha: float, gamma_scale: float) -> "ProbeDistribution":
        """Build from shape and scale, caching the normalization prefactor."""
        if not (alpha > 0.0) or not math.isfinite(alpha):
            raise DomainError(f"shape alpha must be positive, got {alpha}")
        if not (gamma_scale > 0.0) or not math.isfinite(gamma_scale):
            raise DomainError(f"scale gamma must be positive, got {gamma_scale}")
        log_norm = (
            math.log(alpha)
            + _LN2 / alpha
            - math.log(2.0 * gamma_scale)
            - log_gamma(1.0 / alpha)
        )
        return cls(float(alpha), float(gamma_scale), math.exp(log_norm))

    @classmethod
    def from_shape_energy(cls, alpha: float, mean_energy: float) -> "ProbeDistribution":
        """Build from shape and mean energy; requires ``alpha > 1/2``."""
        if not (alpha > 0.0) or not math.isfinite(alpha):
            raise DomainError(f"shape alpha must be positive, got {alpha}")
        if alpha <= 0.5:
            raise DomainError(
                f"energy normalization needs alpha > 1/2 (mean energy diverges); got {alpha}"
            )
        if not (mean_energy > 0.0) or not math.isfinite(mean_energy):
            raise DomainError(f"mean energy must be positive, got {mean_energy}")
        gamma_scale = (
            alpha
            * 2.0 ** (1.0 / alpha)
            / (2.0 * math.sqrt(mean_energy))
            * math.sqrt(math.exp(log_gamma(2.0 - 1.0 / alpha) - log_gamma(1.0 / alpha)))
        )
        return cls.from_shape_scale(alpha, gamma_scale)

    @cached_property
    def log_norm_const(self) -> float:
        return (
            math.log(self.alpha)
            + _LN2 / self.alpha
            - math.log(2.0 * self.gamma_scale)
            - log_gamma(1.0 / self.alpha)
        )

    def log_pdf(self, x: float) -> float:
        """Log density, computed directly so large ``|x/gamma|`` cannot underflow.

        Returns ``-inf`` only when the true value lies below double range.
        """
        r = abs(x) / self.gamma_scale
        if r == 0.0:
            return self.log_norm_const
        t = self.alpha * math.log(r)
        if t >= _EXP_MAX:
            return float("-inf")
        return self.log_norm_const - 2.0 * math.pow(r, self.alpha)

    def pdf(self, x: float) -> float:
        lp = self.log_pdf(x)
        return math.exp(lp) if lp > _EXP_MIN else 0.0

    def score(self, x: float) -> float:
        """Logarithmic derivative of the density,

            d/dx ln P(x) = -sign(x) * 2 * alpha * |x|**(alpha-1) / gamma**alpha.

        Zero at the origin for ``alpha > 1`` (true derivative); for fainter
        shapes the origin is a cusp and the score is undefined there.
        """
        if x == 0.0:
            if self.alpha > 1.0:
                return 0.0
            raise DomainError(
                f"score undefined at x = 0 for alpha = {self.alpha} <= 1 (cusp)"
            )
        log_mag = self.log_score_magnitude(abs(x))
        if log_mag >= _EXP_MAX:
            return -math.copysign(float("inf"), x)
        return -math.copysign(math.exp(log_mag), x)

    def log_score_magnitude(self, ax: float) -> float:
        """log |score| at ``|x| = ax > 0``; building block for moment integrands."""
        return (
            math.log(2.0 * self.alpha)
            + (self.alpha - 1.0) * math.log(ax)
            - self.alpha * math.log(self.gamma_scale)
        )

    def mean_energy_quadrature(self, spec: QuadratureSpec | None = None) -> float:
        """Mean energy as the quadrature (1/4) * integral of P * score**2.

        Folded onto [0, inf) -- the integrand is even -- so the origin,
        where the score diverges for ``alpha < 1``, is a panel endpoint.
        """
        if self.alpha <= 0.5:
            raise DomainError(
                f"mean energy diverges for alpha = {self.alpha} <= 1/2"
            )
        spec = (spec or QuadratureSpec()).with_splits(
            (self.gamma_scale, 4.0 * self.gamma_scale)
        )

        def integrand(u: float) -> float:
            if u == 0.0:
                return 0.0
            arg = self.log_pdf(u) + 2.0 * self.log_score_magnitude(u)
            if arg <= _EXP_MIN:
                return 0.0
            if arg >= _EXP_MAX:
                return float("inf")
            return math.exp(arg)

        result = integrate_half_line(integrand, spec)
        if not result.converged:
            raise ConvergenceError(
                f"mean energy quadrature did not converge for alpha={self.alpha}, "
                f"gamma={self.gamma_scale}",
                result,
            )
        return 0.5 * result.value

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw ``n`` independent values.

        Uses the exact transform x = sign * gamma * (g / 2)**(1/alpha) with
        ``g`` a standard gamma variate of shape ``1/alpha``: by change of
        variables the gamma density maps exactly onto the probe density.
        The gamma draw happens before the sign draw; keep that order for
        stream-for-stream reproducibility.
        """
        if n < 1:
            raise DomainError(f"sample count must be at least 1, got {n}")
        g = rng.standard_gamma(1.0 / self.alpha, size=n)
        signs = 2.0 * rng.integers(0, 2, size=n) - 1.0
        return signs * self.gamma_scale * (0.5 * g) ** (1.0 / self.alpha)
