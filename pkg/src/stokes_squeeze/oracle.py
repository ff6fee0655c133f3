"""Independent quadrature route from correlations to spectra.

This module deliberately avoids the closed-form spectrum expressions: it
recovers spectra by numerically cosine-transforming the smooth part of a
:class:`~stokes_squeeze.spectra.CorrelationSample` and adding the delta
weight.  Tests compare this route against the closed forms; the two must
never be merged.
"""
from __future__ import annotations

from dataclasses import dataclass

from scipy.integrate import quad

from .params import lorentzian
from .spectra import CorrelationSample

# lags (in units of tau_r) probed for evenness before integrating
_EVENNESS_PROBES = (0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 8.0, 13.0)
_EVENNESS_TOL = 1e-10


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for the cosine-transform quadrature.

    window           : integration upper limit in units of tau_r
    rel_tol          : relative tolerance passed to the integrator
    max_subdivisions : interval subdivision budget before giving up
    """

    window: float = 40.0
    rel_tol: float = 1e-9
    max_subdivisions: int = 200

    def __post_init__(self) -> None:
        if self.window <= 0.0:
            raise ValueError(f"window must be > 0 (got {self.window})")
        if self.rel_tol <= 0.0:
            raise ValueError(f"rel_tol must be > 0 (got {self.rel_tol})")
        if self.max_subdivisions < 1:
            raise ValueError(
                f"max_subdivisions must be >= 1 (got {self.max_subdivisions})"
            )


class QuadratureConvergenceError(RuntimeError):
    """Raised when the integrator cannot meet tolerance; keeps its best guess."""

    def __init__(self, message: str, best_estimate: float) -> None:
        super().__init__(message)
        self.best_estimate = best_estimate


def transform_h(omega_reduced: float) -> float:
    """Cosine transform of the response kernel h: 2 L(Omega)."""
    return 2.0 * lorentzian(omega_reduced)


def transform_g(omega_reduced: float) -> float:
    """Cosine transform of the correlation kernel g: 4 L(Omega)^2."""
    lor = lorentzian(omega_reduced)
    return 4.0 * lor * lor


def wiener_khintchine(
    corr: CorrelationSample,
    omega_reduced: float,
    spec: QuadratureSpec = QuadratureSpec(),
) -> float:
    """Spectrum at reduced frequency Omega by direct numerical transform.

    Computes delta_weight + 2 * integral_0^window smooth(tau) cos(w tau) dtau,
    relying on evenness of the smooth part (checked on a fixed probe set).
    """
    for lag in _EVENNESS_PROBES:
        tau = lag * corr.tau_r
        left = corr.smooth(-tau)
        right = corr.smooth(tau)
        scale = max(1.0, abs(left), abs(right))
        if abs(left - right) > _EVENNESS_TOL * scale:
            raise ValueError(
                f"correlation smooth part is not even at tau={tau!r}: "
                f"{left!r} != {right!r}"
            )

    omega = omega_reduced / corr.tau_r
    upper = spec.window * corr.tau_r
    out = quad(
        corr.smooth,
        0.0,
        upper,
        weight="cos",
        wvar=omega,
        epsabs=1e-300,
        epsrel=spec.rel_tol,
        limit=spec.max_subdivisions,
        full_output=1,
    )
    value = corr.delta_weight + 2.0 * out[0]
    if len(out) > 3:
        raise QuadratureConvergenceError(str(out[3]), best_estimate=value)
    return value
