"""Input parameters and scalar building blocks of the Kerr SPM/XPM model.

The medium is a lossless electronic Kerr nonlinearity with relaxation time
``tau_r``.  Two-time noise quantities are built from the even kernels

    h(tau) = (1/tau_r) * exp(-|tau|/tau_r)
    g(tau) = (1 + |tau|/tau_r) * h(tau)

whose Fourier transforms are ``2*L(Omega)`` and ``4*L(Omega)**2`` with the
Lorentzian ``L(Omega) = 1/(1 + Omega**2)`` and reduced frequency
``Omega = omega*tau_r``.

Each pulse carries a peak mean photon number ``n_bar0``, a real envelope
``r(t)`` normalized to ``r(0) == 1``, and a (possibly time dependent) linear
phase.  The dimensionless coefficients ``gamma1``/``gamma2`` set the
self-phase modulation strength of each polarization mode and ``gamma_xpm``
the cross coupling between them.  Writing ``n_j(t) = n_bar0_j * r_j(t)**2``,
the per-pulse derived quantities are

    phi    = 2 * gamma_j * n_j(t)          self-modulation phase
    mu     = gamma_j**2 * n_j(t) / 2       self-modulation damping
    phi_x  = 2 * gamma_xpm * n_j(t)        cross-modulation phase
    mu_x   = gamma_xpm**2 * n_j(t) / 2     cross-modulation damping
    delta  = mu + mu_x
    phi_total = phi - phi_x + linear_phase_j(t)

Note the cross terms are parameterized by the pulse's *own* photon number;
this is the modeling convention used throughout the closed forms.  All of
them assume weak nonlinearity (every gamma much smaller than one) and
``MediumParams.within_approximation`` reports whether a parameter set
respects that.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

Envelope = Callable[[float], float]
PhaseFn = Callable[[float], float]


def constant_envelope(t: float) -> float:
    return 1.0


def zero_phase(t: float) -> float:
    return 0.0


def constant_phase(value: float) -> PhaseFn:
    def phase(t: float) -> float:
        return value

    return phase


def gaussian_envelope(tau_p: float) -> Envelope:
    """Gaussian envelope exp(-t^2 / (2 tau_p^2)), unit height at t=0."""
    if tau_p <= 0.0:
        raise ValueError(f"tau_p must be > 0 (got {tau_p})")

    def envelope(t: float) -> float:
        u = t / tau_p
        return math.exp(-0.5 * u * u)

    return envelope


@dataclass(frozen=True)
class MediumParams:
    """Nonlinear coefficients of the Kerr medium.

    gamma1, gamma2 : per-photon self-modulation phase of mode 1 / mode 2
    gamma_xpm     : per-photon cross-modulation phase between the modes
    tau_r         : relaxation time of the electronic response (> 0)
    """

    gamma1: float
    gamma2: float
    gamma_xpm: float
    tau_r: float = 1.0

    def __post_init__(self) -> None:
        if self.tau_r <= 0.0:
            raise ValueError(f"tau_r must be > 0 (got {self.tau_r})")
        for name in ("gamma1", "gamma2", "gamma_xpm"):
            if getattr(self, name) < 0.0:
                raise ValueError(f"{name} must be >= 0 (got {getattr(self, name)})")

    def gamma_for(self, which: int) -> float:
        if which == 1:
            return self.gamma1
        if which == 2:
            return self.gamma2
        raise ValueError(f"which must be 1 or 2 (got {which})")

    def within_approximation(self, threshold: float = 0.1) -> bool:
        """True when every nonlinear coefficient is below `threshold`.

        The closed forms are perturbative in the gammas; results computed
        outside this regime are returned anyway but flagged by callers.
        """
        return max(self.gamma1, self.gamma2, self.gamma_xpm) < threshold


@dataclass(frozen=True)
class PulseParams:
    """One polarization mode of the input field.

    n_bar0       : mean photon number at the envelope peak (>= 0)
    envelope     : r(t), must satisfy r(0) == 1
    linear_phase : deterministic phase added on top of the nonlinear ones
    """

    n_bar0: float
    envelope: Envelope = constant_envelope
    linear_phase: PhaseFn = zero_phase

    def __post_init__(self) -> None:
        if self.n_bar0 < 0.0:
            raise ValueError(f"n_bar0 must be >= 0 (got {self.n_bar0})")
        r0 = self.envelope(0.0)
        if abs(r0 - 1.0) > 1e-12:
            raise ValueError(f"envelope(0) must equal 1 (got {r0})")

    def n_bar(self, t: float = 0.0) -> float:
        r = self.envelope(t)
        return self.n_bar0 * r * r


@dataclass(frozen=True)
class DerivedPhases:
    """Per-pulse nonlinear phase/damping bundle at a fixed time."""

    phi: float
    mu: float
    phi_x: float
    mu_x: float
    delta: float
    phi_total: float


def response_h(t: float, tau_r: float) -> float:
    """Even response kernel (1/tau_r) exp(-|t|/tau_r)."""
    if tau_r <= 0.0:
        raise ValueError(f"tau_r must be > 0 (got {tau_r})")
    return math.exp(-abs(t) / tau_r) / tau_r


def correlator_g(tau: float, tau_r: float) -> float:
    """Noise correlation kernel (1 + |tau|/tau_r) h(tau); maximal at tau=0."""
    h = response_h(tau, tau_r)
    return (1.0 + abs(tau) / tau_r) * h


def lorentzian(omega_reduced: float) -> float:
    """L(Omega) = 1 / (1 + Omega^2) for the reduced frequency Omega."""
    return 1.0 / (1.0 + omega_reduced * omega_reduced)


def derived_phases(
    pulse: PulseParams, medium: MediumParams, which: int, t: float = 0.0
) -> DerivedPhases:
    """Evaluate the nonlinear phase bundle of pulse `which` (1 or 2) at time t."""
    gamma = medium.gamma_for(which)
    n_t = pulse.n_bar(t)
    phi = 2.0 * gamma * n_t
    mu = 0.5 * gamma * gamma * n_t
    phi_x = 2.0 * medium.gamma_xpm * n_t
    mu_x = 0.5 * medium.gamma_xpm * medium.gamma_xpm * n_t
    delta = mu + mu_x
    phi_total = phi - phi_x + pulse.linear_phase(t)
    return DerivedPhases(phi, mu, phi_x, mu_x, delta, phi_total)
