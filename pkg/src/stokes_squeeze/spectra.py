"""Fluctuation statistics of the S2/S3 Stokes operators.

With both input pulses coherent, the normally-ordered fluctuation
correlation of the S2 operator separates into a shot-noise delta term plus a
smooth part carried by the medium kernels:

    R(tau)/n1(t) = delta(tau) + amp_h sin(2x) h(tau) + amp_g sin(x)^2 g(tau)

where x = phi_total_1 - phi_total_2 and the phase-independent weights are

    amp_h = n_1 phi_2 - n_2 phi_1
    amp_g = n_1 (phi_2^2 + phi_x_2^2) + n_2 (phi_1^2 + phi_x_1^2)

(all derived quantities evaluated at the same time t).  Its spectrum follows
from the kernel transforms 2L and 4L^2:

    S(Omega) = 1 + 2 L(Omega) amp_h sin(2x) + 4 L(Omega)^2 amp_g sin(x)^2

and the S3 statistics are the same expressions with x -> x + pi/2.  Values
below 1 mean fluctuations squeezed below the shot-noise level; the
normalized form S* = (S - 1)/n1(t) is bounded below by -1 in the weak
nonlinearity regime.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

from .params import (
    MediumParams,
    PulseParams,
    correlator_g,
    derived_phases,
    lorentzian,
    response_h,
)

SPECTRUM_KINDS = ("raw", "normalized")


def noise_coefficients(
    p1: PulseParams, p2: PulseParams, medium: MediumParams, t: float = 0.0
) -> tuple[float, float, float]:
    """Weights of the h- and g-shaped noise terms plus the phase difference.

    Returns (amp_h, amp_g, x) with x = phi_total_1 - phi_total_2.  amp_g is
    a sum of squares and therefore never negative.
    """
    d1 = derived_phases(p1, medium, 1, t)
    d2 = derived_phases(p2, medium, 2, t)
    n1 = p1.n_bar(t)
    n2 = p2.n_bar(t)
    amp_h = n1 * d2.phi - n2 * d1.phi
    amp_g = n1 * (d2.phi * d2.phi + d2.phi_x * d2.phi_x) + n2 * (
        d1.phi * d1.phi + d1.phi_x * d1.phi_x
    )
    x = d1.phi_total - d2.phi_total
    return amp_h, amp_g, x


@dataclass(frozen=True)
class CorrelationSample:
    """Normalized fluctuation correlation split into delta and smooth parts.

    ``smooth`` is an even callable of the time lag; ``h_weight``/``g_weight``
    record its decomposition onto the two medium kernels so that consumers
    can cross-check transforms without re-fitting.
    """

    delta_weight: float
    smooth: Callable[[float], float]
    h_weight: float
    g_weight: float
    tau_r: float


def _correlation(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    t: float,
    quadrature_shift: float,
) -> CorrelationSample:
    amp_h, amp_g, x = noise_coefficients(p1, p2, medium, t)
    x += quadrature_shift
    w_h = amp_h * math.sin(2.0 * x)
    w_g = amp_g * math.sin(x) ** 2
    tau_r = medium.tau_r

    def smooth(tau: float) -> float:
        return w_h * response_h(tau, tau_r) + w_g * correlator_g(tau, tau_r)

    return CorrelationSample(1.0, smooth, w_h, w_g, tau_r)


def correlation_s2(
    p1: PulseParams, p2: PulseParams, medium: MediumParams, t: float = 0.0
) -> CorrelationSample:
    """Fluctuation correlation of the S2 operator, normalized to n1(t)."""
    return _correlation(p1, p2, medium, t, 0.0)


def correlation_s3(
    p1: PulseParams, p2: PulseParams, medium: MediumParams, t: float = 0.0
) -> CorrelationSample:
    """Same statistics rotated to the S3 operator (x -> x + pi/2)."""
    return _correlation(p1, p2, medium, t, 0.5 * math.pi)


def _spectrum(amp_h: float, amp_g: float, x: float, lor: float) -> float:
    return (
        1.0
        + 2.0 * lor * amp_h * math.sin(2.0 * x)
        + 4.0 * lor * lor * amp_g * math.sin(x) ** 2
    )


def spectrum_s2(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    omega_reduced: float,
    t: float = 0.0,
) -> float:
    """Closed-form S2 fluctuation spectrum at reduced frequency Omega."""
    amp_h, amp_g, x = noise_coefficients(p1, p2, medium, t)
    return _spectrum(amp_h, amp_g, x, lorentzian(omega_reduced))


def spectrum_s3(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    omega_reduced: float,
    t: float = 0.0,
) -> float:
    """Closed-form S3 fluctuation spectrum (x -> x + pi/2)."""
    amp_h, amp_g, x = noise_coefficients(p1, p2, medium, t)
    return _spectrum(amp_h, amp_g, x + 0.5 * math.pi, lorentzian(omega_reduced))


def normalized_variance(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    omega_reduced: float,
    t: float = 0.0,
) -> float:
    """S* = (S - 1)/n1(t); 0 for coherent light, < 0 when squeezed."""
    n1 = p1.n_bar(t)
    if n1 <= 0.0:
        raise ValueError("normalized variance undefined when pulse 1 is vacuum")
    return (spectrum_s2(p1, p2, medium, omega_reduced, t) - 1.0) / n1


@dataclass(frozen=True)
class SpectrumCurve:
    """One sampled spectrum plus the inputs that produced it."""

    omega_grid: tuple[float, ...]
    values: tuple[float, ...]
    kind: str
    params_digest: dict[str, Any] = field(repr=False)
    negative_s: bool = False


def spectrum_curve(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    omega_grid: list[float] | tuple[float, ...],
    kind: str = "raw",
    t: float = 0.0,
) -> SpectrumCurve:
    """Sample the S2 spectrum on a strictly ascending frequency grid.

    ``kind`` selects raw S values or the normalized S*.  ``negative_s`` is
    set when any raw value drops below zero, which signals parameters far
    outside the weak-nonlinearity regime the closed forms assume.
    """
    if kind not in SPECTRUM_KINDS:
        raise ValueError(f"kind must be one of {SPECTRUM_KINDS} (got {kind!r})")
    grid = tuple(float(w) for w in omega_grid)
    if not grid:
        raise ValueError("omega_grid must not be empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("omega_grid must be strictly ascending")

    amp_h, amp_g, x = noise_coefficients(p1, p2, medium, t)
    raw = tuple(_spectrum(amp_h, amp_g, x, lorentzian(w)) for w in grid)
    if kind == "normalized":
        n1 = p1.n_bar(t)
        if n1 <= 0.0:
            raise ValueError("normalized variance undefined when pulse 1 is vacuum")
        values = tuple((v - 1.0) / n1 for v in raw)
    else:
        values = raw

    digest = {
        "n_bar0_1": p1.n_bar0,
        "n_bar0_2": p2.n_bar0,
        "gamma1": medium.gamma1,
        "gamma2": medium.gamma2,
        "gamma_xpm": medium.gamma_xpm,
        "tau_r": medium.tau_r,
        "t": t,
        "kind": kind,
    }
    return SpectrumCurve(grid, values, kind, digest, any(v < 0.0 for v in raw))
