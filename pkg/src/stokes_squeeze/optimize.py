"""Optimal linear phase difference minimizing the S2 fluctuation spectrum.

With everything else fixed, the spectrum depends on the pulses' linear
phases only through x = phi_total_1 - phi_total_2.  Writing u = 2x and
b' = L(Omega_0) * amp_g, the spectrum at the optimization frequency is

    S = 1 + 2 L b' + 2 L (amp_h sin u - b' cos u)

so its global minimum over u is analytic:

    S_min = 1 + 2 L^2 amp_g - 2 L sqrt(amp_h^2 + (L amp_g)^2)

attained where atan2-style alignment of (sin u, cos u) against
(amp_h, -b') holds.  ``optimal_phase`` reports the minimizing *linear phase
difference* delta_phi = linear_phase_1 - linear_phase_2 (pulse 2's linear
phase pinned to zero), folding in the nonlinear phase offset the pulses
already carry.  ``numeric_minimum`` is a deliberately independent check:
dense grid scan plus golden-section refinement of the same objective.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

from .params import MediumParams, PulseParams, constant_phase, lorentzian, zero_phase
from .spectra import noise_coefficients, spectrum_s2

TWO_PI = 2.0 * math.pi
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Optimum:
    """Closed-form optimum of the S2 spectrum over the linear phase difference.

    delta_phi_opt : minimizing linear phase difference, reported in [0, 2pi)
    s_min         : spectrum value at the optimum (at the target frequency)
    branch_index  : which of the four stationary branches won (0..3)
    degenerate    : True when the spectrum does not depend on the phase at
                    all (coherent limit); delta_phi_opt is then 0 by
                    convention
    """

    delta_phi_opt: float
    s_min: float
    branch_index: int
    degenerate: bool = False


def minimum_spectrum_value(amp_h: float, amp_g: float, lor: float) -> float:
    """Analytic minimum of 1 + 2 L amp_h sin(2x) + 4 L^2 amp_g sin(x)^2 over x.

    Algebraically 1 + 2 L^2 amp_g - 2 L sqrt(amp_h^2 + (L amp_g)^2); written
    in rationalized form to avoid the cancellation between the two large
    terms when amp_g dominates.
    """
    lb = lor * amp_g
    root = math.hypot(amp_h, lb)
    if root + lb == 0.0:
        return 1.0
    return 1.0 - 2.0 * lor * (amp_h * amp_h) / (root + lb)


def phase_objective(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    omega_reduced: float,
    t: float = 0.0,
) -> Callable[[float], float]:
    """Spectrum as a function of the linear phase difference delta_phi.

    The returned objective *replaces* both linear phases: pulse 1 gets the
    constant delta_phi, pulse 2 gets zero.  It answers "what constant phase
    setting minimizes the noise", not "what increment on the current
    phases".
    """

    def objective(delta_phi: float) -> float:
        pa = replace(p1, linear_phase=constant_phase(delta_phi))
        pb = replace(p2, linear_phase=zero_phase)
        return spectrum_s2(pa, pb, medium, omega_reduced, t)

    return objective


def optimal_phase(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    omega0_reduced: float,
    t: float = 0.0,
) -> Optimum:
    """Closed-form linear phase difference minimizing spectrum_s2 at Omega_0."""
    amp_h, amp_g, _ = noise_coefficients(p1, p2, medium, t)
    if amp_h == 0.0 and amp_g == 0.0:
        return Optimum(0.0, 1.0, 0, degenerate=True)

    lor = lorentzian(omega0_reduced)
    objective = phase_objective(p1, p2, medium, omega0_reduced, t)
    # nonlinear part of x; the linear difference adds on top of it
    _, _, offset = noise_coefficients(
        replace(p1, linear_phase=zero_phase),
        replace(p2, linear_phase=zero_phase),
        medium,
        t,
    )
    u0 = math.atan2(amp_h, lor * amp_g)
    best_phi = 0.0
    best_val = math.inf
    best_k = 0
    for k in range(4):
        x_target = -0.5 * u0 + k * (0.5 * math.pi)
        delta_phi = (x_target - offset) % TWO_PI
        val = objective(delta_phi)
        if val < best_val:
            best_val = val
            best_phi = delta_phi
            best_k = k
    return Optimum(best_phi, minimum_spectrum_value(amp_h, amp_g, lor), best_k)


def golden_section_min(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Golden-section minimum of a unimodal f on [lo, hi]; returns (x, f(x))."""
    if hi <= lo:
        raise ValueError(f"need lo < hi (got {lo}, {hi})")
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def numeric_minimum(
    p1: PulseParams,
    p2: PulseParams,
    medium: MediumParams,
    omega0_reduced: float,
    t: float = 0.0,
    grid_points: int = 4096,
    phase_tol: float = 1e-10,
) -> tuple[float, float]:
    """Brute-force minimum of spectrum_s2 over the linear phase difference.

    Dense scan of [0, 2pi) followed by golden-section refinement around the
    best grid cell.  Independent of the closed-form route by construction:
    only the public spectrum function is evaluated.  Returns
    (delta_phi, s_value) with delta_phi in [0, 2pi).
    """
    if grid_points < 8:
        raise ValueError(f"grid_points must be >= 8 (got {grid_points})")
    f = phase_objective(p1, p2, medium, omega0_reduced, t)
    step = TWO_PI / grid_points
    best_i = 0
    best_val = math.inf
    for i in range(grid_points):
        v = f(i * step)
        if v < best_val:
            best_val = v
            best_i = i
    # refine inside the bracketing cells; f is 2pi-periodic so raw angles
    # outside [0, 2pi) are fine
    lo = (best_i - 1) * step
    hi = (best_i + 1) * step
    x, fx = golden_section_min(f, lo, hi, tol=phase_tol)
    if best_val < fx:
        x, fx = best_i * step, best_val
    return x % TWO_PI, fx
