"""Mean quantum Stokes parameters at the medium output.

For coherent inputs the intensity-like means s0, s1 pass through the lossless
medium unchanged, while the coherence components s2, s3 pick up the nonlinear
phase difference and a damping factor exp(-(delta_1 + delta_2)):

    s0 = n_1(t) + n_2(t)
    s1 = n_1(t) - n_2(t)
    s2 = 2 sqrt(n_1 n_2) exp(-(delta_1+delta_2)) cos(phi_total_2 - phi_total_1)
    s3 = 2 sqrt(n_1 n_2) exp(-(delta_1+delta_2)) sin(phi_total_2 - phi_total_1)

The polarization degree P = sqrt(s1^2 + s2^2 + s3^2) / s0 then reduces to

    P = sqrt(1 - 4 n_1 n_2 (n_1+n_2)^-2 (1 - exp(-2(delta_1+delta_2))))

which decays from 1 only through the nonlinear damping.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .params import MediumParams, PulseParams, derived_phases


@dataclass(frozen=True)
class StokesMeans:
    s0: float
    s1: float
    s2: float
    s3: float


def mean_s0_s1(p1: PulseParams, p2: PulseParams, t: float = 0.0) -> tuple[float, float]:
    """Intensity sum and difference; independent of the nonlinearity."""
    n1 = p1.n_bar(t)
    n2 = p2.n_bar(t)
    return n1 + n2, n1 - n2


def mean_s2_s3(
    p1: PulseParams, p2: PulseParams, medium: MediumParams, t: float = 0.0
) -> tuple[float, float]:
    """Coherence components including nonlinear phase and damping."""
    d1 = derived_phases(p1, medium, 1, t)
    d2 = derived_phases(p2, medium, 2, t)
    amp = 2.0 * math.sqrt(p1.n_bar(t) * p2.n_bar(t)) * math.exp(-(d1.delta + d2.delta))
    angle = d2.phi_total - d1.phi_total
    return amp * math.cos(angle), amp * math.sin(angle)


def stokes_means(
    p1: PulseParams, p2: PulseParams, medium: MediumParams, t: float = 0.0
) -> StokesMeans:
    s0, s1 = mean_s0_s1(p1, p2, t)
    s2, s3 = mean_s2_s3(p1, p2, medium, t)
    return StokesMeans(s0, s1, s2, s3)


def polarization_degree(
    p1: PulseParams, p2: PulseParams, medium: MediumParams, t: float = 0.0
) -> float:
    """Degree of polarization of the output field, in [0, 1].

    Raises ValueError when both pulses are vacuum at time t (undefined).
    """
    n1 = p1.n_bar(t)
    n2 = p2.n_bar(t)
    total = n1 + n2
    if total <= 0.0:
        raise ValueError("polarization degree undefined for vacuum input")
    d1 = derived_phases(p1, medium, 1, t)
    d2 = derived_phases(p2, medium, 2, t)
    damp = 1.0 - math.exp(-2.0 * (d1.delta + d2.delta))
    arg = 1.0 - 4.0 * n1 * n2 / (total * total) * damp
    # rounding can push the argument a hair below zero in the fully
    # depolarized corner
    return math.sqrt(max(arg, 0.0))
