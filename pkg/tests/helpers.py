"""Shared random-draw helpers for the test suite.

Draw scales are deliberately modest (photon numbers up to ~30, nonlinear
coefficients up to ~0.01) so that closed-form/numeric comparisons are not
polluted by float cancellation at extreme magnitudes.
"""
from __future__ import annotations

import math
import random

from stokes_squeeze import MediumParams, PulseParams, constant_phase


def draw_medium(rng: random.Random, gamma_max: float = 0.01) -> MediumParams:
    return MediumParams(
        gamma1=rng.uniform(1e-4, gamma_max),
        gamma2=rng.uniform(1e-4, gamma_max),
        gamma_xpm=rng.uniform(1e-4, gamma_max),
        tau_r=rng.uniform(0.5, 2.0),
    )


def draw_pulse(
    rng: random.Random, n_max: float = 30.0, with_phase: bool = True
) -> PulseParams:
    kwargs = {}
    if with_phase:
        kwargs["linear_phase"] = constant_phase(rng.uniform(0.0, 2.0 * math.pi))
    return PulseParams(n_bar0=rng.uniform(0.5, n_max), **kwargs)


def draw_system(
    rng: random.Random,
    gamma_max: float = 0.01,
    n_max: float = 30.0,
    with_phases: bool = True,
) -> tuple[PulseParams, PulseParams, MediumParams]:
    return (
        draw_pulse(rng, n_max, with_phases),
        draw_pulse(rng, n_max, with_phases),
        draw_medium(rng, gamma_max),
    )
