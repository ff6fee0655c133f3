import math
import random

import pytest

from stokes_squeeze import (
    CorrelationSample,
    MediumParams,
    QuadratureConvergenceError,
    QuadratureSpec,
    correlation_s2,
    correlator_g,
    response_h,
    spectrum_s2,
    transform_g,
    transform_h,
    wiener_khintchine,
)
from helpers import draw_system


def _sample(smooth, tau_r=1.0, delta=0.0):
    return CorrelationSample(
        delta_weight=delta, smooth=smooth, h_weight=0.0, g_weight=0.0, tau_r=tau_r
    )


class TestClosedFormTransforms:
    def test_response_transform_values(self):
        assert transform_h(0.0) == 2.0
        assert transform_h(1.0) == 1.0
        assert transform_h(0.5) == pytest.approx(1.6, rel=1e-15)
        assert transform_h(2.0) == pytest.approx(0.4, rel=1e-15)

    def test_correlator_transform_values(self):
        assert transform_g(0.0) == 4.0
        assert transform_g(1.0) == 1.0
        assert transform_g(0.5) == pytest.approx(2.56, rel=1e-15)
        assert transform_g(2.0) == pytest.approx(0.16, rel=1e-15)


class TestWienerKhintchine:
    def test_pure_shot_noise(self):
        sample = _sample(lambda tau: 0.0, delta=1.0)
        for omega in (0.0, 0.7, 2.0):
            assert wiener_khintchine(sample, omega) == 1.0

    @pytest.mark.parametrize("omega,expected", [(0.0, 2.0), (0.5, 1.6),
                                                (1.0, 1.0), (2.0, 0.4)])
    def test_response_kernel_transform(self, omega, expected):
        sample = _sample(lambda tau: response_h(tau, 1.0))
        assert wiener_khintchine(sample, omega) == pytest.approx(expected, abs=1e-8)

    @pytest.mark.parametrize("omega,expected", [(0.0, 4.0), (0.5, 2.56),
                                                (1.0, 1.0), (2.0, 0.16)])
    def test_correlator_kernel_transform(self, omega, expected):
        sample = _sample(lambda tau: correlator_g(tau, 1.0))
        assert wiener_khintchine(sample, omega) == pytest.approx(expected, abs=1e-8)

    @pytest.mark.parametrize("tau_r", [0.25, 2.0, 5.0])
    def test_reduced_frequency_scaling(self, tau_r):
        # h carries a 1/tau_r normalization, so in reduced-frequency units
        # its transform is tau_r independent
        sample = _sample(lambda tau: response_h(tau, tau_r), tau_r=tau_r)
        assert wiener_khintchine(sample, 1.0) == pytest.approx(1.0, abs=1e-8)
        assert wiener_khintchine(sample, 0.0) == pytest.approx(2.0, abs=1e-8)

    def test_random_mixtures_match_transforms(self):
        rng = random.Random(23)
        for _ in range(20):
            wh = rng.uniform(-5.0, 5.0)
            wg = rng.uniform(0.0, 5.0)
            omega = rng.uniform(0.0, 6.0)
            sample = _sample(
                lambda tau: wh * response_h(tau, 1.0) + wg * correlator_g(tau, 1.0)
            )
            expected = wh * transform_h(omega) + wg * transform_g(omega)
            assert wiener_khintchine(sample, omega) == pytest.approx(
                expected, abs=1e-8
            )

    def test_matches_closed_form_spectrum(self):
        rng = random.Random(29)
        for _ in range(10):
            p1, p2, m = draw_system(rng)
            omega = rng.uniform(0.0, 4.0)
            corr = correlation_s2(p1, p2, m)
            closed = spectrum_s2(p1, p2, m, omega)
            assert wiener_khintchine(corr, omega) == pytest.approx(
                closed, rel=1e-8, abs=1e-8
            )

    def test_tolerance_refinement_is_stable(self):
        sample = _sample(lambda tau: 3.0 * correlator_g(tau, 1.0))
        coarse_spec = QuadratureSpec(rel_tol=1e-7)
        fine_spec = QuadratureSpec(rel_tol=5e-8)
        coarse = wiener_khintchine(sample, 1.3, coarse_spec)
        fine = wiener_khintchine(sample, 1.3, fine_spec)
        assert abs(coarse - fine) <= 1e-7 * max(1.0, abs(coarse))


class TestFailureModes:
    def test_odd_smooth_part_rejected(self):
        sample = _sample(lambda tau: math.exp(-abs(tau)) + 1e-3 * tau)
        with pytest.raises(ValueError, match="not even"):
            wiener_khintchine(sample, 1.0)

    def test_subdivision_cap_raises_with_best_estimate(self):
        sample = _sample(lambda tau: response_h(tau, 1.0))
        spec = QuadratureSpec(rel_tol=1e-12, max_subdivisions=1)
        with pytest.raises(QuadratureConvergenceError) as err:
            wiener_khintchine(sample, 3.0, spec)
        # the best estimate is still in the right neighborhood
        assert err.value.best_estimate == pytest.approx(transform_h(3.0), abs=0.1)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            QuadratureSpec(window=0.0)
        with pytest.raises(ValueError):
            QuadratureSpec(rel_tol=0.0)
        with pytest.raises(ValueError):
            QuadratureSpec(max_subdivisions=0)
