"""Acceptance gate: one test per primary criterion, at the stated tolerance.

Each test prints a single [PASS]/[FAIL] line naming its criterion, so the
-v output doubles as the acceptance report.  Runtime budgets are asserted
inside the tests themselves.
"""
import csv
import io
import math
import random
import time
from contextlib import contextmanager

import pytest

from stokes_squeeze import (
    CorrelationSample,
    MediumParams,
    PulseParams,
    correlation_s2,
    correlator_g,
    derived_phases,
    normalized_variance,
    numeric_minimum,
    optimal_phase,
    phase_objective,
    polarization_degree,
    preset_run_config,
    response_h,
    run_sweep,
    spectrum_s2,
    stokes_means,
    transform_g,
    transform_h,
    wiener_khintchine,
)
from helpers import draw_system


@contextmanager
def criterion(name: str, budget_s: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.perf_counter() - start
    if elapsed > budget_s:
        print(f"[FAIL] {name} (runtime {elapsed:.1f}s > {budget_s:.0f}s budget)")
        raise AssertionError(
            f"{name}: runtime {elapsed:.2f}s exceeded budget {budget_s}s"
        )
    print(f"[PASS] {name} ({elapsed:.2f}s)")


def _grid(sample):
    body = [l for l in sample.csv_text.splitlines() if not l.startswith("#")]
    rdr = csv.reader(io.StringIO("\n".join(body)))
    header = next(rdr)
    rows = [[float(x) for x in r] for r in rdr]
    return header, rows


def _preset_rows(name):
    return _grid(run_sweep(preset_run_config(name)))


class TestAcceptance:
    def test_coherent_floor(self):
        with criterion("coherent floor: spectrum 1, normalized variance 0", 1.0):
            off = MediumParams(0.0, 0.0, 0.0)
            p1, p2 = PulseParams(1000.0), PulseParams(500.0)
            for i in range(50):
                omega = 0.2 * i
                assert spectrum_s2(p1, p2, off, omega) == pytest.approx(
                    1.0, abs=1e-12
                )
                assert normalized_variance(p1, p2, off, omega) == pytest.approx(
                    0.0, abs=1e-12
                )

    def test_correlation_to_spectrum_link(self):
        with criterion(
            "correlation->spectrum link: quadrature transform matches closed "
            "form", 30.0,
        ):
            rng = random.Random(101)
            frequencies = (0.0, 0.5, 1.0, 2.0, 5.0)
            for _ in range(20):
                p1, p2, m = draw_system(rng, gamma_max=0.01)
                corr = correlation_s2(p1, p2, m)
                for omega in frequencies:
                    closed = spectrum_s2(p1, p2, m, omega)
                    # guard: relative comparison needs a scale; verified for
                    # this seed that no spectrum value sits near zero
                    assert abs(closed) > 1e-3
                    numeric = wiener_khintchine(corr, omega)
                    assert numeric == pytest.approx(closed, rel=1e-6)
            # pure-kernel transforms against their closed forms
            h_only = CorrelationSample(
                0.0, lambda tau: response_h(tau, 1.0), 1.0, 0.0, 1.0
            )
            g_only = CorrelationSample(
                0.0, lambda tau: correlator_g(tau, 1.0), 0.0, 1.0, 1.0
            )
            for omega in frequencies:
                assert wiener_khintchine(h_only, omega) == pytest.approx(
                    transform_h(omega), abs=1e-8
                )
                assert wiener_khintchine(g_only, omega) == pytest.approx(
                    transform_g(omega), abs=1e-8
                )

    def test_optimal_phase_certificate(self):
        with criterion(
            "optimal phase certificate: closed form matches grid+golden "
            "numeric minimum", 60.0,
        ):
            rng = random.Random(211)
            for i in range(50):
                p1, p2, m = draw_system(rng)
                omega0 = 0.0 if i % 2 == 0 else 1.0
                opt = optimal_phase(p1, p2, m, omega0)
                _, numeric_value = numeric_minimum(p1, p2, m, omega0)
                assert abs(opt.s_min - numeric_value) <= 1e-8
                s_at_opt = phase_objective(p1, p2, m, omega0)(opt.delta_phi_opt)
                # guard: relative tolerance needs |s_min| away from zero
                assert abs(opt.s_min) > 1e-2
                assert abs(s_at_opt - opt.s_min) <= 1e-10 * abs(opt.s_min)

    def test_pythagorean_mean_identity(self):
        with criterion(
            "mean identities: coherence radius and polarization degree", 5.0
        ):
            rng = random.Random(307)
            for _ in range(1000):
                p1, p2, m = draw_system(rng)
                s = stokes_means(p1, p2, m)
                d1 = derived_phases(p1, m, 1)
                d2 = derived_phases(p2, m, 2)
                radius_sq = (4.0 * p1.n_bar0 * p2.n_bar0
                             * math.exp(-2.0 * (d1.delta + d2.delta)))
                assert s.s2 ** 2 + s.s3 ** 2 == pytest.approx(
                    radius_sq, rel=1e-12
                )
                poincare = math.sqrt(s.s1 ** 2 + s.s2 ** 2 + s.s3 ** 2) / s.s0
                assert polarization_degree(p1, p2, m) == pytest.approx(
                    poincare, rel=1e-12
                )

    def test_figure_shapes(self):
        with criterion(
            "figure shapes: minima locations and curve orderings", 30.0
        ):
            _, rows3 = _preset_rows("fig3")
            for j in range(1, 5):
                col = [r[j] for r in rows3]
                assert col.index(min(col)) == 0  # minimum at the 0 grid point
            _, rows5 = _preset_rows("fig5")
            omegas = [r[0] for r in rows5]
            step = omegas[1] - omegas[0]
            for j in range(1, 7):
                col = [r[j] for r in rows5]
                arg = omegas[col.index(min(col))]
                assert abs(arg - 1.0) <= step + 1e-12
            _, rows1 = _preset_rows("fig1")
            for r in rows1:
                if r[0] > 1.0:
                    assert r[1] >= r[2] >= r[3] >= r[4]
            _, rows4 = _preset_rows("fig4")
            first = rows4[0]
            assert first[0] == 0.0
            for j in range(1, 6):
                assert first[j] > first[j + 1]

    def test_squeezing_existence_and_bound(self):
        with criterion(
            "squeezing existence: fig3(d) below shot noise, all presets "
            "bounded by -1", 10.0,
        ):
            _, rows3 = _preset_rows("fig3")
            assert rows3[0][4] < 0.0  # curve d at omega 0
            for name in ("fig1", "fig2", "fig3", "fig4", "fig5"):
                cfg = preset_run_config(name)
                for curve in cfg.curves:
                    assert curve.medium.within_approximation()
                _, rows = _grid(run_sweep(cfg))
                for r in rows:
                    for v in r[1:]:
                        assert v >= -1.0

    def test_preset_determinism(self):
        with criterion("determinism: byte-identical CSV on repeated runs", 60.0):
            for name in ("fig1", "fig2", "fig3", "fig4", "fig5"):
                cfg = preset_run_config(name)
                assert run_sweep(cfg).csv_text == run_sweep(cfg).csv_text
