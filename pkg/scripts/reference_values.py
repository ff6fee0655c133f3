#!/usr/bin/env python3
"""Recompute the high-precision reference constants frozen in the test suite.

Everything here is evaluated with 50-digit mpmath arithmetic straight from the
raw inputs (gamma coefficients, photon numbers, linear phases), independently
of the library code. The printed values are copied verbatim into the tests;
rerun this script if a frozen constant ever needs to be audited.
"""

import mpmath as mp

mp.mp.dps = 50


def phases(gamma, gamma_x, nbar):
    """SPM/XPM phase and damping additions for one pulse at t=0, r(0)=1."""
    phi = 2 * mp.mpf(gamma) * nbar
    mu = mp.mpf(gamma) ** 2 * nbar / 2
    phi_x = 2 * mp.mpf(gamma_x) * nbar
    mu_x = mp.mpf(gamma_x) ** 2 * nbar / 2
    return phi, mu, phi_x, mu_x


def report(name, value):
    print(f"{name} = {mp.nstr(value, 30)}")


def main():
    # --- Stokes means, asymmetric SPM, zero linear phases -------------------
    g1, g2, gx = mp.mpf("0.001"), mp.mpf("0.004"), mp.mpf("0.0005")
    n1 = n2 = mp.mpf(1000)
    phi1, mu1, phix1, mux1 = phases(g1, gx, n1)
    phi2, mu2, phix2, mux2 = phases(g2, gx, n2)
    delta_sum = (mu1 + mux1) + (mu2 + mux2)
    big_phi1 = phi1 - phix1  # zero linear phases
    big_phi2 = phi2 - phix2
    amp = 2 * mp.sqrt(n1 * n2) * mp.exp(-delta_sum)
    report("mean_s2", amp * mp.cos(big_phi2 - big_phi1))
    report("mean_s3", amp * mp.sin(big_phi2 - big_phi1))

    # --- correlation smooth part at tau=1, tau_r=1, same parameters ---------
    x = big_phi1 - big_phi2
    weight_h = (n1 * phi2 - n2 * phi1) * mp.sin(2 * x)
    weight_g = (n1 * (phi2**2 + phix2**2) + n2 * (phi1**2 + phix1**2)) * mp.sin(x) ** 2
    report("corr_weight_h", weight_h)
    report("corr_weight_g", weight_g)
    h1 = mp.exp(-1)
    g1_val = 2 * mp.exp(-1)
    report("corr_smooth_at_1", weight_h * h1 + weight_g * g1_val)

    # spectrum at Omega = 1 for the same draw (L = 1/2), used as a spot pin
    lor = mp.mpf(1) / 2
    report("spectrum_omega1", 1 + 2 * lor * weight_h + 4 * lor**2 * weight_g)

    # --- strong-squeezing regime: gamma2=4*gamma1, gamma_xpm=gamma1/2, ------
    # n2=3*n1, phi_{0,1}=2, phase difference optimal at Omega0=0, eval at 0.
    n1 = mp.mpf(10) ** 6
    rho = mp.mpf(3)
    phi01 = mp.mpf(2)
    gamma1 = phi01 / (2 * n1)
    n2 = rho * n1
    phi1 = 2 * gamma1 * n1
    phi2 = 2 * (4 * gamma1) * n2
    phix1 = 2 * (gamma1 / 2) * n1
    phix2 = 2 * (gamma1 / 2) * n2
    a = n1 * phi2 - n2 * phi1
    b = n1 * (phi2**2 + phix2**2) + n2 * (phi1**2 + phix1**2)
    report("fig_regime_a", a)
    report("fig_regime_b", b)
    s_min = 1 + 2 * b - 2 * mp.sqrt(a**2 + b**2)  # L(0) = 1
    report("fig_regime_s_min", s_min)
    report("fig_regime_sstar_min", (s_min - 1) / n1)
    # optimal x = Phi1 - Phi2 realizing the minimum (principal stationary point)
    x_opt = -mp.atan2(a, b) / 2
    report("fig_regime_x_opt", x_opt)
    s_at_x = 1 + 2 * a * mp.sin(2 * x_opt) + 4 * b * mp.sin(x_opt) ** 2
    report("fig_regime_s_at_x_opt", s_at_x)

    # --- analytic transforms of the response kernels at a few frequencies ---
    for omega in ("0.5", "2"):
        w = mp.mpf(omega)
        lor = 1 / (1 + w**2)
        report(f"transform_h_at_{omega}", 2 * lor)
        report(f"transform_g_at_{omega}", 4 * lor**2)

    # quadrature cross-check of the kernel transforms (mpmath quad, not scipy)
    h = lambda tau: mp.exp(-abs(tau))
    g = lambda tau: (1 + abs(tau)) * mp.exp(-abs(tau))
    for omega in ("0.5", "2"):
        w = mp.mpf(omega)
        ih = 2 * mp.quad(lambda u: h(u) * mp.cos(w * u), [0, 40])
        ig = 2 * mp.quad(lambda u: g(u) * mp.cos(w * u), [0, 40])
        report(f"quad_h_at_{omega}", ih)
        report(f"quad_g_at_{omega}", ig)


if __name__ == "__main__":
    main()
